#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pqsaddle/commands.hpp"
#include "pqsaddle/groebner.hpp"
#include "pqsaddle/integral.hpp"
#include "pqsaddle/system_file.hpp"

namespace py = pybind11;
using namespace pqs;

namespace {

MonomialOrder order_named(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "deglex") return MonomialOrder::deglex();
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

std::vector<std::string> render(const std::vector<Polynomial>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Saddle quantities, first integrals and Groebner bases for p:-q resonant saddles";

  py::register_exception<SystemFileError>(m, "SystemFileError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("command", &RunReport::command)
      .def_readonly("inputs_digest", &RunReport::inputs_digest)
      .def_readonly("text", &RunReport::text)
      .def_readonly("json", &RunReport::json)
      .def_readonly("exit_code", &RunReport::exit_code)
      .def_readonly("millis", &RunReport::millis);

  m.def("quantities", &cmd_quantities, py::arg("system_text"), py::arg("level"));
  m.def("integral", &cmd_integral, py::arg("system_text"), py::arg("degree"));
  m.def("reversible", &cmd_reversible, py::arg("system_text"));
  m.def("sibirsky", &cmd_sibirsky, py::arg("system_text"), py::arg("level"));
  m.def(
      "implicitize",
      [](const std::string& text, const std::string& order, std::optional<unsigned> check_level) {
        ImplicitizeCommandOptions opts;
        opts.inner = order_named(order).kind();
        opts.check_sibirsky_level = check_level;
        return cmd_implicitize(text, opts);
      },
      py::arg("system_text"), py::arg("order") = "lex", py::arg("check_sibirsky_level") = py::none());
  m.def("membership", &cmd_membership, py::arg("system_text"), py::arg("expression"), py::arg("level"));
  m.def("quantity_membership", &cmd_quantity_membership, py::arg("system_text"), py::arg("k"), py::arg("level"));
  m.def("groebner", &cmd_groebner, py::arg("poly_text"), py::arg("order") = "degrevlex");

  m.def(
      "saddle_quantities",
      [](const std::string& text, unsigned level) {
        return render(compute_saddle_quantities(parse_system_file(text), level).g);
      },
      py::arg("system_text"), py::arg("level"));
  m.def(
      "reduced_groebner_basis",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& variables, const std::string& order) {
        Ring ring = VariableSet::make(variables);
        return render(reduced_groebner_basis(parse_all(polys, ring), order_named(order)).elements);
      },
      py::arg("polys"), py::arg("variables"), py::arg("order") = "degrevlex");
  m.def(
      "normal_form",
      [](const std::string& f, const std::vector<std::string>& basis, const std::vector<std::string>& variables,
         const std::string& order) {
        Ring ring = VariableSet::make(variables);
        return to_string(normal_form(parse_polynomial(f, ring), parse_all(basis, ring), order_named(order)));
      },
      py::arg("f"), py::arg("basis"), py::arg("variables"), py::arg("order") = "degrevlex");
  m.def(
      "eliminate",
      [](const std::vector<std::string>& polys, const std::vector<std::string>& variables, std::size_t count) {
        Ring ring = VariableSet::make(variables);
        std::vector<std::string> elim(variables.begin(), variables.begin() + std::min(count, variables.size()));
        return render(eliminate(parse_all(polys, ring), elim, MonomialOrder::Kind::DegRevLex));
      },
      py::arg("polys"), py::arg("variables"), py::arg("count"));
}
