#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pqsaddle/commands.hpp"
#include "pqsaddle/system_file.hpp"
#include "support.hpp"

using namespace pqs;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pqsaddle");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(PQS_DATA_DIR) / name).string(); }

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = fs::temp_directory_path() / ("pqsaddle_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Every "text" field in a report must re-parse to the polynomial its terms describe.
void check_polynomial_strings(const nlohmann::json& j, const Ring& ring, int& seen) {
  if (j.is_object()) {
    if (j.contains("text") && j.contains("terms")) {
      auto f = parse_polynomial(j["text"].get<std::string>(), ring);
      Polynomial g(ring);
      for (const auto& t : j["terms"]) {
        Monomial m(ring->size());
        for (const auto& v : t["monomial"])
          m.set(*ring->index_of(v["variable"].get<std::string>()), v["exponent"].get<unsigned>());
        g.add_term(m, Rational::parse(t["coefficient"].get<std::string>()));
      }
      REQUIRE(f == g);
      REQUIRE(to_string(f) == j["text"].get<std::string>());
      ++seen;
    }
    for (const auto& [k, v] : j.items()) check_polynomial_strings(v, ring, seen);
  } else if (j.is_array()) {
    for (const auto& v : j) check_polynomial_strings(v, ring, seen);
  }
}

}  // namespace

TEST_CASE("sibirsky command lists the level-one binomial") {
  auto r = cli({"sibirsky", "--level", "3", data("example5.sys")});
  CHECK(r.code == 0);
  CHECK(r.out.find("2*a21 - b21") != std::string::npos);
  CHECK(r.out.find("4*a20*a01 - b20*b01") != std::string::npos);
}

TEST_CASE("implicitize command and the Sibirsky comparison") {
  auto plain = cli({"implicitize", data("example5.sys")});
  CHECK(plain.code == 0);
  CHECK(std::count(plain.out.begin(), plain.out.end(), '\n') == 9);
  auto checked = cli({"implicitize", "--check-against", "sibirsky", "--level", "3", data("example5.sys")});
  CHECK(checked.code == 0);
  CHECK(checked.out.find("ideals equal: true") != std::string::npos);
  auto low = cli({"implicitize", "--check-against", "sibirsky", "--level", "1", data("example5.sys")});
  CHECK(low.code == 1);
  CHECK(low.out.find("ideals equal: false") != std::string::npos);
  CHECK(cli({"implicitize", "--order", "degrevlex", data("example5.sys")}).code == 0);
  CHECK(cli({"implicitize", "--order", "bogus", data("example5.sys")}).code == 2);
  CHECK(cli({"implicitize", "--check-against", "oracle", data("example5.sys")}).code == 2);
}

TEST_CASE("reversible command exit codes") {
  auto yes = cli({"reversible", data("reversible5.sys")});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("reversible: true") != std::string::npos);
  auto no = cli({"reversible", write_temp("nonrev.sys", "resonance 1 2\nterm 0 1 a=1 b=3\n")});
  CHECK(no.code == 1);
  CHECK(no.out.find("reversible: false") != std::string::npos);
  CHECK(cli({"reversible", data("example5.sys")}).code == 2);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(cli({"quantities", "/nonexistent/file.sys"}).code == 2);
  auto bad = cli({"quantities", write_temp("bad.sys", "resonance 2 4\nterm 1 0\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 1") != std::string::npos);
  CHECK(cli({"frobnicate", data("example5.sys")}).code == 2);
  CHECK(cli({"quantities", "--level", "x", data("example5.sys")}).code == 2);
  CHECK(cli({"integral", "--degree", "2", data("example5.sys")}).code == 2);
  CHECK(cli({"membership", data("example5.sys")}).code == 2);
  CHECK(cli({"membership", "--poly", "a21 +", data("example5.sys")}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("quantities, integral and membership commands") {
  auto q = cli({"quantities", "--level", "2", data("example5.sys")});
  CHECK(q.code == 0);
  CHECK(q.out.find("g21 = -2*a20*a01 + 1/2*b20*b01 - 2*a21 + b21") != std::string::npos);
  auto z = cli({"quantities", "--level", "3", data("reversible5.sys")});
  CHECK(z.out == "g21 = 0\ng42 = 0\ng63 = 0\n");
  auto i = cli({"integral", "--degree", "6", data("example5.sys")});
  CHECK(i.code == 0);
  CHECK(i.out.find("v(0,1) = -a01 + 1/2*b01") != std::string::npos);
  CHECK(i.out.find("residual zero: true") != std::string::npos);
  auto member = cli({"membership", "--poly", "2*a21 - b21 + a01*(4*a20*a01 - b20*b01)", data("example5.sys")});
  CHECK(member.code == 0);
  CHECK(member.out.find("member: true") != std::string::npos);
  auto not_member = cli({"membership", "--poly", "a21", data("example5.sys")});
  CHECK(not_member.code == 1);
  CHECK(not_member.out.find("normal form: 1/2*b21") != std::string::npos);
  CHECK(cli({"membership", "--quantity", "3", "--level", "3", data("example5.sys")}).code == 0);
}

TEST_CASE("groebner command") {
  auto r = cli({"groebner", "--order", "lex", data("elimination.poly")});
  CHECK(r.code == 0);
  CHECK(r.out == "x^2 - y\nt - x\n");
  auto inferred = cli({"groebner", write_temp("inferred.poly", "# no vars line\nx*y - 1\ny^2 - 1\n")});
  CHECK(inferred.code == 0);
  CHECK(inferred.out == "x - y\ny^2 - 1\n");
  CHECK(cli({"groebner", write_temp("empty.poly", "# nothing\n")}).code == 2);
  CHECK(cli({"groebner", write_temp("late.poly", "x\nvars x\n")}).code == 2);
}

TEST_CASE("JSON reports are valid, stable and re-parseable") {
  auto fam = parse_system_file(slurp(data("example5.sys")));
  const std::vector<std::vector<std::string>> commands{
      {"quantities", "--level", "2"}, {"integral", "--degree", "7"}, {"sibirsky", "--level", "2"},
      {"implicitize", "--check-against", "sibirsky", "--level", "3"}, {"membership", "--quantity", "2"}};
  for (auto args : commands) {
    CAPTURE(args[0]);
    std::string a = write_temp("a.json", ""), b = write_temp("b.json", "");
    auto run = [&](const std::string& path) {
      auto full = args;
      full.insert(full.end(), {"--json", path, data("example5.sys")});
      return cli(full);
    };
    REQUIRE(run(a).code == 0);
    REQUIRE(run(b).code == 0);
    auto ja = nlohmann::json::parse(slurp(a)), jb = nlohmann::json::parse(slurp(b));
    CHECK(ja["command"] == args[0]);
    CHECK(ja["family"]["p"] == 1);
    CHECK(ja["family"]["q"] == 2);
    CHECK(ja["family"]["terms"].size() == 5);
    CHECK(ja["millis"].is_number());
    CHECK(ja["inputs_digest"].get<std::string>().size() == 16);
    ja.erase("millis");
    jb.erase("millis");
    CHECK(ja.dump() == jb.dump());
    int seen = 0;
    check_polynomial_strings(ja["result"], fam.parameter_ring(), seen);
    CHECK(seen > 0);
  }
  auto r1 = cmd_sibirsky(slurp(data("example5.sys")), 2), r2 = cmd_sibirsky(slurp(data("example5.sys")), 3);
  CHECK(r1.inputs_digest != r2.inputs_digest);
  auto rev = nlohmann::json::parse(cmd_reversible(slurp(data("reversible5.sys"))).json);
  CHECK(rev["result"]["reversible"] == true);
  CHECK(rev["family"]["terms"][4]["a"] == "1/2");
  CHECK(rev["family"]["terms"][0]["b"] == "6/1");
}
