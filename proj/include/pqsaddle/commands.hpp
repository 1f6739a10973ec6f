#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pqsaddle/implicitize.hpp"

namespace pqs {

/// Bad user input (unreadable file, bad flag value, parse failure). Maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Outcome of one subcommand. `json` is the machine-readable report
///   {"command", "inputs_digest", "family", "result", "millis"}
/// and is byte-identical across runs apart from "millis".
struct RunReport {
  std::string command;
  std::string inputs_digest;
  std::string text;
  std::string json;
  /// 0 success, 1 negative verdict.
  int exit_code = 0;
  double millis = 0;
};

struct ImplicitizeCommandOptions {
  MonomialOrder::Kind inner = MonomialOrder::Kind::Lex;
  ParameterOrder parameter_order = ParameterOrder::Canonical;
  /// When set, also compare with the Sibirsky ideal of this level.
  std::optional<unsigned> check_sibirsky_level;
};

/// Each takes the text of a system file; parse failures throw SystemFileError.
RunReport cmd_quantities(std::string_view system_text, unsigned K);
RunReport cmd_integral(std::string_view system_text, unsigned D);
RunReport cmd_reversible(std::string_view system_text);
RunReport cmd_sibirsky(std::string_view system_text, unsigned K);
RunReport cmd_implicitize(std::string_view system_text, const ImplicitizeCommandOptions& options = {});
/// Membership of `expression` (over the family's parameters) in the Sibirsky ideal of level K.
RunReport cmd_membership(std::string_view system_text, std::string_view expression, unsigned K);
/// Membership of the saddle quantity g_{qk,pk} in the Sibirsky ideal of level K.
RunReport cmd_quantity_membership(std::string_view system_text, unsigned k, unsigned K);

/// Polynomial file: one polynomial per line, '#' comments, and an optional
/// leading `vars x y z` line fixing the variable order (otherwise variables
/// are taken in order of first appearance).
RunReport cmd_groebner(std::string_view poly_text, std::string_view order_name);

/// Full command line: `pqsaddle <subcommand> [flags] <file>`. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pqs
