#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pqsaddle/system.hpp"

namespace pqs {

/// Malformed or invalid system file; line is 1-based (0 when not tied to a line).
class SystemFileError : public std::runtime_error {
public:
  SystemFileError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Line-oriented format, '#' starts a comment, blank lines are ignored:
///
///     resonance <p> <q>
///     term <u> <v> [a=<rational>] [b=<rational>]
///
/// Omitted values are symbolic.
SystemFamily parse_system_file(std::string_view text);

/// Inverse of parse_system_file for any family (terms in canonical order).
std::string emit_system_file(const SystemFamily& family);

}  // namespace pqs
