#pragma once

#include <bezout/poly.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace bezout::cli {

// Exit codes. usage also covers malformed input files.
enum Exit : int {
  ok = 0,
  usage = 1,
  invalid_system = 2,
  no_general_line = 3,
  numeric_failure = 4,
  disagreement = 5,
};

/// key=value system description:
///   # comment
///   [system]
///   n1 = 2
///   n2 = 1
///   F1 = x*y - 1
///   F2 = x
///   H = x - y        (optional)
/// plus optional precision, seed and radius settings.
struct SystemFile {
  int n1 = 0;
  int n2 = 0;
  std::string F1;
  std::string F2;
  std::optional<std::string> H;
  std::optional<double> precision;
  std::optional<std::uint64_t> seed;
  std::optional<double> radius;
};

// Throws ParseError with the line number as position on malformed input.
SystemFile parse_system_file(std::string_view text);
std::string format_system_file(const PolySystem& s);

// Runs the command line; reports go to `out`, logs to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bezout::cli
