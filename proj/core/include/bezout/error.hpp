#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezout {

enum class Errc {
  parse,
  degree_overflow,
  singular_matrix,
  dimension_mismatch,
  shape_mismatch,
  zero_polynomial,
  zero_vector,
  infinite_fiber,
  degree_drop,
  no_general_line,
  not_divisible,
  identically_zero,
  singular_pencil,
  interpolation_singular,
  evaluation_point,
  non_dominant,
  ill_conditioned,
  fit_diverged,
  non_integer_sum,
  numeric_unstable,
  invalid_spec,
  internal,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures also carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bezout
