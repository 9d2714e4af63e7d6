#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bezout {

// Exact scalar field. GMP keeps every mpq_class result in lowest terms with a
// positive denominator; values built from raw num/den pairs go through
// make_rational so the invariant holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

double to_double(const Rational& r);

}  // namespace bezout
