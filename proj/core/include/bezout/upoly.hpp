#pragma once

#include <bezout/rational.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bezout {

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& c, int degree);
  static UPoly variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(int e) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
// Exact quotient, throws Errc::not_divisible when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

// Square-free factors: result[k] is the product of the irreducible factors of
// multiplicity k + 1 (monic, possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

/// Interpolation node sequence 0, 1, -1, 2, -2, ...
Rational interpolation_node(int k);

/// Unique polynomial of degree < nodes.size() through the given points.
UPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

}  // namespace bezout
