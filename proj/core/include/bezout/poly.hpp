#pragma once

#include <bezout/rational.hpp>

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace bezout {

// Monomial order shared by BivarPoly and TernaryForm coefficient vectors:
// ascending total degree e = i + j, then descending power of X1 inside a
// degree. The first dense_dim(e) coordinates therefore span exactly the
// polynomials of degree <= e.
constexpr std::size_t dense_dim(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

constexpr std::size_t monomial_index(int i, int j) {
  const int e = i + j;
  return dense_dim(e - 1) + static_cast<std::size_t>(e - i);
}

struct Exponent {
  int i = 0;
  int j = 0;
};

// Inverse of monomial_index.
Exponent monomial_exponent(std::size_t index);

/// Polynomial in X1, X2 over the rationals with a declared degree bound.
///
/// Coefficients are stored densely in the shared monomial order, so the
/// vector has dense_dim(dbound) entries. Equality compares polynomial values
/// and ignores the declared bound.
class BivarPoly {
 public:
  BivarPoly() : BivarPoly(0) {}
  explicit BivarPoly(int dbound);
  BivarPoly(int dbound, std::vector<Rational> coeffs);

  static BivarPoly constant(const Rational& c, int dbound = 0);
  static BivarPoly monomial(const Rational& c, int i, int j, int dbound = -1);
  static BivarPoly x1(int dbound = 1) { return monomial(Rational(1), 1, 0, dbound); }
  static BivarPoly x2(int dbound = 1) { return monomial(Rational(1), 0, 1, dbound); }

  int dbound() const { return dbound_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int i, int j) const;
  void set(int i, int j, const Rational& c);

  // -1 for the zero polynomial.
  int degree() const;
  int degree_x1() const;
  int degree_x2() const;
  bool is_zero() const;
  bool is_constant() const { return degree() <= 0; }

  // Same polynomial, new declared bound; throws Errc::degree_overflow when the
  // polynomial does not fit.
  BivarPoly with_bound(int dbound) const;

  Rational operator()(const Rational& x1, const Rational& x2) const;
  std::complex<double> operator()(std::complex<double> x1, std::complex<double> x2) const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  BivarPoly& operator*=(const Rational& c);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(BivarPoly a, const Rational& c) { return a *= c; }
  friend BivarPoly operator*(const Rational& c, BivarPoly a) { return a *= c; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator-() const { return *this * Rational(-1); }
  BivarPoly pow(int e) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b);

  BivarPoly partial_x1() const;
  BivarPoly partial_x2() const;

  // Canonical text, descending total degree; parse_poly reads it back.
  std::string str() const;

 private:
  int dbound_;
  std::vector<Rational> coeffs_;
};

/// Homogeneous form of degree m in x1, x2, x3. The coefficient of
/// x1^i x2^j x3^(m-i-j) sits at monomial_index(i, j), which makes
/// homogenize/dehomogenize plain coefficient copies. Negative degrees denote
/// the zero space.
class TernaryForm {
 public:
  TernaryForm() : TernaryForm(0) {}
  explicit TernaryForm(int m);
  TernaryForm(int m, std::vector<Rational> coeffs);

  static TernaryForm linear(const Rational& a1, const Rational& a2, const Rational& a3);
  static TernaryForm monomial(const Rational& c, int i, int j, int k);
  // Basis vector number `index` of S^m.
  static TernaryForm basis(int m, std::size_t index);

  int degree() const { return m_; }
  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& c);
  bool is_zero() const;

  Rational operator()(const std::array<Rational, 3>& a) const;

  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  TernaryForm& operator*=(const Rational& c);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, const Rational& c) { return a *= c; }
  friend TernaryForm operator*(const Rational& c, TernaryForm a) { return a *= c; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) = default;

  std::string str() const;

 private:
  int m_;
  std::vector<Rational> coeffs_;
};

struct PolySystem {
  PolySystem() = default;
  // Throws Errc::degree_overflow when F1/F2 do not fit n1/n2, and
  // Errc::invalid_spec when a bound is < 1.
  PolySystem(int n1, int n2, const BivarPoly& f1, const BivarPoly& f2);

  int n1 = 1;
  int n2 = 1;
  BivarPoly F1{1};
  BivarPoly F2{1};
};

// theta: G -> x3^m G(x1/x3, x2/x3), and its inverse.
TernaryForm homogenize(const BivarPoly& g, int m);
BivarPoly dehomogenize(const TernaryForm& f);
std::array<TernaryForm, 2> homogenize(const PolySystem& s);

// Degree-m homogeneous component of G.
BivarPoly top_form(const BivarPoly& g, int m);

// sum_i a_i d/dx_i.
TernaryForm directional_derivative(const TernaryForm& q, const std::array<Rational, 3>& a);

// X1^m1 X2^m2 -> (m - m1 - m2) X1^m1 X2^m2.
BivarPoly euler_weight(const BivarPoly& g, int m);

BivarPoly jacobian(const PolySystem& s);

using Mat2 = std::array<std::array<Rational, 2>, 2>;
using Vec2 = std::array<Rational, 2>;

// G(A X + b).
BivarPoly substitute(const BivarPoly& g, const Mat2& a, const Vec2& b);
// F_i(A X + b) for both components; A must be invertible.
PolySystem linear_substitution(const PolySystem& s, const Mat2& a, const Vec2& b);

}  // namespace bezout
