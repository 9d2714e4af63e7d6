#pragma once

#include <bezout/poly.hpp>
#include <bezout/qlinalg.hpp>
#include <bezout/upoly.hpp>

#include <array>
#include <cstddef>

namespace bezout::eliminant {

using qlinalg::QMat;
using Point3 = std::array<Rational, 3>;
using FormPair = std::array<TernaryForm, 2>;

/// Dimensions of the resultant complex 0 -> M -> M' -> M'' -> 0 with
///   M   = S^{n1-2} x S^{n2-2}
///   M'  = S^{n1-1} x S^{n2-1} x S^{n1+n2-2}
///   M'' = S^{n1+n2-1}
/// where S^m is the space of ternary forms of degree m (zero for m < 0).
/// Every block uses the TernaryForm coefficient order.
struct ComplexSpaces {
  ComplexSpaces(int n1, int n2);

  int n1;
  int n2;
  std::size_t dimM;
  std::size_t dimMp;
  std::size_t dimMpp;
};

// (r1, r2) -> (s r1, s r2, f1 r2 + f2 r1); dimMp x dimM.
QMat build_beta(const FormPair& f, const TernaryForm& s);
// (q1, q2, g) -> f1 q2 + f2 q1 - s g; dimMpp x dimMp.
QMat build_beta_prime(const FormPair& f, const TernaryForm& s);
// (q1, q2, g) -> (D_a q1, D_a q2) with D_a the derivative along a; dimM x dimMp.
// Needs the block degrees, so it takes (n1, n2) explicitly.
QMat build_alpha(int n1, int n2, const Point3& a);

// Resultant R(f, s) times a nonzero constant that depends only on (n1, n2):
// det(alpha(a) over beta'(f, s)) / s(a)^dimM. Throws Errc::evaluation_point
// when s(a) = 0.
Rational resultant_value(const FormPair& f, const TernaryForm& s, const Point3& a);

struct ResultantPencil {
  UPoly coeffs;  // c * R(f, h' + t h)
  bool global_scale_unknown = true;
  int degree() const { return coeffs.degree(); }
};

// R(f, h' + t h) as an exact polynomial in t (up to the global constant).
// Requires h'(a) = 0 and h(a) != 0. Throws Errc::not_divisible when the
// interpolated determinant is not divisible by (t h(a))^dimM and
// Errc::identically_zero when the result vanishes (positive-dimensional
// intersection).
ResultantPencil pencil_resultant(const FormPair& f, const TernaryForm& h, const TernaryForm& h_prime, const Point3& a);

// Number of affine common zeros (with multiplicity) as deg_t R(f, h' + t x3)
// with f = theta(S) and h' = theta(Hp). Validates S and the generality of
// (S, Hp) first.
int count_via_eliminant(const PolySystem& s, const BivarPoly& hp);

// Q(f) in S^N C^3, N = n1 n2, up to the global constant: the degree-N form
// in line coordinates (h1, h2, h3) whose value at h is resultant_value(f, h).
TernaryForm eliminant_coeffs(const FormPair& f);

}  // namespace bezout::eliminant
