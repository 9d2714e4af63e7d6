#pragma once

#include <bezout/poly.hpp>
#include <bezout/upoly.hpp>

#include <utility>
#include <vector>

namespace bezout {

/// A bivariate polynomial read as a polynomial in X2 whose coefficients are
/// univariate polynomials in X1. Entry k multiplies X2^k; trailing zero
/// entries are trimmed.
using X2Poly = std::vector<UPoly>;

X2Poly to_x2_poly(const BivarPoly& p);
// Bound of the result is its degree (0 for zero).
BivarPoly from_x2_poly(const X2Poly& p);

// Primitive gcd over Q[X1, X2], normalized so that the leading coefficient
// (highest total degree, then highest power of X1) is 1. Throws
// Errc::zero_polynomial when both inputs are zero.
BivarPoly gcd_bivariate(const BivarPoly& p, const BivarPoly& q);

// Exact quotient a / b; throws Errc::not_divisible when b does not divide a.
BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b);

// Square-free decomposition with respect to X2 (Yun). Entry k is the product
// of the factors of multiplicity k + 1. Factors depending on X1 alone are
// not reported, so callers pass polynomials with constant content in X1
// (e.g. polynomials proper in X2).
std::vector<BivarPoly> squarefree_x2(const BivarPoly& p);

}  // namespace bezout
