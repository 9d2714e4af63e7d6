#pragma once

#include <bezout/poly.hpp>
#include <bezout/upoly.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bezout::oracle {

// Determinant of the Sylvester matrix of two univariate coefficient lists
// (constant term first) taken with the given formal degrees. Leading
// coefficients may vanish; the formal degrees fix the matrix size.
Rational sylvester_determinant(std::span<const Rational> p, int deg_p, std::span<const Rational> q, int deg_q);

// Res_{X2}(p, q) as a polynomial in X1, taken with the actual X2-degrees.
UPoly sylvester_resultant(const BivarPoly& p, const BivarPoly& q);

// deg_t of the Sylvester resultant of f1, f2 restricted to the projective
// line {h' + t x3 = 0}. Validates S and the generality of (S, Hp) first.
int count_via_line_pencil(const PolySystem& s, const BivarPoly& hp);

// Floating-point count: roots of Res_{X2}(F1, F2) with multiplicity after the
// properness substitution. Throws Errc::numeric_unstable when the roots of a
// square-free factor cannot be separated.
int numeric_count(const PolySystem& s);

enum class Family { random, line_products, automorphism, dk_family };

std::string to_string(Family f);
// Throws Errc::invalid_spec for unknown names.
Family family_from_string(const std::string& name);

/// For dk_family, n1 is the degree n of F1 and n2 the degree d of g, and the
/// generated system has bounds (n, max(n, d)). For automorphism, n1 and n2
/// cap the component degrees and the declared bounds are the actual degrees.
struct GeneratorSpec {
  Family family = Family::random;
  int n1 = 1;
  int n2 = 1;
  int bound = 5;
  std::uint64_t seed = 0;
};

struct Generated {
  PolySystem system;
  int rejections = 0;
  std::optional<std::vector<std::array<Rational, 2>>> points;  // line_products
  std::optional<int> degree;                                     // automorphism: 1
  std::optional<int> jacobian_degree_bound;                      // automorphism: 0, dk_family: n + d - 2
};

// Deterministic in the spec. Degenerate draws are rejected and redrawn (at
// most 100 times; Errc::invalid_spec afterwards and for malformed specs).
Generated generate(const GeneratorSpec& spec);

}  // namespace bezout::oracle
