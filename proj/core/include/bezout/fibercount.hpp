#pragma once

#include <bezout/error.hpp>
#include <bezout/poly.hpp>
#include <bezout/qlinalg.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bezout::fibercount {

using qlinalg::QMat;
using qlinalg::Subspace;

struct ValidityReport {
  bool valid = false;
  std::optional<Errc> failure;  // infinite_fiber or degree_drop
  std::string message;
  BivarPoly gcd;                // gcd(F1, F2) when computable
};

// Fails when F1 and F2 share a nonconstant factor (positive-dimensional zero
// set) or when both drop below their declared degrees.
ValidityReport validate_system(const PolySystem& s);
// Throws Error(infinite_fiber | degree_drop) for invalid systems.
void require_valid(const PolySystem& s);

struct GeneralityReport {
  bool valid = false;
  int witness_index = 0;                 // 1 or 2 when valid
  std::array<Rational, 2> infinity_point;  // direction of the line H' = 0
};

// Hp must be a nonzero homogeneous linear polynomial (Errc::zero_polynomial
// otherwise).
GeneralityReport check_general(const PolySystem& s, const BivarPoly& hp);
// Throws Errc::no_general_line when (S, Hp) is not general.
void require_general(const PolySystem& s, const BivarPoly& hp);

// Candidate k of the fixed search sequence X2, X1, X1 - X2, X1 + X2, X1 - 2 X2, ...
BivarPoly candidate_line(int k);
// First candidate that makes (S, H') general.
BivarPoly choose_general_line(const PolySystem& s);

// Span of F1 Q2 + F2 Q1 with Q_i homogeneous of degree n_i - 1, inside
// polynomials of degree <= n1 + n2 - 1 (coordinates in the shared monomial order).
Subspace build_K(const PolySystem& s);

// (K + Hp Ki) intersected with the polynomials of degree <= top - 1, where
// top is the degree bound of K's ambient space.
Subspace filtration_step(const Subspace& k, const Subspace& ki, const BivarPoly& hp);

struct Filtration {
  std::size_t prefix_dim = 0;     // dim of polynomials of degree <= n1 + n2 - 2
  Subspace K;
  std::vector<Subspace> chain;    // K_0, K_1, ... through the first repeat
  std::vector<std::size_t> dims;
  std::size_t stabilized_at = 0;  // first i with K_{i+1} = K_i
};

struct FiltrationCount {
  int count = 0;
  Filtration filtration;
  BivarPoly line;  // H' actually used
};

// |F^{-1}(0)| with multiplicity as n1 n2 - dim K_inf. Picks H' with
// choose_general_line when none is given.
FiltrationCount count_filtration(const PolySystem& s, const std::optional<BivarPoly>& hp = std::nullopt);

// Maximum fiber size over `trials` seeded random integer targets y (count of
// F - y). Throws Errc::non_dominant when J(F) = 0.
int degree_of_mapping(const PolySystem& s, int trials, std::uint64_t seed = 0);

/// Inhomogeneous form of the complex maps, used for structural checks:
///   gamma  (Q1, Q2, G) -> (D_{n1-1} Q1, D_{n2-1} Q2, -G)
///   gamma' (Q1, Q2, G) -> (0, F1 Q2 + F2 Q1 - H' G)
/// on  C[X]_{<=n1-1} x C[X]_{<=n2-1} x C[X]_{<=n1+n2-2}
/// into C[X]_{<=n1-2} x C[X]_{<=n2-2} x C[X]_{<=n1+n2-1}, D_m the Euler weight.
struct InhomogeneousComplex {
  QMat gamma;
  QMat gamma_prime;
  std::size_t dimM = 0;
  std::size_t dimMpp = 0;
};
InhomogeneousComplex build_gamma(const PolySystem& s, const BivarPoly& hp);

// {0} x K for a subspace K of C[X]_{<=n1+n2-1}, inside M x M''.
Subspace embed_in_target(const Subspace& k, std::size_t dimM);

}  // namespace bezout::fibercount
