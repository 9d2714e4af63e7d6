#pragma once

#include <bezout/poly.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace bezout::puiseux {

using cplx = std::complex<double>;

// X1 -> X1 + lambda X2; lambda = 0 is the identity.
struct Substitution {
  Rational lambda;
  bool identity() const { return is_zero(lambda); }
};

BivarPoly apply(const BivarPoly& g, const Substitution& sub);

/// G = leading X2^p + G_1(X1) X2^(p-1) + ... + G_p(X1) with p = deg G.
struct ProperPoly {
  BivarPoly G;
  int p = 0;
  Rational leading;
};

struct ProperResult {
  ProperPoly proper;
  Substitution substitution;
};

// First lambda in 0, 1, -1, 2, -2, ... making the X2^deg(G) coefficient a
// nonzero constant. Throws Errc::zero_polynomial for G = 0.
ProperResult make_proper(const BivarPoly& g);
// Wraps an already proper polynomial; throws Errc::invalid_spec otherwise.
ProperPoly as_proper(const BivarPoly& g);

struct TrackOptions {
  double tolerance = 1e-8;   // relative residual accepted at every sample
  double radius = 0.0;       // lower bound for the circle radius; 0 = automatic
  int angular_samples = 64;  // samples per lap of x1
  int escalations = 3;       // radius doublings after a numeric failure
};

/// Root values along one radius: for lap l and angle index j the entry
/// l * angular_samples + j holds x1 = r exp(2 pi i j / angular_samples) and
/// the branch value there.
struct CycleSample {
  double radius = 0.0;
  std::vector<cplx> x1;
  std::vector<cplx> roots;
};

/// A conjugacy class of branches X2 = alpha(X1) at infinity.
struct PuiseuxCycle {
  int den = 1;
  std::optional<Rational> lead_exp;  // empty for the branch alpha = 0
  std::vector<CycleSample> samples;  // radii R, 2R, 4R
  double tolerance = 1e-8;
};

// Newton polygon at infinity: (exponent, number of roots) per edge of the
// upper hull of {(j, max i) : coefficient of X1^i X2^j nonzero}. Roots equal
// to zero are not listed.
struct NewtonEdge {
  Rational exponent;
  int roots = 0;
};
std::vector<NewtonEdge> newton_edges(const BivarPoly& g);

// Cycles of the monodromy of the roots of G(x1, .) around |x1| = R, 2R, 4R.
// G must be square-free in X2. Escalates the radius on failure and throws
// Errc::ill_conditioned when tracking cannot be made consistent.
std::vector<PuiseuxCycle> newton_puiseux_roots(const ProperPoly& p, const TrackOptions& opts = {});

// deg_{X1} F2(X1, alpha(X1)) for the branches of `cycle`, as a multiple of
// 1/den. F2 is given before the substitution. Throws Errc::fit_diverged when
// the log-slope does not settle on an admissible value.
Rational composition_degree(const BivarPoly& f2, const PuiseuxCycle& cycle, const Substitution& sub);

struct CycleContribution {
  int den = 1;
  std::optional<Rational> lead_exp;
  Rational degree;
  int multiplicity = 1;
};

struct ZeuthenResult {
  int count = 0;
  Substitution substitution;
  double radius = 0.0;  // largest radius used
  int escalations = 0;
  bool negative_degree = false;  // some branch had a negative composition degree
  std::vector<CycleContribution> cycles;
};

// sum over branches of F1 at infinity of den * deg F2(X1, alpha(X1)).
// Validates S; throws Errc::non_integer_sum when the sum is not a
// nonnegative integer.
ZeuthenResult zeuthen(const PolySystem& s, const TrackOptions& opts = {});
int zeuthen_count(const PolySystem& s, const TrackOptions& opts = {});

// deg J(F), -1 when J vanishes identically.
int jacobian_degree(const PolySystem& s);

struct DegreeBoundReport {
  int k = -1;
  int bound = 0;
  std::optional<int> fiber_count;
  std::optional<int> degree_estimate;
  bool satisfied = false;
  bool jacobian_zero = false;
};

// Compares the generic fiber size (degree_of_mapping over `trials` targets)
// with min(n1, n2) (k + 1).
DegreeBoundReport degree_bound_check(const PolySystem& s, int trials = 5, std::uint64_t seed = 0);

}  // namespace bezout::puiseux
