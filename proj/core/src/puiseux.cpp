#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/gcd.hpp>
#include <bezout/numeric.hpp>
#include <bezout/oracle.hpp>
#include <bezout/puiseux.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace bezout::puiseux {

BivarPoly apply(const BivarPoly& g, const Substitution& sub) {
  if (sub.identity()) return g;
  const Mat2 a{{{Rational(1), sub.lambda}, {Rational(0), Rational(1)}}};
  return substitute(g, a, Vec2{Rational(0), Rational(0)});
}

ProperPoly as_proper(const BivarPoly& g) {
  if (g.is_zero()) throw Error(Errc::zero_polynomial, "as_proper: zero polynomial");
  const int d = g.degree();
  if (is_zero(g.coeff(0, d))) throw Error(Errc::invalid_spec, "as_proper: " + g.str() + " is not proper in X2");
  return ProperPoly{g, d, g.coeff(0, d)};
}

ProperResult make_proper(const BivarPoly& g) {
  if (g.is_zero()) throw Error(Errc::zero_polynomial, "make_proper: zero polynomial");
  const BivarPoly top = top_form(g, g.degree());
  // The top form has at most deg G roots, so deg G + 1 candidates suffice.
  for (int k = 0; k <= g.degree() + 1; ++k) {
    const Rational lambda = interpolation_node(k);
    if (is_zero(top(lambda, Rational(1)))) continue;
    Substitution sub{lambda};
    return ProperResult{as_proper(apply(g, sub)), sub};
  }
  throw Error(Errc::internal, "make_proper: no admissible shift");
}

std::vector<NewtonEdge> newton_edges(const BivarPoly& g) {
  const X2Poly rows = to_x2_poly(g);
  struct Pt {
    Rational j;
    Rational i;
  };
  std::vector<Pt> pts;
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (!rows[j].is_zero()) pts.push_back({Rational(static_cast<long>(j)), Rational(rows[j].degree())});
  std::vector<Pt> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b when it lies on or below the segment a -> p.
      if ((b.j - a.j) * (p.i - a.i) - (b.i - a.i) * (p.j - a.j) >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  std::vector<NewtonEdge> edges;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const Rational dj = hull[k].j - hull[k - 1].j;
    edges.push_back({-(hull[k].i - hull[k - 1].i) / dj, static_cast<int>(dj.get_num().get_si())});
  }
  return edges;
}

namespace {

using numeric::cplx;

// Coefficients of G(x1, .) as functions of x1.
class Fiber {
 public:
  explicit Fiber(const BivarPoly& g) {
    for (const UPoly& row : to_x2_poly(g)) rows_.push_back(numeric::to_complex(row));
  }
  int degree() const { return static_cast<int>(rows_.size()) - 1; }
  std::vector<cplx> at(cplx x1) const {
    std::vector<cplx> out(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      cplx v = 0.0;
      for (std::size_t i = rows_[k].size(); i-- > 0;) v = v * x1 + rows_[k][i];
      out[k] = v;
    }
    return out;
  }
  // |G(x1, z)| relative to the sum of the moduli of its terms.
  double relative_residual(cplx x1, cplx z) const {
    const auto c = at(x1);
    cplx v = 0.0;
    double scale = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
      v = v * z + c[k];
      scale += std::abs(c[k]) * std::pow(std::abs(z), static_cast<double>(k));
    }
    return scale == 0.0 ? 0.0 : std::abs(v) / scale;
  }

 private:
  std::vector<std::vector<cplx>> rows_;
};

const numeric::RootOptions kStepRoots{1e-12, 60};

bool separated_match(const std::vector<cplx>& before, const std::vector<cplx>& after) {
  for (std::size_t i = 0; i < before.size(); ++i) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < before.size(); ++j)
      if (j != i) sep = std::min(sep, std::abs(before[i] - before[j]));
    if (!(std::abs(after[i] - before[i]) < 0.25 * sep)) return false;
  }
  return true;
}

// Continues the roots along path(s), s in [s0, s1], keeping their order.
void track(const Fiber& g, const std::function<cplx(double)>& path, double s0, double s1, std::vector<cplx>& roots) {
  const double span = s1 - s0;
  double s = s0;
  double h = span;
  while (s < s1) {
    const bool last = h >= s1 - s;
    const double next = last ? s1 : s + h;
    std::vector<cplx> trial = roots;
    const auto c = g.at(path(next));
    if (numeric::aberth_refine(c, trial, kStepRoots) && separated_match(roots, trial)) {
      roots = std::move(trial);
      s = next;
      h *= 1.5;
    } else {
      h *= 0.5;
      if (h < span * 1e-12) throw Error(Errc::ill_conditioned, "root tracking lost injectivity");
    }
  }
}

std::vector<std::size_t> match_permutation(const std::vector<cplx>& start, const std::vector<cplx>& end) {
  std::vector<std::size_t> perm(end.size());
  std::vector<bool> used(start.size(), false);
  for (std::size_t i = 0; i < end.size(); ++i) {
    std::size_t best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < start.size(); ++j) {
      const double d = std::abs(end[i] - start[j]);
      if (d < dist) {
        dist = d;
        best = j;
      }
    }
    if (used[best] || dist > 1e-6 * std::max(std::abs(start[best]), 1e-12))
      throw Error(Errc::ill_conditioned, "monodromy does not return to the start roots");
    used[best] = true;
    perm[i] = best;
  }
  return perm;
}

struct Lap {
  std::vector<std::vector<cplx>> roots;  // roots at each sample angle
  std::vector<cplx> x1;
  std::vector<std::size_t> perm;
};

Lap run_lap(const Fiber& g, double r, const std::vector<cplx>& start, const TrackOptions& opts) {
  const int n = opts.angular_samples;
  Lap lap;
  std::vector<cplx> roots = start;
  const auto circle = [r](double theta) { return std::polar(r, theta); };
  for (int j = 0; j < n; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n;
    const cplx x1 = circle(theta);
    for (const cplx& z : roots)
      if (g.relative_residual(x1, z) > opts.tolerance) throw Error(Errc::ill_conditioned, "tracked root fails the residual check");
    lap.x1.push_back(x1);
    lap.roots.push_back(roots);
    const double theta_next = 2.0 * std::numbers::pi * (j + 1) / n;
    track(g, circle, theta, theta_next, roots);
  }
  lap.perm = match_permutation(start, roots);
  return lap;
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y, double* max_residual) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - slope * sx) / n;
  double res = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) res = std::max(res, std::abs(y[k] - icpt - slope * x[k]));
  if (max_residual) *max_residual = res;
  return slope;
}

double mean_log(const std::vector<cplx>& values) {
  double acc = 0.0;
  for (const cplx& v : values) {
    const double a = std::abs(v);
    if (!(a > 0.0) || !std::isfinite(a)) return std::numeric_limits<double>::quiet_NaN();
    acc += std::log(a);
  }
  return acc / static_cast<double>(values.size());
}

// Radius beyond which G has no branch points and no branch through X2 = 0.
double radius_floor(const BivarPoly& g) {
  const UPoly disc = oracle::sylvester_resultant(g, g.partial_x2());
  if (disc.is_zero()) throw Error(Errc::ill_conditioned, "polynomial is not square-free in X2");
  const X2Poly rows = to_x2_poly(g);
  double floor = std::max(numeric::root_modulus_bound(disc), 1.0);
  if (!rows.empty()) floor = std::max(floor, numeric::root_modulus_bound(rows[0]));
  return floor;
}

// Cycles at radii r, 2r, 4r for G with G(X1, 0) != 0 and deg_X2 G >= 1.
std::vector<PuiseuxCycle> cycles_at(const BivarPoly& g, double r, const TrackOptions& opts) {
  const Fiber fiber(g);
  const auto c0 = fiber.at(cplx(r, 0.0));
  std::vector<cplx> roots = numeric::polynomial_roots(c0);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) < 1e-9 * std::max(std::abs(roots[i]), 1e-12))
        throw Error(Errc::ill_conditioned, "start roots are not separated");

  std::vector<Lap> laps;
  std::vector<double> radii{r, 2 * r, 4 * r};
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (k > 0) {
      const double a = radii[k - 1];
      const double b = radii[k];
      track(fiber, [](double x) { return cplx(x, 0.0); }, a, b, roots);
    }
    laps.push_back(run_lap(fiber, radii[k], roots, opts));
    if (laps.back().perm != laps.front().perm) throw Error(Errc::ill_conditioned, "monodromy differs between radii");
  }

  const auto& perm = laps.front().perm;
  std::vector<bool> seen(perm.size(), false);
  std::vector<PuiseuxCycle> cycles;
  for (std::size_t i0 = 0; i0 < perm.size(); ++i0) {
    if (seen[i0]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t i = i0; !seen[i]; i = perm[i]) {
      seen[i] = true;
      orbit.push_back(i);
    }
    PuiseuxCycle c;
    c.den = static_cast<int>(orbit.size());
    c.tolerance = opts.tolerance;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      CycleSample s;
      s.radius = radii[k];
      for (std::size_t idx : orbit) {
        for (std::size_t j = 0; j < laps[k].x1.size(); ++j) {
          s.x1.push_back(laps[k].x1[j]);
          s.roots.push_back(laps[k].roots[j][idx]);
        }
      }
      c.samples.push_back(std::move(s));
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

double log_slope(const PuiseuxCycle& c, const std::function<cplx(cplx, cplx)>& f, double* residual) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& s : c.samples) {
    std::vector<cplx> v(s.roots.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(s.x1[k], s.roots[k]);
    xs.push_back(std::log(s.radius));
    ys.push_back(mean_log(v));
  }
  return lsq_slope(xs, ys, residual);
}

// Assigns exact Newton-polygon exponents to cycles by their measured slope.
void assign_exponents(const BivarPoly& g, std::vector<PuiseuxCycle>& cycles) {
  std::vector<NewtonEdge> edges = newton_edges(g);
  for (auto& c : cycles) {
    double residual = 0.0;
    const double slope = log_slope(c, [](cplx, cplx z) { return z; }, &residual);
    int best = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].roots < c.den) continue;
      const double d = std::abs(edges[e].exponent.get_d() - slope);
      if (d < dist) {
        dist = d;
        best = static_cast<int>(e);
      }
    }
    if (best < 0 || !(dist < 1e-3)) throw Error(Errc::ill_conditioned, "cycle slope matches no Newton polygon edge");
    edges[best].roots -= c.den;
    c.lead_exp = edges[best].exponent;
  }
}

// Splits off the X2^j0 factor: returns j0 and G / X2^j0.
std::pair<int, BivarPoly> strip_x2(const BivarPoly& g) {
  X2Poly rows = to_x2_poly(g);
  int j0 = 0;
  while (j0 < static_cast<int>(rows.size()) && rows[j0].is_zero()) ++j0;
  rows.erase(rows.begin(), rows.begin() + j0);
  return {j0, from_x2_poly(rows)};
}

PuiseuxCycle zero_cycle(const std::vector<double>& radii, const TrackOptions& opts) {
  PuiseuxCycle c;
  c.tolerance = opts.tolerance;
  for (double r : radii) {
    CycleSample s;
    s.radius = r;
    for (int j = 0; j < opts.angular_samples; ++j) {
      s.x1.push_back(std::polar(r, 2.0 * std::numbers::pi * j / opts.angular_samples));
      s.roots.push_back(0.0);
    }
    c.samples.push_back(std::move(s));
  }
  return c;
}

std::vector<PuiseuxCycle> cycles_for(const BivarPoly& g, double r, const TrackOptions& opts) {
  const auto [j0, rest] = strip_x2(g);
  if (j0 > 1) throw Error(Errc::ill_conditioned, "polynomial is not square-free in X2");
  std::vector<PuiseuxCycle> out;
  if (rest.degree_x2() >= 1) {
    out = cycles_at(rest, r, opts);
    assign_exponents(rest, out);
  }
  if (j0 == 1) out.push_back(zero_cycle({r, 2 * r, 4 * r}, opts));
  return out;
}

double base_radius(const BivarPoly& g, const TrackOptions& opts, double extra_floor) {
  const auto [j0, rest] = strip_x2(g);
  double floor = std::max(extra_floor, 1.0);
  if (rest.degree_x2() >= 1) floor = std::max(floor, radius_floor(rest));
  return std::max(opts.radius, 2.0 * floor);
}

bool retryable(const Error& e) { return e.code() == Errc::ill_conditioned || e.code() == Errc::fit_diverged || e.code() == Errc::numeric_unstable; }

}  // namespace

std::vector<PuiseuxCycle> newton_puiseux_roots(const ProperPoly& p, const TrackOptions& opts) {
  double r = base_radius(p.G, opts, 0.0);
  for (int e = 0;; ++e, r *= 2.0) {
    try {
      return cycles_for(p.G, r, opts);
    } catch (const Error& err) {
      if (!retryable(err) || e >= opts.escalations) throw;
    }
  }
}

Rational composition_degree(const BivarPoly& f2, const PuiseuxCycle& cycle, const Substitution& sub) {
  const BivarPoly g = apply(f2, sub);
  double residual = 0.0;
  const double slope = log_slope(cycle, [&g](cplx x1, cplx z) { return g(x1, z); }, &residual);
  if (!std::isfinite(slope)) throw Error(Errc::fit_diverged, "composition vanishes on a sample");
  const long k = std::lround(slope * cycle.den);
  if (std::abs(slope - static_cast<double>(k) / cycle.den) > 1e-3 || residual > 1e-3)
    throw Error(Errc::fit_diverged, "composition slope is not a multiple of 1/den");
  return make_rational(k, cycle.den);
}

ZeuthenResult zeuthen(const PolySystem& s, const TrackOptions& opts) {
  fibercount::require_valid(s);
  ZeuthenResult out;
  const auto [proper, sub] = make_proper(s.F1);
  out.substitution = sub;
  const BivarPoly f2 = apply(s.F2, sub);
  Rational total(0);
  if (proper.p >= 1) {
    const auto parts = squarefree_x2(proper.G);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const BivarPoly& factor = parts[k];
      if (factor.degree_x2() < 1) continue;
      const int mult = static_cast<int>(k) + 1;
      const double extra = numeric::root_modulus_bound(oracle::sylvester_resultant(factor, f2));
      double r = base_radius(factor, opts, extra);
      for (int e = 0;; ++e, r *= 2.0) {
        try {
          std::vector<CycleContribution> contrib;
          Rational part(0);
          for (const auto& c : cycles_for(factor, r, opts)) {
            const Rational d = composition_degree(f2, c, Substitution{});
            contrib.push_back({c.den, c.lead_exp, d, mult});
            part += Rational(mult * c.den) * d;
          }
          out.cycles.insert(out.cycles.end(), contrib.begin(), contrib.end());
          total += part;
          out.radius = std::max(out.radius, 4.0 * r);
          out.escalations = std::max(out.escalations, e);
          break;
        } catch (const Error& err) {
          if (!retryable(err) || e >= opts.escalations) throw;
        }
      }
    }
  }
  for (const auto& c : out.cycles)
    if (sgn(c.degree) < 0) out.negative_degree = true;
  if (total.get_den() != 1 || sgn(total) < 0) throw Error(Errc::non_integer_sum, "Zeuthen sum " + total.get_str() + " is not a nonnegative integer");
  out.count = static_cast<int>(total.get_num().get_si());
  return out;
}

int zeuthen_count(const PolySystem& s, const TrackOptions& opts) { return zeuthen(s, opts).count; }

int jacobian_degree(const PolySystem& s) { return jacobian(s).degree(); }

DegreeBoundReport degree_bound_check(const PolySystem& s, int trials, std::uint64_t seed) {
  DegreeBoundReport r;
  r.k = jacobian_degree(s);
  if (r.k < 0) {
    // Dependent components: the image is a curve or a point.
    r.jacobian_zero = true;
    r.satisfied = true;
    return r;
  }
  r.bound = std::min(s.n1, s.n2) * (r.k + 1);
  if (fibercount::validate_system(s).valid) r.fiber_count = fibercount::count_filtration(s).count;
  r.degree_estimate = fibercount::degree_of_mapping(s, trials, seed);
  r.satisfied = *r.degree_estimate <= r.bound;
  return r;
}

}  // namespace bezout::puiseux
