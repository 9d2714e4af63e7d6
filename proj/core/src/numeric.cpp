#include <bezout/error.hpp>
#include <bezout/numeric.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bezout::numeric {

namespace {

void eval_with_derivative(std::span<const cplx> c, cplx z, cplx& p, cplx& dp) {
  p = 0.0;
  dp = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

}  // namespace

std::vector<cplx> to_complex(const UPoly& p) {
  std::vector<cplx> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

double root_modulus_bound(std::span<const cplx> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == cplx(0.0)) --n;
  if (n <= 1) return 0.0;
  const std::size_t deg = n - 1;
  const double lead = std::abs(coeffs[deg]);
  double bound = 0.0;
  for (std::size_t k = 1; k <= deg; ++k) {
    double ratio = std::abs(coeffs[deg - k]) / lead;
    if (k == deg) ratio /= 2.0;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

double root_modulus_bound(const UPoly& p) {
  const std::vector<cplx> c = to_complex(p);
  return root_modulus_bound(c);
}

bool aberth_refine(std::span<const cplx> coeffs, std::vector<cplx>& roots, const RootOptions& opts) {
  const std::size_t n = roots.size();
  if (n == 0) return true;
  std::vector<bool> done(n, false);
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      cplx p;
      cplx dp;
      eval_with_derivative(coeffs, roots[i], p, dp);
      if (p == cplx(0.0)) {
        done[i] = true;
        continue;
      }
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const cplx diff = roots[i] - roots[j];
        if (diff != cplx(0.0)) repulsion += 1.0 / diff;
      }
      const cplx ratio = p / dp;
      const cplx denom = 1.0 - ratio * repulsion;
      const cplx w = (std::isfinite(std::abs(ratio)) && denom != cplx(0.0)) ? ratio / denom : cplx(1e-3 * (1.0 + std::abs(roots[i])), 0.0);
      roots[i] -= w;
      if (!std::isfinite(roots[i].real()) || !std::isfinite(roots[i].imag())) return false;
      if (std::abs(w) <= opts.tolerance * std::max(std::abs(roots[i]), 1e-300)) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return true;
  }
  return false;
}

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootOptions& opts) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == cplx(0.0)) --n;
  if (n == 0) throw Error(Errc::numeric_unstable, "polynomial_roots: zero polynomial");
  const std::size_t deg = n - 1;
  std::span<const cplx> c = coeffs.first(n);
  double radius = root_modulus_bound(c);
  if (radius <= 0.0) radius = 1.0;
  std::vector<cplx> roots(deg);
  // Points on a circle, rotated off the real axis to avoid symmetric stalls.
  for (std::size_t k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
    roots[k] = std::polar(0.5 * radius, angle);
  }
  if (!aberth_refine(c, roots, opts)) throw Error(Errc::numeric_unstable, "polynomial_roots: Aberth iteration did not converge");
  return roots;
}

}  // namespace bezout::numeric
