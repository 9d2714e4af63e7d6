#pragma once

#include <bezout/upoly.hpp>

#include <complex>
#include <span>
#include <vector>

namespace bezout::numeric {

using cplx = std::complex<double>;

struct RootOptions {
  double tolerance = 1e-13;  // relative size of the final Aberth correction
  int max_iterations = 500;
};

// All roots of sum_k coeffs[k] z^k (leading coefficient nonzero), by
// Aberth-Ehrlich iteration. Throws Errc::numeric_unstable on non-convergence.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs, const RootOptions& opts = {});

// Refines `roots` in place starting from the given approximations; returns
// false when the iteration does not converge within opts.max_iterations.
bool aberth_refine(std::span<const cplx> coeffs, std::vector<cplx>& roots, const RootOptions& opts = {});

// Upper bound on the moduli of the roots (Fujiwara). The zero polynomial and
// constants give 0.
double root_modulus_bound(const UPoly& p);
double root_modulus_bound(std::span<const cplx> coeffs);

std::vector<cplx> to_complex(const UPoly& p);

}  // namespace bezout::numeric
