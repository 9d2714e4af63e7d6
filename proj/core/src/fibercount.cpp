#include <bezout/fibercount.hpp>
#include <bezout/gcd.hpp>
#include <bezout/random.hpp>

#include <algorithm>

namespace bezout::fibercount {

namespace {

std::vector<Rational> as_vector(const BivarPoly& p, int bound) { return p.with_bound(bound).coeffs(); }

// Largest d with dense_dim(d) == n.
int degree_for_dim(std::size_t n) {
  int d = 0;
  while (dense_dim(d) < n) ++d;
  if (dense_dim(d) != n) throw Error(Errc::dimension_mismatch, "ambient dimension is not a triangular number");
  return d;
}

void check_line(const BivarPoly& hp) {
  if (hp.is_zero() || hp.degree() != 1 || !is_zero(hp.coeff(0, 0)))
    throw Error(Errc::zero_polynomial, "H' must be a nonzero homogeneous linear polynomial");
}

}  // namespace

ValidityReport validate_system(const PolySystem& s) {
  ValidityReport r;
  if (s.F1.is_zero() && s.F2.is_zero()) {
    r.failure = Errc::infinite_fiber;
    r.message = "both polynomials are zero";
    return r;
  }
  r.gcd = gcd_bivariate(s.F1, s.F2);
  if (r.gcd.degree() > 0) {
    r.failure = Errc::infinite_fiber;
    r.message = "F1 and F2 share the factor " + r.gcd.str();
    return r;
  }
  if (s.F1.degree() < s.n1 && s.F2.degree() < s.n2) {
    r.failure = Errc::degree_drop;
    r.message = "deg F1 < n1 and deg F2 < n2";
    return r;
  }
  r.valid = true;
  return r;
}

void require_valid(const PolySystem& s) {
  ValidityReport r = validate_system(s);
  if (!r.valid) throw Error(*r.failure, r.message);
}

GeneralityReport check_general(const PolySystem& s, const BivarPoly& hp) {
  check_line(hp);
  GeneralityReport r;
  // H' = p X1 + q X2 vanishes along the direction (-q, p).
  r.infinity_point = {-hp.coeff(0, 1), hp.coeff(1, 0)};
  const auto& d = r.infinity_point;
  if (!is_zero(top_form(s.F1, s.n1)(d[0], d[1]))) {
    r.valid = true;
    r.witness_index = 1;
  } else if (!is_zero(top_form(s.F2, s.n2)(d[0], d[1]))) {
    r.valid = true;
    r.witness_index = 2;
  }
  return r;
}

void require_general(const PolySystem& s, const BivarPoly& hp) {
  if (!check_general(s, hp).valid) throw Error(Errc::no_general_line, "(F, H') is not general for H' = " + hp.str());
}

BivarPoly candidate_line(int k) {
  if (k == 0) return BivarPoly::x2();
  const Rational c = interpolation_node(k - 1);
  BivarPoly h = BivarPoly::x1();
  h.set(0, 1, -c);
  return h;
}

BivarPoly choose_general_line(const PolySystem& s) {
  require_valid(s);
  // A nonzero binary top form has at most n_i root directions.
  const int limit = s.n1 + s.n2 + 2;
  for (int k = 0; k < limit; ++k) {
    BivarPoly h = candidate_line(k);
    if (check_general(s, h).valid) return h;
  }
  throw Error(Errc::no_general_line, "no general line among the candidate sequence");
}

Subspace build_K(const PolySystem& s) {
  const int top = s.n1 + s.n2 - 1;
  QMat gens(0, dense_dim(top));
  for (int j = 0; j < s.n2; ++j) gens.append_row(as_vector(s.F1 * BivarPoly::monomial(Rational(1), j, s.n2 - 1 - j), top));
  for (int j = 0; j < s.n1; ++j) gens.append_row(as_vector(s.F2 * BivarPoly::monomial(Rational(1), j, s.n1 - 1 - j), top));
  return Subspace::span(dense_dim(top), gens);
}

Subspace filtration_step(const Subspace& k, const Subspace& ki, const BivarPoly& hp) {
  if (k.ambient_dim() != ki.ambient_dim()) throw Error(Errc::dimension_mismatch, "filtration_step: K and K_i live in different spaces");
  const int top = degree_for_dim(k.ambient_dim());
  const std::size_t prefix = dense_dim(top - 1);
  QMat gens = k.basis();
  for (std::size_t r = 0; r < ki.dim(); ++r) {
    std::vector<Rational> v = ki.vector(r);
    if (std::any_of(v.begin() + static_cast<std::ptrdiff_t>(prefix), v.end(), [](const Rational& x) { return !is_zero(x); }))
      throw Error(Errc::dimension_mismatch, "filtration_step: K_i leaves the degree <= top - 1 prefix");
    const BivarPoly p(top, std::move(v));
    gens.append_row(as_vector(p.with_bound(std::max(top - 1, 0)) * hp, top));
  }
  return qlinalg::prefix_intersect(Subspace::span(k.ambient_dim(), gens), prefix);
}

FiltrationCount count_filtration(const PolySystem& s, const std::optional<BivarPoly>& hp) {
  require_valid(s);
  FiltrationCount out;
  if (hp) {
    require_general(s, *hp);
    out.line = *hp;
  } else {
    out.line = choose_general_line(s);
  }

  Filtration& f = out.filtration;
  const int top = s.n1 + s.n2 - 1;
  f.prefix_dim = dense_dim(top - 1);
  f.K = build_K(s);
  f.chain.push_back(Subspace(dense_dim(top)));
  f.dims.push_back(0);
  for (std::size_t step = 0;; ++step) {
    if (step > f.prefix_dim + 1) throw Error(Errc::internal, "count_filtration: K_i chain failed to stabilize");
    Subspace next = filtration_step(f.K, f.chain.back(), out.line);
    const bool stable = next == f.chain.back();
    f.chain.push_back(std::move(next));
    f.dims.push_back(f.chain.back().dim());
    if (stable) {
      f.stabilized_at = step;
      break;
    }
  }
  out.count = s.n1 * s.n2 - static_cast<int>(f.dims.back());
  if (out.count < 0 || out.count > s.n1 * s.n2) throw Error(Errc::internal, "count_filtration: count outside [0, n1 n2]");
  return out;
}

int degree_of_mapping(const PolySystem& s, int trials, std::uint64_t seed) {
  if (jacobian(s).is_zero()) throw Error(Errc::non_dominant, "degree_of_mapping: J(F) vanishes identically");
  Rng rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    // Non-general targets (shared factor or degree drop of F - y) are redrawn.
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 100) throw Error(Errc::internal, "degree_of_mapping: no admissible target after 100 draws");
      const Rational y1(static_cast<long>(rng.uniform(-50, 50)));
      const Rational y2(static_cast<long>(rng.uniform(-50, 50)));
      PolySystem shifted(s.n1, s.n2, s.F1 - BivarPoly::constant(y1), s.F2 - BivarPoly::constant(y2));
      if (!validate_system(shifted).valid) continue;
      best = std::max(best, count_filtration(shifted).count);
      break;
    }
  }
  return best;
}

InhomogeneousComplex build_gamma(const PolySystem& s, const BivarPoly& hp) {
  check_line(hp);
  const int n1 = s.n1;
  const int n2 = s.n2;
  const std::size_t q1 = dense_dim(n1 - 1);
  const std::size_t q2 = dense_dim(n2 - 1);
  const std::size_t g = dense_dim(n1 + n2 - 2);
  const std::size_t r1 = dense_dim(n1 - 2);
  const std::size_t r2 = dense_dim(n2 - 2);
  const std::size_t mpp = dense_dim(n1 + n2 - 1);

  InhomogeneousComplex c;
  c.dimM = r1 + r2;
  c.dimMpp = mpp;
  c.gamma = QMat(c.dimM + mpp, q1 + q2 + g);
  c.gamma_prime = QMat(c.dimM + mpp, q1 + q2 + g);

  // Euler weight keeps monomials in place; the top-degree ones get weight 0.
  for (std::size_t k = 0; k < q1; ++k) {
    const Exponent e = monomial_exponent(k);
    const int w = n1 - 1 - e.i - e.j;
    if (w != 0) c.gamma(k, k) = w;
  }
  for (std::size_t k = 0; k < q2; ++k) {
    const Exponent e = monomial_exponent(k);
    const int w = n2 - 1 - e.i - e.j;
    if (w != 0) c.gamma(r1 + k, q1 + k) = w;
  }
  for (std::size_t k = 0; k < g; ++k) c.gamma(c.dimM + k, q1 + q2 + k) = -1;

  const int top = n1 + n2 - 1;
  auto put = [&](std::size_t col, const BivarPoly& p) {
    const std::vector<Rational> v = as_vector(p, top);
    for (std::size_t r = 0; r < mpp; ++r) c.gamma_prime(c.dimM + r, col) = v[r];
  };
  for (std::size_t k = 0; k < q1; ++k) {
    const Exponent e = monomial_exponent(k);
    put(k, s.F2 * BivarPoly::monomial(Rational(1), e.i, e.j));
  }
  for (std::size_t k = 0; k < q2; ++k) {
    const Exponent e = monomial_exponent(k);
    put(q1 + k, s.F1 * BivarPoly::monomial(Rational(1), e.i, e.j));
  }
  for (std::size_t k = 0; k < g; ++k) {
    const Exponent e = monomial_exponent(k);
    put(q1 + q2 + k, -(hp * BivarPoly::monomial(Rational(1), e.i, e.j)));
  }
  return c;
}

Subspace embed_in_target(const Subspace& k, std::size_t dimM) {
  const std::size_t n = dimM + k.ambient_dim();
  QMat gens(0, n);
  for (std::size_t r = 0; r < k.dim(); ++r) {
    std::vector<Rational> v(n);
    for (std::size_t c = 0; c < k.ambient_dim(); ++c) v[dimM + c] = k.basis()(r, c);
    gens.append_row(v);
  }
  return Subspace::span(n, gens);
}

}  // namespace bezout::fibercount
