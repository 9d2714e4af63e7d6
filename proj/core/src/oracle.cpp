#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/gcd.hpp>
#include <bezout/numeric.hpp>
#include <bezout/oracle.hpp>
#include <bezout/puiseux.hpp>
#include <bezout/qlinalg.hpp>
#include <bezout/random.hpp>

#include <algorithm>
#include <cmath>

namespace bezout::oracle {

Rational sylvester_determinant(std::span<const Rational> p, int deg_p, std::span<const Rational> q, int deg_q) {
  const auto at = [](std::span<const Rational> c, int k) { return k < static_cast<int>(c.size()) ? c[k] : Rational(0); };
  const int n = deg_p + deg_q;
  if (n == 0) return Rational(1);
  qlinalg::QMat m(n, n);
  // Rows 0..deg_q-1 carry p, the rest carry q; highest coefficient first.
  for (int r = 0; r < deg_q; ++r)
    for (int k = 0; k <= deg_p; ++k) m(r, r + k) = at(p, deg_p - k);
  for (int r = 0; r < deg_p; ++r)
    for (int k = 0; k <= deg_q; ++k) m(deg_q + r, r + k) = at(q, deg_q - k);
  return qlinalg::determinant(m);
}

UPoly sylvester_resultant(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() || q.is_zero()) return UPoly();
  const X2Poly px = to_x2_poly(p);
  const X2Poly qx = to_x2_poly(q);
  const int dp = static_cast<int>(px.size()) - 1;
  const int dq = static_cast<int>(qx.size()) - 1;
  const int bound = dq * std::max(p.degree_x1(), 0) + dp * std::max(q.degree_x1(), 0);
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (int k = 0; k <= bound; ++k) {
    const Rational x = interpolation_node(k);
    std::vector<Rational> pv(px.size());
    std::vector<Rational> qv(qx.size());
    for (std::size_t i = 0; i < px.size(); ++i) pv[i] = px[i](x);
    for (std::size_t i = 0; i < qx.size(); ++i) qv[i] = qx[i](x);
    nodes.push_back(x);
    values.push_back(sylvester_determinant(pv, dp, qv, dq));
  }
  return interpolate(nodes, values);
}

namespace {

// f(lambda u + mu v) with lambda = 1, as coefficients in mu.
std::vector<Rational> restrict_to_line(const TernaryForm& f, const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
  UPoly acc;
  std::array<UPoly, 3> lin;
  for (int k = 0; k < 3; ++k) lin[k] = UPoly(std::vector<Rational>{u[k], v[k]});
  for (std::size_t idx = 0; idx < f.dim(); ++idx) {
    const Rational& c = f.coeffs()[idx];
    if (is_zero(c)) continue;
    const Exponent e = monomial_exponent(idx);
    acc += c * (lin[0].pow(e.i) * lin[1].pow(e.j) * lin[2].pow(f.degree() - e.i - e.j));
  }
  std::vector<Rational> out(static_cast<std::size_t>(f.degree()) + 1);
  for (int k = 0; k <= acc.degree(); ++k) out[k] = acc.coeff(k);
  return out;
}

}  // namespace

int count_via_line_pencil(const PolySystem& s, const BivarPoly& hp) {
  fibercount::require_valid(s);
  fibercount::require_general(s, hp);
  const auto f = homogenize(s);
  const Rational p = hp.coeff(1, 0);
  const Rational q = hp.coeff(0, 1);
  const std::array<Rational, 3> u{-q, p, Rational(0)};
  const int samples = 2 * s.n1 * s.n2 + 1;
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (int k = 0; k < samples; ++k) {
    const Rational t = interpolation_node(k);
    const std::array<Rational, 3> v = !is_zero(p) ? std::array<Rational, 3>{-t, Rational(0), p} : std::array<Rational, 3>{Rational(0), -t, q};
    const auto g1 = restrict_to_line(f[0], u, v);
    const auto g2 = restrict_to_line(f[1], u, v);
    nodes.push_back(t);
    values.push_back(sylvester_determinant(g1, s.n1, g2, s.n2));
  }
  const UPoly r = interpolate(nodes, values);
  if (r.is_zero()) throw Error(Errc::identically_zero, "line-pencil resultant vanishes identically");
  return r.degree();
}

int numeric_count(const PolySystem& s) {
  fibercount::require_valid(s);
  const auto [proper, sub] = puiseux::make_proper(s.F1);
  const BivarPoly f2 = puiseux::apply(s.F2, sub);
  const UPoly res = sylvester_resultant(proper.G, f2);
  if (res.is_zero()) throw Error(Errc::numeric_unstable, "numeric_count: resultant vanishes");
  const auto parts = squarefree_decomposition(res);
  int total = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].degree() < 1) continue;
    const auto c = numeric::to_complex(parts[k]);
    const auto roots = numeric::polynomial_roots(c);
    // Distinct roots of a square-free factor must separate cleanly.
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (std::abs(roots[i] - roots[j]) < 1e-9 * (1.0 + std::abs(roots[i])))
          throw Error(Errc::numeric_unstable, "numeric_count: roots of a square-free factor collide");
    total += static_cast<int>(k + 1) * static_cast<int>(roots.size());
  }
  return total;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::random: return "random";
    case Family::line_products: return "line_products";
    case Family::automorphism: return "automorphism";
    case Family::dk_family: return "dk_family";
  }
  return "random";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::random, Family::line_products, Family::automorphism, Family::dk_family})
    if (to_string(f) == name) return f;
  throw Error(Errc::invalid_spec, "unknown generator family '" + name + "'");
}

namespace {

constexpr int kMaxAttempts = 100;

Rational draw(Rng& rng, int bound) { return Rational(static_cast<long>(rng.uniform(-bound, bound))); }

BivarPoly random_dense(Rng& rng, int degree, int bound, bool full_degree) {
  BivarPoly g(degree);
  for (std::size_t idx = 0; idx < dense_dim(degree); ++idx) {
    const Exponent e = monomial_exponent(idx);
    g.set(e.i, e.j, draw(rng, bound));
  }
  if (full_degree && g.degree() < degree) {
    const std::size_t idx = dense_dim(degree - 1) + static_cast<std::size_t>(rng.uniform(0, degree));
    const Exponent e = monomial_exponent(idx);
    g.set(e.i, e.j, Rational(static_cast<long>(rng.nonzero(-std::max(bound, 1), std::max(bound, 1)))));
  }
  return g;
}

struct Line {
  Rational a;
  Rational b;
  Rational c;
};

Line random_line(Rng& rng, int bound) {
  const int b = std::max(bound, 1);
  for (;;) {
    Line l{draw(rng, b), draw(rng, b), draw(rng, b)};
    if (!is_zero(l.a) || !is_zero(l.b)) return l;
  }
}

BivarPoly as_poly(const Line& l) {
  BivarPoly p(1);
  p.set(1, 0, l.a);
  p.set(0, 1, l.b);
  p.set(0, 0, l.c);
  return p;
}

std::optional<Generated> try_line_products(Rng& rng, const GeneratorSpec& spec) {
  std::vector<Line> l1;
  std::vector<Line> l2;
  for (int i = 0; i < spec.n1; ++i) l1.push_back(random_line(rng, spec.bound));
  for (int i = 0; i < spec.n2; ++i) l2.push_back(random_line(rng, spec.bound));
  std::vector<std::array<Rational, 2>> pts;
  for (const auto& a : l1) {
    for (const auto& b : l2) {
      const Rational det = a.a * b.b - a.b * b.a;
      if (is_zero(det)) return std::nullopt;
      const Rational x = (-a.c * b.b + a.b * b.c) / det;
      const Rational y = (-a.a * b.c + a.c * b.a) / det;
      const std::array<Rational, 2> pt{x, y};
      if (std::find(pts.begin(), pts.end(), pt) != pts.end()) return std::nullopt;
      pts.push_back(pt);
    }
  }
  BivarPoly f1 = BivarPoly::constant(Rational(1));
  BivarPoly f2 = BivarPoly::constant(Rational(1));
  for (const auto& l : l1) f1 = f1 * as_poly(l);
  for (const auto& l : l2) f2 = f2 * as_poly(l);
  Generated g;
  g.system = PolySystem(spec.n1, spec.n2, f1, f2);
  g.points = std::move(pts);
  return g;
}

std::optional<Generated> try_automorphism(Rng& rng, const GeneratorSpec& spec) {
  const int cap = std::max(spec.n1, spec.n2);
  const int b = std::max(spec.bound, 1);
  BivarPoly f1 = BivarPoly::x1();
  BivarPoly f2 = BivarPoly::x2();
  const int maps = static_cast<int>(rng.uniform(1, 4));
  for (int m = 0; m < maps; ++m) {
    switch (rng.uniform(0, 2)) {
      case 0: {  // (F1 + c F2^k, F2)
        const int k = static_cast<int>(rng.uniform(1, cap));
        f1 = f1 + Rational(static_cast<long>(rng.nonzero(-b, b))) * f2.pow(k);
        break;
      }
      case 1: {  // (F1, F2 + c F1^k)
        const int k = static_cast<int>(rng.uniform(1, cap));
        f2 = f2 + Rational(static_cast<long>(rng.nonzero(-b, b))) * f1.pow(k);
        break;
      }
      default: {  // unimodular linear map plus translation
        const Rational c(static_cast<long>(rng.uniform(-b, b)));
        BivarPoly g1 = f1 + c * f2 + BivarPoly::constant(draw(rng, b));
        BivarPoly g2 = f2 + BivarPoly::constant(draw(rng, b));
        if (rng.uniform(0, 1) == 1) std::swap(g1, g2);
        f1 = g1;
        f2 = g2;
        break;
      }
    }
  }
  if (f1.degree() > spec.n1 || f2.degree() > spec.n2) return std::nullopt;
  Generated g;
  g.system = PolySystem(f1.degree(), f2.degree(), f1.with_bound(f1.degree()), f2.with_bound(f2.degree()));
  g.degree = 1;
  g.jacobian_degree_bound = 0;
  return g;
}

std::optional<Generated> try_dk(Rng& rng, const GeneratorSpec& spec) {
  const int n = spec.n1;
  const int d = spec.n2;
  const BivarPoly f1 = random_dense(rng, n, spec.bound, true);
  const BivarPoly g = random_dense(rng, d, spec.bound, true);
  const Rational c(static_cast<long>(rng.nonzero(-std::max(spec.bound, 1), std::max(spec.bound, 1))));
  const int n2 = std::max(n, d);
  Generated out;
  out.system = PolySystem(n, n2, f1, (c * f1).with_bound(n2) + g.with_bound(n2));
  out.jacobian_degree_bound = n + d - 2;
  return out;
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
  const bool dk = spec.family == Family::dk_family;
  if (spec.n1 < 1 || spec.n2 < (dk ? 0 : 1) || spec.bound < 0)
    throw Error(Errc::invalid_spec, "generator spec needs n1 >= 1, n2 >= 1 (d >= 0 for dk_family) and bound >= 0");
  Rng rng(spec.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::optional<Generated> g;
    switch (spec.family) {
      case Family::random:
        g = Generated{PolySystem(spec.n1, spec.n2, random_dense(rng, spec.n1, spec.bound, false), random_dense(rng, spec.n2, spec.bound, false)), 0, {}, {}, {}};
        break;
      case Family::line_products: g = try_line_products(rng, spec); break;
      case Family::automorphism: g = try_automorphism(rng, spec); break;
      case Family::dk_family: g = try_dk(rng, spec); break;
    }
    if (g && fibercount::validate_system(g->system).valid) {
      g->rejections = attempt;
      return *std::move(g);
    }
  }
  throw Error(Errc::invalid_spec, "generator: no valid system after 100 draws");
}

}  // namespace bezout::oracle
