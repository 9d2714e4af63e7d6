#include <bezout/error.hpp>
#include <bezout/gcd.hpp>

#include <algorithm>

namespace bezout {

namespace {

void trim(X2Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const X2Poly& p) { return static_cast<int>(p.size()) - 1; }

UPoly content(const X2Poly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

X2Poly div_content(const X2Poly& p, const UPoly& c) {
  X2Poly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(exact_div(x, c));
  return out;
}

X2Poly primitive_part(const X2Poly& p) {
  if (p.empty()) return p;
  return div_content(p, content(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b, without leaving Q[X1].
X2Poly pseudo_remainder(X2Poly a, const X2Poly& b) {
  const int n = deg(b);
  const UPoly& lc = b.back();
  while (deg(a) >= n) {
    const int k = deg(a);
    UPoly lead = a.back();
    for (auto& c : a) c *= lc;
    for (int j = 0; j <= n; ++j) a[static_cast<std::size_t>(k - n + j)] -= lead * b[static_cast<std::size_t>(j)];
    trim(a);
  }
  return a;
}

BivarPoly normalize_leading(const BivarPoly& p) {
  const int d = p.degree();
  for (int i = d; i >= 0; --i) {
    Rational c = p.coeff(i, d - i);
    if (!is_zero(c)) return p * (1 / c);
  }
  return p;
}

X2Poly derivative_x2(const X2Poly& p) {
  X2Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(out);
  return out;
}

}  // namespace

X2Poly to_x2_poly(const BivarPoly& p) {
  const int d = p.dbound();
  X2Poly out(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    std::vector<Rational> c(static_cast<std::size_t>(d - j) + 1);
    for (int i = 0; i + j <= d; ++i) c[static_cast<std::size_t>(i)] = p.coeff(i, j);
    out[static_cast<std::size_t>(j)] = UPoly(std::move(c));
  }
  trim(out);
  return out;
}

BivarPoly from_x2_poly(const X2Poly& p) {
  int d = 0;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!p[j].is_zero()) d = std::max(d, static_cast<int>(j) + p[j].degree());
  BivarPoly out(d);
  for (std::size_t j = 0; j < p.size(); ++j)
    for (int i = 0; i <= p[j].degree(); ++i) out.set(i, static_cast<int>(j), p[j].coeff(i));
  return out;
}

BivarPoly gcd_bivariate(const BivarPoly& p, const BivarPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(Errc::zero_polynomial, "gcd of two zero polynomials");
  if (p.is_zero()) return normalize_leading(q.with_bound(std::max(q.degree(), 0)));
  if (q.is_zero()) return normalize_leading(p.with_bound(std::max(p.degree(), 0)));

  X2Poly a = to_x2_poly(p);
  X2Poly b = to_x2_poly(q);
  UPoly cont = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg(a) < deg(b)) std::swap(a, b);

  X2Poly g;
  for (;;) {
    if (deg(b) == 0) {
      g = X2Poly{UPoly(Rational(1))};
      break;
    }
    X2Poly r = pseudo_remainder(a, b);
    if (r.empty()) {
      g = b;
      break;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  for (auto& c : g) c *= cont;
  return normalize_leading(from_x2_poly(g));
}

BivarPoly exact_div(const BivarPoly& a, const BivarPoly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "exact_div by zero polynomial");
  X2Poly r = to_x2_poly(a);
  const X2Poly d = to_x2_poly(b);
  const int n = deg(d);
  X2Poly q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
  while (deg(r) >= n) {
    const int k = deg(r);
    auto [t, rem] = divmod(r.back(), d.back());
    if (!rem.is_zero()) throw Error(Errc::not_divisible, "bivariate exact division left a remainder");
    q[static_cast<std::size_t>(k - n)] += t;
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(k - n + j)] -= t * d[static_cast<std::size_t>(j)];
    trim(r);
  }
  if (!r.empty()) throw Error(Errc::not_divisible, "bivariate exact division left a remainder");
  trim(q);
  return from_x2_poly(q);
}

std::vector<BivarPoly> squarefree_x2(const BivarPoly& p) {
  std::vector<BivarPoly> out;
  if (p.degree_x2() < 1) return out;
  const BivarPoly f = p.with_bound(std::max(p.degree(), 0));
  const BivarPoly df = from_x2_poly(derivative_x2(to_x2_poly(f)));
  const BivarPoly a = gcd_bivariate(f, df);
  BivarPoly b = exact_div(f, a);
  BivarPoly c = exact_div(df, a);
  auto d_x2 = [](const BivarPoly& x) { return from_x2_poly(derivative_x2(to_x2_poly(x))); };
  BivarPoly e = c - d_x2(b);
  while (b.degree_x2() >= 1) {
    BivarPoly g = e.is_zero() ? b : gcd_bivariate(b, e);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(e, g);
    e = c - d_x2(b);
  }
  while (!out.empty() && out.back().degree_x2() < 1) out.pop_back();
  return out;
}

}  // namespace bezout
