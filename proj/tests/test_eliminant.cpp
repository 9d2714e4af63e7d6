#include "helpers.hpp"

#include <bezout/eliminant.hpp>
#include <bezout/error.hpp>
#include <bezout/oracle.hpp>

#include <doctest.h>

#include <cmath>

using namespace bezout;
using namespace bezout::eliminant;
using testing::P;

namespace {

const Point3 e1{Rational(1), Rational(0), Rational(0)};
const Point3 e3{Rational(0), Rational(0), Rational(1)};

TernaryForm x(int k) {
  Point3 c{Rational(0), Rational(0), Rational(0)};
  c[k] = 1;
  return TernaryForm::linear(c[0], c[1], c[2]);
}

// f(g x) with g given by rows.
TernaryForm compose(const TernaryForm& f, const std::array<Point3, 3>& g) {
  std::array<TernaryForm, 3> lin;
  for (int r = 0; r < 3; ++r) lin[r] = TernaryForm::linear(g[r][0], g[r][1], g[r][2]);
  TernaryForm out(f.degree());
  for (std::size_t idx = 0; idx < f.dim(); ++idx) {
    if (is_zero(f.coeffs()[idx])) continue;
    const Exponent e = monomial_exponent(idx);
    TernaryForm term = TernaryForm::monomial(f.coeffs()[idx], 0, 0, 0);
    for (int k = 0; k < e.i; ++k) term = term * lin[0];
    for (int k = 0; k < e.j; ++k) term = term * lin[1];
    for (int k = 0; k < f.degree() - e.i - e.j; ++k) term = term * lin[2];
    out += term;
  }
  return out;
}

Point3 apply(const std::array<Point3, 3>& g, const Point3& a) {
  Point3 out;
  for (int r = 0; r < 3; ++r) out[r] = g[r][0] * a[0] + g[r][1] * a[1] + g[r][2] * a[2];
  return out;
}

// Unimodular integer matrix and its inverse from elementary row operations.
std::pair<std::array<Point3, 3>, std::array<Point3, 3>> random_sl3(Rng& rng) {
  std::array<Point3, 3> g;
  std::array<Point3, 3> inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g[r][c] = inv[r][c] = Rational(r == c ? 1 : 0);
  for (int step = 0; step < 4; ++step) {
    const int i = static_cast<int>(rng.uniform(0, 2));
    int j = static_cast<int>(rng.uniform(0, 1));
    if (j >= i) ++j;
    const Rational c(static_cast<long>(rng.nonzero(-2, 2)));
    // g <- E g with E = I + c e_ij ; inv <- inv E^-1
    for (int k = 0; k < 3; ++k) g[i][k] += c * g[j][k];
    for (int k = 0; k < 3; ++k) inv[k][j] -= c * inv[k][i];
  }
  return {g, inv};
}

FormPair random_pair(Rng& rng, int n1, int n2) { return {testing::random_form(rng, n1), testing::random_form(rng, n2)}; }

}  // namespace

TEST_SUITE("eliminant") {

TEST_CASE("complex dimensions") {
  for (int n1 = 1; n1 <= 6; ++n1)
    for (int n2 = 1; n2 <= 6; ++n2) {
      const ComplexSpaces c(n1, n2);
      CHECK(c.dimM == static_cast<std::size_t>(n1 * (n1 - 1) / 2 + n2 * (n2 - 1) / 2));
      CHECK(c.dimMpp == static_cast<std::size_t>((n1 + n2) * (n1 + n2 + 1) / 2));
      CHECK(c.dimMp == c.dimM + c.dimMpp);
    }
}

TEST_CASE("beta shapes") {
  const FormPair f11{x(0), x(1)};
  CHECK(build_beta(f11, x(2)).cols() == 0);
  CHECK(build_beta(f11, x(2)).rows() == 3);
  const FormPair f21{x(0) * x(0), x(1)};
  const QMat b = build_beta(f21, x(2));
  CHECK(b.cols() == 1);
  CHECK(b.rows() == 7);
  // the single basis vector r1 = 1 maps to (x3, 0, x2): q1 block has 3 slots, q2 block 1, g block 3
  CHECK(b(monomial_index(0, 0), 0) == 1);
  CHECK(b(3, 0) == 0);
  CHECK(b(4 + monomial_index(0, 1), 0) == 1);
}

TEST_CASE("beta prime for the coordinate lines") {
  const FormPair f{x(0), x(1)};
  const QMat bp = build_beta_prime(f, x(2));
  REQUIRE(bp.rows() == 3);
  REQUIRE(bp.cols() == 3);
  // columns q1, q2, g map to x2, x1, -x3
  CHECK(bp.column(0) == x(1).coeffs());
  CHECK(bp.column(1) == x(0).coeffs());
  CHECK(bp.column(2) == (x(2) * Rational(-1)).coeffs());
}

TEST_CASE("beta prime after beta vanishes") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const int n1 = static_cast<int>(rng.uniform(1, 4));
    const int n2 = static_cast<int>(rng.uniform(1, 4));
    const FormPair f = random_pair(rng, n1, n2);
    const TernaryForm s = testing::random_form(rng, 1);
    CHECK((build_beta_prime(f, s) * build_beta(f, s)).is_zero());
  }
}

TEST_CASE("common component kills the combined map") {
  Rng rng(2);
  const TernaryForm g = testing::random_form(rng, 2);
  const FormPair f{g, g};
  CHECK(resultant_value(f, x(2), e3) == 0);
}

TEST_CASE("alpha") {
  const QMat a = build_alpha(2, 1, e3);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 7);
  const FormPair zero{TernaryForm(2), TernaryForm(1)};
  CHECK(qlinalg::kernel(qlinalg::vstack(a, build_beta_prime(zero, x(2)))).dim() == 3);
  const Point3 two_a{Rational(2), Rational(-2), Rational(6)};
  const Point3 one_a{Rational(1), Rational(-1), Rational(3)};
  CHECK(build_alpha(3, 2, two_a) == Rational(2) * build_alpha(3, 2, one_a));
  CHECK_THROWS_AS(build_alpha(2, 2, Point3{Rational(0), Rational(0), Rational(0)}), Error);
  // a = e3 annihilates exactly the q-forms free of x3
  const QMat a22 = build_alpha(2, 2, e3);
  CHECK(qlinalg::kernel(a22).dim() == 2 * 2 + 6);
}

TEST_CASE("resultant_value on the coordinate lines") {
  const FormPair f{x(0), x(1)};
  CHECK(resultant_value(f, x(0), e1) == 0);
  CHECK(resultant_value(f, x(2), e3) != 0);
  CHECK_THROWS_AS(resultant_value(f, x(2), e1), Error);
}

TEST_CASE("resultant_value does not depend on a") {
  Rng rng(3);
  const Point3 e13{Rational(1), Rational(0), Rational(1)};
  for (int t = 0; t < 20; ++t) {
    const FormPair f = random_pair(rng, static_cast<int>(rng.uniform(1, 3)), static_cast<int>(rng.uniform(1, 3)));
    CHECK(resultant_value(f, x(2), e3) == resultant_value(f, x(2), e13));
    const TernaryForm s = testing::random_form(rng, 1);
    const Rational base = [&] {
      for (int k = 0; k < 3; ++k) {
        Point3 a{Rational(0), Rational(0), Rational(0)};
        a[k] = 1;
        if (!is_zero(s(a))) return resultant_value(f, s, a);
      }
      return Rational(0);
    }();
    for (int k = 0; k < 20; ++k) {
      const Point3 a{testing::draw(rng, 4), testing::draw(rng, 4), testing::draw(rng, 4)};
      if (is_zero(s(a))) continue;
      CHECK(resultant_value(f, s, a) == base);
    }
  }
}

TEST_CASE("resultant_value is SL3 invariant") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const FormPair f = random_pair(rng, static_cast<int>(rng.uniform(1, 3)), static_cast<int>(rng.uniform(1, 3)));
    const TernaryForm s = testing::random_form(rng, 1);
    if (is_zero(s(e3))) continue;
    const auto [g, inv] = random_sl3(rng);
    const FormPair fg{compose(f[0], g), compose(f[1], g)};
    CHECK(resultant_value(fg, compose(s, g), apply(inv, e3)) == resultant_value(f, s, e3));
  }
}

TEST_CASE("resultant_value homogeneity in f1") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n1 = static_cast<int>(rng.uniform(1, 3));
    const int n2 = static_cast<int>(rng.uniform(1, 3));
    const FormPair f = random_pair(rng, n1, n2);
    const Rational base = resultant_value(f, x(2), e3);
    if (is_zero(base)) continue;
    const Rational scaled = resultant_value(FormPair{f[0] * Rational(2), f[1]}, x(2), e3);
    const Rational ratio = scaled / base;
    REQUIRE(ratio.get_den() == 1);
    const int exponent = static_cast<int>(mpz_sizeinbase(ratio.get_num().get_mpz_t(), 2)) - 1;
    CHECK(ratio == Rational(Integer(1) << static_cast<unsigned>(exponent)));
    CHECK(exponent == n2);
  }
}

TEST_CASE("pencil_resultant") {
  const auto f = homogenize(testing::sys(1, 1, "x", "y"));
  const auto p = pencil_resultant(f, x(2), homogenize(P("x - y"), 1), e3);
  CHECK(p.degree() == 1);
  CHECK(p.global_scale_unknown);
  const auto g = homogenize(testing::sys(2, 1, "x*y - 1", "x"));
  CHECK(pencil_resultant(g, x(2), homogenize(P("x - y"), 1), e3).degree() == 0);
  // doubling f1 scales the polynomial by 2^n2
  const auto h = homogenize(testing::sys(2, 2, "x^2 + y - 3", "x*y + 2*x - 1"));
  const auto base = pencil_resultant(h, x(2), homogenize(P("x + y"), 1), e3);
  const auto twice = pencil_resultant(FormPair{h[0] * Rational(2), h[1]}, x(2), homogenize(P("x + y"), 1), e3);
  CHECK(twice.coeffs == base.coeffs * Rational(4));
  CHECK_THROWS_AS(pencil_resultant(f, x(2), x(2), e3), Error);
}

TEST_CASE("pencil degree stays within the Bezout number") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::generate({oracle::Family::random, 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed / 3 % 3), 5, seed});
    const auto f = homogenize(g.system);
    const auto p = pencil_resultant(f, x(2), homogenize(P("x - 7*y"), 1), e3);
    CHECK(p.degree() <= g.system.n1 * g.system.n2);
  }
  // line products have all their zeros affine
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::generate({oracle::Family::line_products, 2, 2, 5, seed});
    const int c = count_via_eliminant(g.system, P("x - 11*y"));
    CHECK(c == 4);
  }
}

TEST_CASE("count_via_eliminant") {
  CHECK(count_via_eliminant(testing::sys(1, 1, "x", "y"), P("x + y")) == 1);
  CHECK(count_via_eliminant(testing::sys(2, 1, "x*y - 1", "y - 1"), P("x - y")) == 1);
  CHECK(count_via_eliminant(testing::sys(2, 1, "x*y - 1", "x"), P("x - y")) == 0);
  CHECK_THROWS_AS(count_via_eliminant(testing::sys(2, 1, "x*y", "x"), P("x - y")), Error);
}

TEST_CASE("eliminant_coeffs") {
  const TernaryForm q = eliminant_coeffs(homogenize(testing::sys(1, 1, "x", "y")));
  CHECK(q.degree() == 1);
  CHECK(q.coeff(1, 0, 0) == 0);
  CHECK(q.coeff(0, 1, 0) == 0);
  CHECK(q.coeff(0, 0, 1) != 0);
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = oracle::generate({oracle::Family::line_products, 2, 1 + static_cast<int>(seed % 2), 4, seed});
    const TernaryForm qf = eliminant_coeffs(homogenize(g.system));
    for (const auto& p : *g.points) {
      const Rational a1 = testing::draw(rng, 5);
      const Rational a2 = testing::draw(rng, 5);
      CHECK(qf(Point3{a1, a2, -(a1 * p[0] + a2 * p[1])}) == 0);
    }
    for (int k = 0; k < 20; ++k) {
      const Point3 h{testing::draw(rng, 9), testing::draw(rng, 9), testing::draw(rng, 9)};
      bool through = is_zero(h[0]) && is_zero(h[1]);
      for (const auto& p : *g.points) through = through || is_zero(h[0] * p[0] + h[1] * p[1] + h[2]);
      if (!through) CHECK(qf(h) != 0);
    }
  }
}

}
