#include "helpers.hpp"

#include <bezout/error.hpp>
#include <bezout/gcd.hpp>
#include <bezout/oracle.hpp>
#include <bezout/upoly.hpp>

#include <doctest.h>

using namespace bezout;
using testing::P;

TEST_SUITE("polycore") {

TEST_CASE("rationals stay canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(make_rational(0, 7).get_den() == 1);
}

TEST_CASE("monomial order indexes degree prefixes") {
  CHECK(monomial_index(0, 0) == 0);
  CHECK(monomial_index(1, 0) == 1);
  CHECK(monomial_index(0, 1) == 2);
  CHECK(monomial_index(2, 0) == 3);
  for (std::size_t k = 0; k < dense_dim(8); ++k) {
    const Exponent e = monomial_exponent(k);
    CHECK(monomial_index(e.i, e.j) == k);
    CHECK(k < dense_dim(e.i + e.j));
  }
}

TEST_CASE("parse_poly") {
  const BivarPoly p = parse_poly("x*y - 1", 2);
  CHECK(p.coeff(1, 1) == 1);
  CHECK(p.coeff(0, 0) == -1);
  CHECK(p.degree() == 2);
  CHECK(parse_poly("0", 3).is_zero());
  CHECK_THROWS_AS(parse_poly("1/2*x^2 + y", 1), Error);
  try {
    parse_poly("1/2*x^2 + y", 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degree_overflow);
  }
  CHECK(parse_poly("X1*X2 + 3/6") == parse_poly("x*y + 1/2"));
  CHECK_THROWS_AS(parse_poly("x + * y"), ParseError);
  try {
    parse_poly("x + * y");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly("2x"), ParseError);
}

TEST_CASE("printer round trip") {
  CHECK(P("x*y - 1").str() == "x*y - 1");
  CHECK(P("y + 1/2*x^2").str() == "1/2*x^2 + y");
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const BivarPoly g = testing::random_poly(rng, static_cast<int>(rng.uniform(0, 6)));
    CHECK(parse_poly(g.str()) == g);
  }
}

TEST_CASE("ring operations") {
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("x*y - 1")(Rational(1), Rational(1)) == 0);
  CHECK(P("x^2 + y") + P("-x^2") == P("y"));
  CHECK((P("x + y") * P("x - y")).dbound() == 2);
  const TernaryForm a = TernaryForm::linear(Rational(1), Rational(1), Rational(0));
  const TernaryForm b = TernaryForm::linear(Rational(1), Rational(-1), Rational(0));
  CHECK(a * b == homogenize(P("x^2 - y^2"), 2));
}

TEST_CASE("jacobian") {
  CHECK(jacobian(testing::sys(1, 1, "x", "y")) == P("1"));
  const PolySystem s = testing::sys(2, 1, "x*y", "x");
  CHECK(jacobian(s) == P("-x"));
  CHECK(jacobian(s).dbound() == 1);
  CHECK(jacobian(testing::sys(2, 1, "x + y^2", "y")) == P("1"));
  // finite-difference cross-check of J(X1 X2, X1) at rational points
  for (int k = 1; k <= 5; ++k) {
    const Rational x(k), y(-k), h = make_rational(1, 1000);
    const auto d = [&](const BivarPoly& f, int var) -> Rational {
      return var == 0 ? (f(x + h, y) - f(x - h, y)) / (2 * h) : (f(x, y + h) - f(x, y - h)) / (2 * h);
    };
    const Rational fd = d(s.F1, 0) * d(s.F2, 1) - d(s.F1, 1) * d(s.F2, 0);
    CHECK(fd == jacobian(s)(x, y));
  }
}

TEST_CASE("jacobian of elementary compositions is a nonzero constant") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::generate({oracle::Family::automorphism, 3, 3, 3, seed});
    const BivarPoly j = jacobian(g.system);
    CHECK(j.degree() == 0);
  }
}

TEST_CASE("homogenize and dehomogenize") {
  const TernaryForm f = homogenize(P("x*y - 1"), 2);
  CHECK(f.coeff(1, 1, 0) == 1);
  CHECK(f.coeff(0, 0, 2) == -1);
  CHECK(f.str() == "-x3^2 + x1*x2");
  CHECK(homogenize(P("1"), 3) == TernaryForm::monomial(Rational(1), 0, 0, 3));
  CHECK_THROWS_AS(homogenize(P("x^3"), 2), Error);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int m = static_cast<int>(rng.uniform(0, 10));
    const BivarPoly g = testing::random_poly(rng, m);
    CHECK(dehomogenize(homogenize(g, m)) == g);
  }
}

TEST_CASE("homogenize is multiplicative") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const int m = static_cast<int>(rng.uniform(0, 4));
    const int k = static_cast<int>(rng.uniform(0, 4));
    const BivarPoly g = testing::random_poly(rng, m);
    const BivarPoly h = testing::random_poly(rng, k);
    CHECK(homogenize(g * h, m + k) == homogenize(g, m) * homogenize(h, k));
  }
}

TEST_CASE("euler weight is the x3 derivative") {
  Rng rng(7);
  const std::array<Rational, 3> e3{Rational(0), Rational(0), Rational(1)};
  for (int t = 0; t < 100; ++t) {
    const int m = static_cast<int>(rng.uniform(1, 6));
    const BivarPoly g = testing::random_poly(rng, m);
    CHECK(homogenize(euler_weight(g, m), m - 1) == directional_derivative(homogenize(g, m), e3));
  }
}

TEST_CASE("top_form") {
  CHECK(top_form(P("x*y - 1"), 2) == P("x*y"));
  CHECK(top_form(P("x + 1"), 2).is_zero());
  CHECK(top_form(P("y^2 - x"), 2) == P("y^2"));
}

TEST_CASE("directional_derivative") {
  const std::array<Rational, 3> e1{Rational(1), Rational(0), Rational(0)};
  const std::array<Rational, 3> e3{Rational(0), Rational(0), Rational(1)};
  CHECK(directional_derivative(TernaryForm::monomial(Rational(1), 0, 0, 2), e3) == TernaryForm::monomial(Rational(2), 0, 0, 1));
  CHECK(directional_derivative(TernaryForm::monomial(Rational(1), 1, 1, 0), e3).is_zero());
  CHECK(directional_derivative(TernaryForm::monomial(Rational(1), 2, 0, 0), e1) == TernaryForm::monomial(Rational(2), 1, 0, 0));
  CHECK(directional_derivative(TernaryForm::monomial(Rational(5), 0, 0, 0), e1).is_zero());
}

TEST_CASE("euler_weight") {
  CHECK(euler_weight(P("x"), 2) == P("x"));
  CHECK(euler_weight(P("x^2"), 2).is_zero());
  CHECK(euler_weight(P("1"), 2) == P("2"));
}

TEST_CASE("linear_substitution") {
  const PolySystem s = testing::sys(2, 1, "x*y - 1", "x");
  const Mat2 id{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  const Mat2 swap{{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}};
  const Vec2 zero{Rational(0), Rational(0)};
  const PolySystem same = linear_substitution(s, id, zero);
  CHECK(same.F1 == s.F1);
  CHECK(same.F2 == s.F2);
  CHECK(linear_substitution(s, swap, zero).F2 == P("y"));
  CHECK(linear_substitution(s, swap, zero).n1 == 2);
  const Mat2 singular{{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}};
  CHECK_THROWS_AS(linear_substitution(s, singular, zero), Error);
}

TEST_CASE("gcd_bivariate") {
  CHECK(gcd_bivariate(P("x*y"), P("x")) == P("x"));
  CHECK(gcd_bivariate(P("x*y - 1"), P("x")) == P("1"));
  CHECK(gcd_bivariate(P("y*(y^2 - x)"), P("y^2 - x")) == P("y^2 - x"));
  CHECK(gcd_bivariate(P("2*x + 2"), P("0")) == P("x + 1"));
  CHECK_THROWS_AS(gcd_bivariate(P("0"), P("0")), Error);
}

TEST_CASE("univariate helpers") {
  const UPoly t = UPoly::variable();
  const UPoly p = (t - Rational(1)).pow(3) * (t + Rational(2));
  const auto sq = squarefree_decomposition(p);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0] == t + Rational(2));
  CHECK(sq[2] == t - Rational(1));
  CHECK(interpolation_node(0) == 0);
  CHECK(interpolation_node(1) == 1);
  CHECK(interpolation_node(2) == -1);
  CHECK(interpolation_node(3) == 2);
  std::vector<Rational> xs, ys;
  for (int k = 0; k < 5; ++k) {
    xs.push_back(interpolation_node(k));
    ys.push_back(p(xs.back()));
  }
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("square-free split in X2") {
  const BivarPoly g = P("(y - x)^2 * (y + 1)");
  const auto parts = squarefree_x2(g);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].degree_x2() == 1);
  CHECK(gcd_bivariate(parts[1], P("y - x")) == P("x - y"));
}

}
