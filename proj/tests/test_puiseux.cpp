#include "helpers.hpp"

#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/gcd.hpp>
#include <bezout/oracle.hpp>
#include <bezout/puiseux.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace bezout;
using namespace bezout::puiseux;
using testing::P;
using testing::sys;

namespace {

std::vector<Rational> exponents(const std::vector<PuiseuxCycle>& cycles) {
  std::vector<Rational> out;
  for (const auto& c : cycles) out.push_back(c.lead_exp.value_or(Rational(-1000)));
  std::sort(out.begin(), out.end());
  return out;
}

int den_sum(const std::vector<PuiseuxCycle>& cycles) {
  return std::accumulate(cycles.begin(), cycles.end(), 0, [](int a, const PuiseuxCycle& c) { return a + c.den; });
}

}  // namespace

TEST_SUITE("puiseux") {

TEST_CASE("make_proper") {
  const auto a = make_proper(P("y^2 - x"));
  CHECK(a.substitution.identity());
  CHECK(a.proper.p == 2);
  CHECK(a.proper.leading == 1);
  const auto b = make_proper(P("x*y - 1"));
  CHECK(b.substitution.lambda == 1);
  CHECK(b.proper.G == P("y^2 + x*y - 1"));
  const auto c = make_proper(P("x"));
  CHECK(c.proper.G == P("x + y"));
  CHECK(c.proper.p == 1);
  CHECK_THROWS_AS(make_proper(P("0")), Error);
  CHECK_THROWS_AS(as_proper(P("x*y")), Error);
}

TEST_CASE("newton_edges") {
  const auto e = newton_edges(P("y^2 - x"));
  REQUIRE(e.size() == 1);
  CHECK(e[0].exponent == make_rational(1, 2));
  CHECK(e[0].roots == 2);
  const auto f = newton_edges(P("(y - 1)*(y - x)"));
  REQUIRE(f.size() == 2);
  CHECK(f[0].exponent == 0);
  CHECK(f[1].exponent == 1);
}

TEST_CASE("newton_puiseux_roots") {
  const auto a = newton_puiseux_roots(as_proper(P("y^2 - x")));
  REQUIRE(a.size() == 1);
  CHECK(a[0].den == 2);
  CHECK(*a[0].lead_exp == make_rational(1, 2));
  CHECK(a[0].samples.size() == 3);
  const auto b = newton_puiseux_roots(as_proper(P("y^2 - x^2")));
  REQUIRE(b.size() == 2);
  CHECK(b[0].den == 1);
  CHECK(b[1].den == 1);
  CHECK(exponents(b) == std::vector<Rational>{Rational(1), Rational(1)});
  const auto c = newton_puiseux_roots(as_proper(P("(y - 1)*(y - x)")));
  CHECK(exponents(c) == std::vector<Rational>{Rational(0), Rational(1)});
  const auto d = newton_puiseux_roots(as_proper(P("y^3 - x^2 + y")));
  CHECK(den_sum(d) == 3);
  CHECK(d.size() == 1);
  CHECK(d[0].den == 3);
  CHECK(*d[0].lead_exp == make_rational(2, 3));
  const auto z = newton_puiseux_roots(as_proper(P("y^2 + x*y")));
  CHECK(den_sum(z) == 2);
  CHECK(std::count_if(z.begin(), z.end(), [](const PuiseuxCycle& c) { return !c.lead_exp; }) == 1);
  CHECK_THROWS_AS(newton_puiseux_roots(as_proper(P("(y - x)^2"))), Error);
}

TEST_CASE("cycle invariants on random proper polynomials") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::generate({oracle::Family::random, 1 + static_cast<int>(seed % 3), 1, 5, seed + 400});
    const PolySystem& s = g.system;
    if (s.F1.degree() != s.n1) continue;
    const auto mp = make_proper(s.F1);
    for (const auto& factor : squarefree_x2(mp.proper.G)) {
      if (factor.degree_x2() < 1) continue;
      const auto cycles = newton_puiseux_roots(as_proper(factor));
      CHECK(den_sum(cycles) == factor.degree_x2());
      for (const auto& c : cycles) {
        if (c.lead_exp) CHECK(*c.lead_exp <= 1);
        for (const auto& sample : c.samples) {
          REQUIRE(sample.roots.size() == sample.x1.size());
          CHECK(sample.roots.size() == static_cast<std::size_t>(64 * c.den));
          for (std::size_t k = 0; k < sample.roots.size(); k += 17) {
            const std::complex<double> v = factor(sample.x1[k], sample.roots[k]);
            double scale = 0.0;
            for (std::size_t idx = 0; idx < factor.coeffs().size(); ++idx) {
              const Exponent e = monomial_exponent(idx);
              scale += std::abs(factor.coeffs()[idx].get_d()) * std::pow(std::abs(sample.x1[k]), e.i) * std::pow(std::abs(sample.roots[k]), e.j);
            }
            CHECK(std::abs(v) <= c.tolerance * scale);
          }
        }
      }
    }
  }
}

TEST_CASE("composition_degree") {
  // the radius must enclose the zeros of the composition
  const Substitution id{};
  TrackOptions wide;
  wide.radius = 50;
  const auto a = newton_puiseux_roots(as_proper(P("y^2 - x")), wide);
  CHECK(composition_degree(P("x + y - 1"), a[0], id) == 1);
  CHECK(composition_degree(P("7"), a[0], id) == 0);
  CHECK(composition_degree(P("y"), a[0], id) == make_rational(1, 2));
  const auto b = newton_puiseux_roots(as_proper(P("y^2 + y - x")), wide);
  REQUIRE(b.size() == 1);
  CHECK(b[0].den == 2);
  CHECK(composition_degree(P("y^2 - x"), b[0], id) == make_rational(1, 2));
}

TEST_CASE("zeuthen_count") {
  CHECK(zeuthen_count(sys(2, 1, "y^2 - x", "x + y - 1")) == 2);
  const auto z = zeuthen(sys(1, 2, "y", "x*y - 1"));
  CHECK(z.count == 0);
  REQUIRE(z.cycles.size() == 1);
  CHECK(z.cycles[0].den == 1);
  CHECK_FALSE(z.cycles[0].lead_exp.has_value());
  CHECK(z.cycles[0].degree == 0);
  CHECK(zeuthen_count(sys(1, 1, "x", "y")) == 1);
  CHECK(zeuthen_count(sys(2, 1, "x*y - 1", "x")) == 0);
  CHECK(zeuthen_count(sys(2, 1, "x*y - 1", "y - 1")) == 1);
  CHECK(zeuthen_count(sys(2, 1, "(y - x)^2 - 1", "y")) == 2);
  CHECK(zeuthen_count(sys(2, 1, "(y - x)^2", "y - 2*x")) == 2);  // repeated factor of F1
  CHECK_THROWS_AS(zeuthen_count(sys(2, 1, "x*y", "x")), Error);
}

TEST_CASE("negative composition degrees still sum correctly") {
  // F1 = X2^2 + X1 X2 - 1 has a branch X2 ~ 1/X1 and F2 = X2 has degree -1 along it
  const auto z = zeuthen(sys(2, 1, "y^2 + x*y - 1", "y"));
  CHECK(z.negative_degree);
  CHECK(z.count == fibercount::count_filtration(sys(2, 1, "y^2 + x*y - 1", "y")).count);
}

TEST_CASE("zeuthen agrees with the filtration count") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PolySystem s = oracle::generate({oracle::Family::random, 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed / 3 % 3), 5, seed + 500}).system;
    CHECK(zeuthen_count(s) == fibercount::count_filtration(s).count);
  }
}

TEST_CASE("jacobian_degree") {
  CHECK(jacobian_degree(sys(1, 1, "x", "y")) == 0);
  CHECK(jacobian_degree(sys(2, 1, "x*y", "x")) == 1);
  CHECK(jacobian_degree(sys(1, 1, "x", "2*x")) == -1);
}

TEST_CASE("degree_bound_check") {
  const auto a = degree_bound_check(sys(1, 1, "x", "y"));
  CHECK(a.k == 0);
  CHECK(a.bound == 1);
  CHECK(a.degree_estimate == 1);
  CHECK(a.fiber_count == 1);
  CHECK(a.satisfied);
  const auto b = degree_bound_check(sys(2, 1, "x + y^2", "y"));
  CHECK(b.k == 0);
  CHECK(b.bound == 1);
  CHECK(b.degree_estimate == 1);
  CHECK(b.satisfied);
  const auto c = degree_bound_check(sys(2, 1, "x^2", "y"));
  CHECK(c.k == 1);
  CHECK(c.bound == 2);
  CHECK(c.degree_estimate == 2);
  CHECK(c.satisfied);
  const auto d = degree_bound_check(sys(1, 1, "x", "2*x"));
  CHECK(d.jacobian_zero);
  CHECK(d.satisfied);
  CHECK_FALSE(d.degree_estimate.has_value());
}

TEST_CASE("bound holds across generated families") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto aut = oracle::generate({oracle::Family::automorphism, 3, 3, 3, seed});
    const auto r = degree_bound_check(aut.system, 5, seed);
    CHECK(r.k == 0);
    CHECK(r.degree_estimate == 1);
    CHECK(r.bound == std::min(aut.system.n1, aut.system.n2));
    const auto dk = oracle::generate({oracle::Family::dk_family, 1 + static_cast<int>(seed % 3), 1 + static_cast<int>(seed % 2), 5, seed});
    const auto q = degree_bound_check(dk.system, 5, seed);
    if (!q.jacobian_zero) {
      CHECK(q.satisfied);
      CHECK(q.k <= *dk.jacobian_degree_bound);
    }
  }
}

}
