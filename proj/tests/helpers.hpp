#pragma once

#include <bezout/parse.hpp>
#include <bezout/poly.hpp>
#include <bezout/random.hpp>

#include <string_view>

namespace testing {

inline bezout::BivarPoly P(std::string_view s) { return bezout::parse_poly(s); }

inline bezout::PolySystem sys(int n1, int n2, std::string_view f1, std::string_view f2) {
  return bezout::PolySystem(n1, n2, bezout::parse_poly(f1, n1), bezout::parse_poly(f2, n2));
}

inline bezout::Rational draw(bezout::Rng& rng, int bound) {
  return bezout::Rational(static_cast<long>(rng.uniform(-bound, bound)));
}

inline bezout::BivarPoly random_poly(bezout::Rng& rng, int degree, int bound = 5) {
  bezout::BivarPoly g(degree);
  for (std::size_t idx = 0; idx < bezout::dense_dim(degree); ++idx) {
    const auto e = bezout::monomial_exponent(idx);
    g.set(e.i, e.j, draw(rng, bound));
  }
  return g;
}

inline bezout::TernaryForm random_form(bezout::Rng& rng, int m, int bound = 5) {
  bezout::TernaryForm f(m);
  for (std::size_t idx = 0; idx < f.dim(); ++idx) {
    const auto e = bezout::monomial_exponent(idx);
    f.set(e.i, e.j, m - e.i - e.j, draw(rng, bound));
  }
  return f;
}

}  // namespace testing
