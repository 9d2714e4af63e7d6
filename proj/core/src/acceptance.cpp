#include <bezout/acceptance.hpp>
#include <bezout/eliminant.hpp>
#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>
#include <bezout/oracle.hpp>
#include <bezout/puiseux.hpp>
#include <bezout/qlinalg.hpp>
#include <bezout/random.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

namespace bezout::acceptance {

namespace {

using qlinalg::QMat;

int scaled(int full, Scale scale) { return scale == Scale::full ? full : std::max(1, full / 5); }

// Tally of checked instances with the first failure kept for the report.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
  std::string summary(const std::string& unit) const {
    std::ostringstream os;
    os << (checked - failed) << "/" << checked << " " << unit;
    if (failed > 0) os << "; first failure: " << first_failure;
    return os.str();
  }
};

std::string describe(const PolySystem& s) {
  return "(" + s.F1.str() + ", " + s.F2.str() + ") n=(" + std::to_string(s.n1) + "," + std::to_string(s.n2) + ")";
}

oracle::GeneratorSpec random_spec(int i, std::uint64_t seed) {
  return {oracle::Family::random, 1 + i % 3, 1 + (i / 3) % 3, 5, seed + static_cast<std::uint64_t>(i)};
}

Rational draw(Rng& rng, int bound) { return Rational(static_cast<long>(rng.uniform(-bound, bound))); }

TernaryForm random_form(Rng& rng, int m, int bound) {
  TernaryForm f(m);
  for (std::size_t idx = 0; idx < f.dim(); ++idx) {
    const Exponent e = monomial_exponent(idx);
    f.set(e.i, e.j, m - e.i - e.j, draw(rng, bound));
  }
  return f;
}

QMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  QMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng, bound);
  return m;
}

Mat2 random_unimodular(Rng& rng) {
  Mat2 a{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  for (int k = 0; k < 3; ++k) {
    const Rational c = draw(rng, 3);
    Mat2 e{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    if (rng.uniform(0, 1) == 0) {
      e[0][1] = c;
    } else {
      e[1][0] = c;
    }
    Mat2 p;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p[i][j] = a[i][0] * e[0][j] + a[i][1] * e[1][j];
    a = p;
  }
  if (rng.uniform(0, 1) == 1) std::swap(a[0], a[1]);
  return a;
}

CriterionResult three_way(Scale scale, std::uint64_t seed) {
  CriterionResult r{1, "three-way count agreement", false, "", 0.0};
  Tally t;
  int rejections = 0;
  int numeric_flags = 0;
  for (int i = 0; i < scaled(200, scale); ++i) {
    const auto g = oracle::generate(random_spec(i, seed));
    rejections += g.rejections;
    const PolySystem& s = g.system;
    const auto fc = fibercount::count_filtration(s);
    const int e = eliminant::count_via_eliminant(s, fc.line);
    const int l = oracle::count_via_line_pencil(s, fc.line);
    t.check(fc.count == e && e == l, [&] {
      return describe(s) + " filtration " + std::to_string(fc.count) + " eliminant " + std::to_string(e) + " line " + std::to_string(l);
    });
    try {
      if (oracle::numeric_count(s) != fc.count) ++numeric_flags;
    } catch (const Error&) {
      ++numeric_flags;
    }
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("systems") + ", " + std::to_string(rejections) + " rejected draws, numeric_count advisory mismatches " + std::to_string(numeric_flags);
  return r;
}

CriterionResult chain_laws(Scale scale, std::uint64_t seed) {
  CriterionResult r{2, "K_i chain laws", false, "", 0.0};
  Tally t;
  for (int i = 0; i < scaled(200, scale); ++i) {
    const PolySystem s = oracle::generate(random_spec(i, seed)).system;
    const auto fc = fibercount::count_filtration(s);
    const auto& f = fc.filtration;
    const bool ok = qlinalg::is_chain(f.chain) && qlinalg::is_concave(f.dims) && f.stabilized_at <= f.prefix_dim + 1 &&
                    fc.count == s.n1 * s.n2 - static_cast<int>(f.dims.back()) && fc.count >= 0 && fc.count <= s.n1 * s.n2;
    t.check(ok, [&] { return describe(s); });
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("runs");
  return r;
}

CriterionResult pencil_equivalence(Scale scale, std::uint64_t seed) {
  CriterionResult r{3, "pencil filtration degree == determinant degree", false, "", 0.0};
  Tally t;
  Rng rng(seed + 3000);
  int singular = 0;
  const int want = scaled(200, scale);
  while (t.checked < want) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 10));
    const auto rank_eta = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    const auto rank_etap = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    const QMat eta = random_matrix(rng, n, rank_eta, 3) * random_matrix(rng, rank_eta, n, 3);
    const QMat etap = random_matrix(rng, n, rank_etap, 3) * random_matrix(rng, rank_etap, n, 3);
    const UPoly det = qlinalg::pencil_det({etap, eta});
    if (det.is_zero()) {
      ++singular;
      continue;
    }
    const auto pf = qlinalg::pencil_degree_filtration(eta, etap);
    t.check(pf.degree == det.degree(), [&] {
      return "size " + std::to_string(n) + ": filtration " + std::to_string(pf.degree) + " vs det " + std::to_string(det.degree());
    });
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("regular pencils") + ", " + std::to_string(singular) + " singular draws skipped";
  return r;
}

CriterionResult worked_instances(Scale, std::uint64_t seed) {
  CriterionResult r{4, "worked instances", false, "", 0.0};
  Tally t;
  const BivarPoly x = BivarPoly::x1();
  const BivarPoly y = BivarPoly::x2();
  const BivarPoly one = BivarPoly::constant(Rational(1));
  const BivarPoly diag = x - y;

  struct Case {
    PolySystem s;
    std::optional<BivarPoly> hp;
    int count;
    std::vector<std::size_t> dims;
  };
  std::vector<Case> cases{
      {PolySystem(2, 1, x * y - one, x), diag, 0, {0, 1, 2, 2}},
      {PolySystem(2, 1, x * y - one, y - one), diag, 1, {0, 1, 1}},
      {PolySystem(1, 1, x, y), std::nullopt, 1, {}},
  };
  for (const auto& c : cases) {
    const auto fc = fibercount::count_filtration(c.s, c.hp);
    const int e = eliminant::count_via_eliminant(c.s, fc.line);
    const int l = oracle::count_via_line_pencil(c.s, fc.line);
    const bool dims_ok = c.dims.empty() || fc.filtration.dims == c.dims;
    t.check(fc.count == c.count && e == c.count && l == c.count && dims_ok, [&] { return describe(c.s); });
  }
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      const auto g = oracle::generate({oracle::Family::line_products, n1, n2, 5, seed + static_cast<std::uint64_t>(10 * n1 + n2)});
      const auto fc = fibercount::count_filtration(g.system);
      const int l = oracle::count_via_line_pencil(g.system, fc.line);
      const int want = n1 * n2;
      t.check(fc.count == want && l == want && g.points->size() == static_cast<std::size_t>(want), [&] { return describe(g.system); });
    }
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("instances");
  return r;
}

CriterionResult zeuthen_agreement(Scale scale, std::uint64_t seed) {
  CriterionResult r{5, "Zeuthen count == filtration count", false, "", 0.0};
  Tally t;
  int escalated = 0;
  int negative = 0;
  for (int i = 0; i < scaled(100, scale); ++i) {
    const PolySystem s = oracle::generate(random_spec(i, seed + 5000)).system;
    const int expected = fibercount::count_filtration(s).count;
    try {
      const auto z = puiseux::zeuthen(s);
      if (z.escalations > 0) ++escalated;
      if (z.negative_degree) ++negative;
      t.check(z.count == expected, [&] { return describe(s) + " zeuthen " + std::to_string(z.count) + " filtration " + std::to_string(expected); });
    } catch (const Error& e) {
      t.check(false, [&] { return describe(s) + " " + std::string(to_string(e.code())) + ": " + e.what(); });
    }
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("systems") + ", " + std::to_string(escalated) + " escalated, " + std::to_string(negative) + " with negative composition degrees";
  return r;
}

CriterionResult jacobian_bound(Scale scale, std::uint64_t seed) {
  CriterionResult r{6, "Jacobian degree bound", false, "", 0.0};
  Tally t;
  int skipped = 0;
  const int per_family = scaled(25, scale);
  const oracle::Family families[] = {oracle::Family::random, oracle::Family::line_products, oracle::Family::automorphism, oracle::Family::dk_family};
  for (oracle::Family fam : families) {
    for (int i = 0; i < per_family; ++i) {
      oracle::GeneratorSpec spec{fam, 1 + i % 3, 1 + (i / 3) % 3, 5, seed + 6000 + static_cast<std::uint64_t>(i)};
      if (fam == oracle::Family::automorphism) spec = {fam, 3, 3, 3, spec.seed};
      if (fam == oracle::Family::dk_family) spec.n2 = 1 + (i / 3) % 2;
      const auto g = oracle::generate(spec);
      const auto rep = puiseux::degree_bound_check(g.system, 5, spec.seed);
      if (rep.jacobian_zero) {
        ++skipped;
        continue;
      }
      bool ok = rep.satisfied;
      if (fam == oracle::Family::automorphism) ok = ok && rep.k == 0 && rep.degree_estimate == 1;
      if (g.jacobian_degree_bound) ok = ok && rep.k <= *g.jacobian_degree_bound;
      t.check(ok, [&] {
        return oracle::to_string(fam) + " " + describe(g.system) + " k=" + std::to_string(rep.k) + " degree " + std::to_string(rep.degree_estimate.value_or(-1));
      });
    }
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("applicable systems") + ", " + std::to_string(skipped) + " with J = 0";
  return r;
}

CriterionResult structural(Scale scale, std::uint64_t seed) {
  CriterionResult r{7, "complex structural identities", false, "", 0.0};
  Tally t;
  for (int n1 = 1; n1 <= 6; ++n1)
    for (int n2 = 1; n2 <= 6; ++n2) {
      const eliminant::ComplexSpaces c(n1, n2);
      t.check(c.dimMp == c.dimM + c.dimMpp, [&] { return "dimensions at n=(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; });
    }
  Rng rng(seed + 7000);
  for (int i = 0; i < scaled(50, scale); ++i) {
    const PolySystem s = oracle::generate(random_spec(i, seed + 7100)).system;
    const BivarPoly hp = fibercount::choose_general_line(s);
    const auto g = fibercount::build_gamma(s, hp);
    t.check(qlinalg::kernel(g.gamma).dim() == static_cast<std::size_t>(s.n1 + s.n2), [&] { return "ker gamma for " + describe(s); });
  }
  for (int i = 0; i < scaled(50, scale); ++i) {
    const int n1 = static_cast<int>(rng.uniform(1, 4));
    const int n2 = static_cast<int>(rng.uniform(1, 4));
    const eliminant::FormPair f{random_form(rng, n1, 5), random_form(rng, n2, 5)};
    const TernaryForm s = random_form(rng, 1, 5);
    const QMat prod = eliminant::build_beta_prime(f, s) * eliminant::build_beta(f, s);
    t.check(prod.is_zero(), [&] { return "beta' beta for " + f[0].str() + ", " + f[1].str(); });
  }
  for (int i = 0; i < scaled(20, scale); ++i) {
    const PolySystem s = oracle::generate(random_spec(i, seed + 7200)).system;
    const auto fc = fibercount::count_filtration(s);
    const auto g = fibercount::build_gamma(s, fc.line);
    const auto pf = qlinalg::pencil_degree_filtration(g.gamma, g.gamma_prime);
    bool ok = pf.chain.size() == fc.filtration.chain.size();
    for (std::size_t k = 0; ok && k < pf.chain.size(); ++k) ok = pf.chain[k] == fibercount::embed_in_target(fc.filtration.chain[k], g.dimM);
    ok = ok && pf.degree - 2 * static_cast<int>(g.dimM) == fc.count;
    t.check(ok, [&] { return "L~_i vs K_i for " + describe(s); });
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("checks");
  return r;
}

CriterionResult eliminant_geometry(Scale scale, std::uint64_t seed) {
  CriterionResult r{8, "eliminant vanishes exactly on lines through zeros", false, "", 0.0};
  Tally t;
  Rng rng(seed + 8000);
  const int lines = scaled(20, scale);
  for (int i = 0; i < scaled(20, scale); ++i) {
    const auto g = oracle::generate({oracle::Family::line_products, 1 + i % 3, 1 + (i / 3) % 3, 5, seed + 8100 + static_cast<std::uint64_t>(i)});
    const auto f = homogenize(g.system);
    const auto& pts = *g.points;
    auto value = [&](const TernaryForm& s) {
      for (int k = 2; k >= 0; --k) {
        eliminant::Point3 a{Rational(0), Rational(0), Rational(0)};
        a[k] = 1;
        if (!is_zero(s(a))) return eliminant::resultant_value(f, s, a);
      }
      throw Error(Errc::zero_vector, "zero line");
    };
    for (int k = 0; k < lines; ++k) {
      const auto& p = pts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
      Rational a1;
      Rational a2;
      do {
        a1 = draw(rng, 9);
        a2 = draw(rng, 9);
      } while (is_zero(a1) && is_zero(a2));
      const TernaryForm s = TernaryForm::linear(a1, a2, -(a1 * p[0] + a2 * p[1]));
      t.check(is_zero(value(s)), [&] { return "line " + s.str() + " through a zero of " + describe(g.system); });
    }
    for (int k = 0; k < lines; ++k) {
      TernaryForm s;
      bool misses = false;
      while (!misses) {
        s = TernaryForm::linear(draw(rng, 9), draw(rng, 9), draw(rng, 9));
        misses = !is_zero(s.coeff(1, 0, 0)) || !is_zero(s.coeff(0, 1, 0));
        for (const auto& p : pts)
          if (is_zero(s({p[0], p[1], Rational(1)}))) misses = false;
      }
      t.check(!is_zero(value(s)), [&] { return "line " + s.str() + " missing the zeros of " + describe(g.system); });
    }
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("lines");
  return r;
}

CriterionResult invariance(Scale scale, std::uint64_t seed) {
  CriterionResult r{9, "count invariance", false, "", 0.0};
  Tally t;
  Rng rng(seed + 9000);
  for (int i = 0; i < scaled(10, scale); ++i) {
    const PolySystem s = oracle::generate(random_spec(i, seed + 9100)).system;
    const int base = fibercount::count_filtration(s).count;
    for (int k = 0; k < scaled(20, scale); ++k) {
      const Mat2 a = random_unimodular(rng);
      const Vec2 b{draw(rng, 5), draw(rng, 5)};
      const int c = fibercount::count_filtration(linear_substitution(s, a, b)).count;
      t.check(c == base, [&] { return "affine substitution of " + describe(s); });
    }
    int general = 0;
    for (int k = 0; general < 3 && k < 3 * (s.n1 + s.n2 + 3); ++k) {
      const BivarPoly hp = fibercount::candidate_line(k);
      if (!fibercount::check_general(s, hp).valid) continue;
      ++general;
      const int c = fibercount::count_filtration(s, hp).count;
      const int e = eliminant::count_via_eliminant(s, hp);
      t.check(c == base && e == base, [&] { return "line " + hp.str() + " for " + describe(s); });
    }
    t.check(general == 3, [&] { return "fewer than 3 general lines for " + describe(s); });
  }
  r.passed = t.failed == 0;
  r.detail = t.summary("checks");
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed) {
  using Fn = CriterionResult (*)(Scale, std::uint64_t);
  static constexpr Fn table[] = {three_way, chain_laws, pencil_equivalence, worked_instances, zeuthen_agreement,
                                 jacobian_bound, structural, eliminant_geometry, invariance};
  if (id < 1 || id > 9) throw Error(Errc::invalid_spec, "criterion id must be in 1..9");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](scale, seed);
  } catch (const Error& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("aborted: ") + std::string(to_string(e.code())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if ((id == 1 || id == 5) && r.seconds > 120.0) {
    r.passed = false;
    r.detail += ", over the 120 s budget";
  }
  return r;
}

std::vector<CriterionResult> run_all(Scale scale, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, scale, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail + " (" + secs + " s)";
}

}  // namespace bezout::acceptance
