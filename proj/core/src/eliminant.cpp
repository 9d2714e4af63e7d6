#include <bezout/eliminant.hpp>
#include <bezout/error.hpp>
#include <bezout/fibercount.hpp>

namespace bezout::eliminant {

namespace {

void check_pair(const FormPair& f) {
  if (f[0].degree() < 1 || f[1].degree() < 1) throw Error(Errc::shape_mismatch, "eliminant: forms must have degree >= 1");
}

void check_linear(const TernaryForm& s) {
  if (s.degree() != 1) throw Error(Errc::shape_mismatch, "eliminant: s must be a linear form");
}

// Writes the coefficients of `form` into column `col` starting at row `row0`.
void put_column(QMat& m, std::size_t row0, std::size_t col, const TernaryForm& form, const Rational& scale = Rational(1)) {
  for (std::size_t k = 0; k < form.dim(); ++k)
    if (!is_zero(form.coeffs()[k])) m(row0 + k, col) = scale * form.coeffs()[k];
}

Rational power(const Rational& x, std::size_t e) {
  Rational r(1);
  for (std::size_t k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

ComplexSpaces::ComplexSpaces(int n1_, int n2_) : n1(n1_), n2(n2_) {
  if (n1 < 1 || n2 < 1) throw Error(Errc::invalid_spec, "ComplexSpaces: degrees must be >= 1");
  dimM = dense_dim(n1 - 2) + dense_dim(n2 - 2);
  dimMp = dense_dim(n1 - 1) + dense_dim(n2 - 1) + dense_dim(n1 + n2 - 2);
  dimMpp = dense_dim(n1 + n2 - 1);
}

QMat build_beta(const FormPair& f, const TernaryForm& s) {
  check_pair(f);
  check_linear(s);
  const int n1 = f[0].degree();
  const int n2 = f[1].degree();
  const ComplexSpaces sp(n1, n2);
  const std::size_t r1 = dense_dim(n1 - 2);
  const std::size_t q1 = dense_dim(n1 - 1);
  const std::size_t q2 = dense_dim(n2 - 1);
  QMat m(sp.dimMp, sp.dimM);
  for (std::size_t k = 0; k < r1; ++k) {
    const TernaryForm e = TernaryForm::basis(n1 - 2, k);
    put_column(m, 0, k, s * e);
    put_column(m, q1 + q2, k, f[1] * e);
  }
  for (std::size_t k = 0; k < dense_dim(n2 - 2); ++k) {
    const TernaryForm e = TernaryForm::basis(n2 - 2, k);
    put_column(m, q1, r1 + k, s * e);
    put_column(m, q1 + q2, r1 + k, f[0] * e);
  }
  return m;
}

QMat build_beta_prime(const FormPair& f, const TernaryForm& s) {
  check_pair(f);
  check_linear(s);
  const int n1 = f[0].degree();
  const int n2 = f[1].degree();
  const ComplexSpaces sp(n1, n2);
  const std::size_t q1 = dense_dim(n1 - 1);
  const std::size_t q2 = dense_dim(n2 - 1);
  QMat m(sp.dimMpp, sp.dimMp);
  for (std::size_t k = 0; k < q1; ++k) put_column(m, 0, k, f[1] * TernaryForm::basis(n1 - 1, k));
  for (std::size_t k = 0; k < q2; ++k) put_column(m, 0, q1 + k, f[0] * TernaryForm::basis(n2 - 1, k));
  for (std::size_t k = 0; k < dense_dim(n1 + n2 - 2); ++k)
    put_column(m, 0, q1 + q2 + k, s * TernaryForm::basis(n1 + n2 - 2, k), Rational(-1));
  return m;
}

QMat build_alpha(int n1, int n2, const Point3& a) {
  if (is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2])) throw Error(Errc::zero_vector, "build_alpha: a must be nonzero");
  const ComplexSpaces sp(n1, n2);
  const std::size_t q1 = dense_dim(n1 - 1);
  const std::size_t r1 = dense_dim(n1 - 2);
  QMat m(sp.dimM, sp.dimMp);
  for (std::size_t k = 0; k < q1; ++k) put_column(m, 0, k, directional_derivative(TernaryForm::basis(n1 - 1, k), a));
  for (std::size_t k = 0; k < dense_dim(n2 - 1); ++k)
    put_column(m, r1, q1 + k, directional_derivative(TernaryForm::basis(n2 - 1, k), a));
  return m;
}

Rational resultant_value(const FormPair& f, const TernaryForm& s, const Point3& a) {
  check_pair(f);
  const Rational sa = s(a);
  if (is_zero(sa)) throw Error(Errc::evaluation_point, "resultant_value: s(a) = 0");
  const ComplexSpaces sp(f[0].degree(), f[1].degree());
  const QMat square = qlinalg::vstack(build_alpha(sp.n1, sp.n2, a), build_beta_prime(f, s));
  return qlinalg::determinant(square) / power(sa, sp.dimM);
}

ResultantPencil pencil_resultant(const FormPair& f, const TernaryForm& h, const TernaryForm& h_prime, const Point3& a) {
  check_pair(f);
  check_linear(h);
  check_linear(h_prime);
  if (h.is_zero() || h_prime.is_zero()) throw Error(Errc::zero_vector, "pencil_resultant: h and h' must be nonzero");
  if (!is_zero(h_prime(a))) throw Error(Errc::evaluation_point, "pencil_resultant: h'(a) must vanish");
  const Rational ha = h(a);
  if (is_zero(ha)) throw Error(Errc::evaluation_point, "pencil_resultant: h(a) must be nonzero");

  const ComplexSpaces sp(f[0].degree(), f[1].degree());
  const QMat alpha = build_alpha(sp.n1, sp.n2, a);
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= sp.dimMpp; ++k) {
    const Rational t = interpolation_node(static_cast<int>(k));
    nodes.push_back(t);
    values.push_back(qlinalg::determinant(qlinalg::vstack(alpha, build_beta_prime(f, h_prime + t * h))));
  }
  const UPoly det = interpolate(nodes, values);

  // det = (t h(a))^dimM * c R(f, h' + t h).
  std::vector<Rational> shifted;
  for (int k = 0; k <= det.degree(); ++k) {
    if (static_cast<std::size_t>(k) < sp.dimM) {
      if (!is_zero(det.coeff(k))) throw Error(Errc::not_divisible, "pencil_resultant: determinant not divisible by t^dimM");
    } else {
      shifted.push_back(det.coeff(k));
    }
  }
  ResultantPencil out;
  out.coeffs = UPoly(std::move(shifted)) * (1 / power(ha, sp.dimM));
  if (out.coeffs.is_zero())
    throw Error(Errc::identically_zero, "pencil_resultant: R(f, h' + t h) vanishes identically (positive-dimensional intersection)");
  if (out.degree() > sp.n1 * sp.n2) throw Error(Errc::internal, "pencil_resultant: degree exceeds n1 n2");
  return out;
}

int count_via_eliminant(const PolySystem& s, const BivarPoly& hp) {
  fibercount::require_valid(s);
  fibercount::require_general(s, hp);
  const FormPair f = homogenize(s);
  const TernaryForm h = TernaryForm::linear(0, 0, 1);
  const TernaryForm h_prime = TernaryForm::linear(hp.coeff(1, 0), hp.coeff(0, 1), 0);
  return pencil_resultant(f, h, h_prime, {0, 0, 1}).degree();
}

TernaryForm eliminant_coeffs(const FormPair& f) {
  check_pair(f);
  const int big_n = f[0].degree() * f[1].degree();
  const std::size_t unknowns = dense_dim(big_n);
  const Point3 a{1, 0, 0};
  // Lines h = (1, u, v) on the triangular lattice u, v >= 0, u + v <= N.
  QMat system(0, unknowns + 1);
  for (int u = 0; u <= big_n; ++u) {
    for (int v = 0; u + v <= big_n; ++v) {
      std::vector<Rational> row(unknowns + 1);
      for (std::size_t idx = 0; idx < unknowns; ++idx) {
        const Exponent e = monomial_exponent(idx);  // h1^i h2^j h3^(N-i-j)
        row[idx] = power(Rational(u), static_cast<std::size_t>(e.j)) * power(Rational(v), static_cast<std::size_t>(big_n - e.i - e.j));
      }
      row[unknowns] = resultant_value(f, TernaryForm::linear(1, u, v), a);
      system.append_row(row);
    }
  }
  const qlinalg::RrefResult red = qlinalg::rref(system);
  if (red.rank() != unknowns || red.pivots.back() >= unknowns)
    throw Error(Errc::interpolation_singular, "eliminant_coeffs: sample lines do not determine Q(f)");
  std::vector<Rational> coeffs(unknowns);
  for (std::size_t r = 0; r < unknowns; ++r) coeffs[red.pivots[r]] = red.rref(r, unknowns);
  return TernaryForm(big_n, std::move(coeffs));
}

}  // namespace bezout::eliminant
