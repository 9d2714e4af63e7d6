#include <bezout/error.hpp>
#include <bezout/poly.hpp>

#include <algorithm>
#include <sstream>

namespace bezout {

Exponent monomial_exponent(std::size_t index) {
  int e = 0;
  while (dense_dim(e) <= index) ++e;
  const int offset = static_cast<int>(index - dense_dim(e - 1));
  return {e - offset, offset};
}

namespace {

// Shared text rendering for bivariate and ternary monomial lists.
void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& mono) {
  if (is_zero(c)) return;
  Rational a = abs(c);
  if (first) {
    if (sgn(c) < 0) os << "-";
  } else {
    os << (sgn(c) < 0 ? " - " : " + ");
  }
  first = false;
  if (mono.empty()) {
    os << a.get_str();
  } else if (a == 1) {
    os << mono;
  } else {
    os << a.get_str() << "*" << mono;
  }
}

void append_power(std::string& mono, const char* var, int e) {
  if (e == 0) return;
  if (!mono.empty()) mono += "*";
  mono += var;
  if (e > 1) mono += "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- BivarPoly

BivarPoly::BivarPoly(int dbound) : dbound_(dbound), coeffs_(dense_dim(dbound)) {
  if (dbound < 0) throw Error(Errc::invalid_spec, "BivarPoly: negative degree bound");
}

BivarPoly::BivarPoly(int dbound, std::vector<Rational> coeffs) : dbound_(dbound), coeffs_(std::move(coeffs)) {
  if (dbound < 0) throw Error(Errc::invalid_spec, "BivarPoly: negative degree bound");
  if (coeffs_.size() != dense_dim(dbound)) throw Error(Errc::shape_mismatch, "BivarPoly: coefficient count does not match bound");
}

BivarPoly BivarPoly::constant(const Rational& c, int dbound) {
  BivarPoly p(dbound);
  p.coeffs_[0] = c;
  return p;
}

BivarPoly BivarPoly::monomial(const Rational& c, int i, int j, int dbound) {
  BivarPoly p(dbound < 0 ? i + j : dbound);
  p.set(i, j, c);
  return p;
}

Rational BivarPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > dbound_) return Rational(0);
  return coeffs_[monomial_index(i, j)];
}

void BivarPoly::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw Error(Errc::invalid_spec, "BivarPoly::set: negative exponent");
  if (i + j > dbound_) {
    if (bezout::is_zero(c)) return;
    throw Error(Errc::degree_overflow, "BivarPoly::set: exponent exceeds degree bound");
  }
  coeffs_[monomial_index(i, j)] = c;
}

int BivarPoly::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (!bezout::is_zero(coeffs_[k])) {
      Exponent e = monomial_exponent(k);
      return e.i + e.j;
    }
  }
  return -1;
}

int BivarPoly::degree_x1() const {
  int d = -1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!bezout::is_zero(coeffs_[k])) d = std::max(d, monomial_exponent(k).i);
  return d;
}

int BivarPoly::degree_x2() const {
  int d = -1;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!bezout::is_zero(coeffs_[k])) d = std::max(d, monomial_exponent(k).j);
  return d;
}

bool BivarPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return bezout::is_zero(c); });
}

BivarPoly BivarPoly::with_bound(int dbound) const {
  if (degree() > dbound)
    throw Error(Errc::degree_overflow, "polynomial of degree " + std::to_string(degree()) + " exceeds bound " + std::to_string(dbound));
  BivarPoly out(dbound);
  const std::size_t n = std::min(out.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
  return out;
}

Rational BivarPoly::operator()(const Rational& x1, const Rational& x2) const {
  Rational acc(0);
  for (int i = 0; i <= dbound_; ++i) {
    Rational row(0);
    for (int j = dbound_ - i; j >= 0; --j) row = row * x2 + coeffs_[monomial_index(i, j)];
    Rational xp(1);
    for (int k = 0; k < i; ++k) xp *= x1;
    acc += row * xp;
  }
  return acc;
}

std::complex<double> BivarPoly::operator()(std::complex<double> x1, std::complex<double> x2) const {
  // Horner in X1 over coefficient polynomials in X2.
  std::complex<double> acc(0.0);
  for (int i = dbound_; i >= 0; --i) {
    std::complex<double> row(0.0);
    for (int j = dbound_ - i; j >= 0; --j) row = row * x2 + to_double(coeffs_[monomial_index(i, j)]);
    acc = acc * x1 + row;
  }
  return acc;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  if (o.dbound_ > dbound_) *this = with_bound(o.dbound_);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  if (o.dbound_ > dbound_) *this = with_bound(o.dbound_);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out(a.dbound_ + b.dbound_);
  for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
    if (is_zero(a.coeffs_[p])) continue;
    Exponent ea = monomial_exponent(p);
    for (std::size_t q = 0; q < b.coeffs_.size(); ++q) {
      if (is_zero(b.coeffs_[q])) continue;
      Exponent eb = monomial_exponent(q);
      out.coeffs_[monomial_index(ea.i + eb.i, ea.j + eb.j)] += a.coeffs_[p] * b.coeffs_[q];
    }
  }
  return out;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly r = constant(Rational(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Rational za = k < a.coeffs_.size() ? a.coeffs_[k] : Rational(0);
    const Rational zb = k < b.coeffs_.size() ? b.coeffs_[k] : Rational(0);
    if (za != zb) return false;
  }
  return true;
}

BivarPoly BivarPoly::partial_x1() const {
  BivarPoly out(std::max(dbound_ - 1, 0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Exponent e = monomial_exponent(k);
    if (e.i > 0 && !bezout::is_zero(coeffs_[k])) out.coeffs_[monomial_index(e.i - 1, e.j)] += coeffs_[k] * e.i;
  }
  return out;
}

BivarPoly BivarPoly::partial_x2() const {
  BivarPoly out(std::max(dbound_ - 1, 0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Exponent e = monomial_exponent(k);
    if (e.j > 0 && !bezout::is_zero(coeffs_[k])) out.coeffs_[monomial_index(e.i, e.j - 1)] += coeffs_[k] * e.j;
  }
  return out;
}

std::string BivarPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = dbound_; e >= 0; --e) {
    for (int i = e; i >= 0; --i) {
      const Rational& c = coeffs_[monomial_index(i, e - i)];
      std::string mono;
      append_power(mono, "x", i);
      append_power(mono, "y", e - i);
      append_term(os, first, c, mono);
    }
  }
  return first ? std::string("0") : os.str();
}

// -------------------------------------------------------------- TernaryForm

TernaryForm::TernaryForm(int m) : m_(m), coeffs_(dense_dim(m)) {}

TernaryForm::TernaryForm(int m, std::vector<Rational> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dense_dim(m)) throw Error(Errc::shape_mismatch, "TernaryForm: coefficient count does not match degree");
}

TernaryForm TernaryForm::linear(const Rational& a1, const Rational& a2, const Rational& a3) {
  TernaryForm f(1);
  f.set(1, 0, 0, a1);
  f.set(0, 1, 0, a2);
  f.set(0, 0, 1, a3);
  return f;
}

TernaryForm TernaryForm::monomial(const Rational& c, int i, int j, int k) {
  TernaryForm f(i + j + k);
  f.set(i, j, k, c);
  return f;
}

TernaryForm TernaryForm::basis(int m, std::size_t index) {
  TernaryForm f(m);
  f.coeffs_.at(index) = 1;
  return f;
}

Rational TernaryForm::coeff(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k != m_) return Rational(0);
  return coeffs_[monomial_index(i, j)];
}

void TernaryForm::set(int i, int j, int k, const Rational& c) {
  if (i < 0 || j < 0 || k < 0 || i + j + k != m_) throw Error(Errc::shape_mismatch, "TernaryForm::set: exponents do not sum to degree");
  coeffs_[monomial_index(i, j)] = c;
}

bool TernaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return bezout::is_zero(c); });
}

Rational TernaryForm::operator()(const std::array<Rational, 3>& a) const {
  if (m_ < 0) return Rational(0);
  std::vector<Rational> p1(static_cast<std::size_t>(m_) + 1, Rational(1));
  std::vector<Rational> p2 = p1;
  std::vector<Rational> p3 = p1;
  for (int e = 1; e <= m_; ++e) {
    p1[e] = p1[e - 1] * a[0];
    p2[e] = p2[e - 1] * a[1];
    p3[e] = p3[e - 1] * a[2];
  }
  Rational acc(0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (bezout::is_zero(coeffs_[k])) continue;
    Exponent e = monomial_exponent(k);
    acc += coeffs_[k] * p1[e.i] * p2[e.j] * p3[m_ - e.i - e.j];
  }
  return acc;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (o.m_ != m_) throw Error(Errc::shape_mismatch, "TernaryForm: adding forms of different degree");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) {
  if (o.m_ != m_) throw Error(Errc::shape_mismatch, "TernaryForm: subtracting forms of different degree");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TernaryForm& TernaryForm::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  // A factor from a negative-degree (zero) space makes the product zero.
  TernaryForm out(a.m_ + b.m_);
  if (a.m_ < 0 || b.m_ < 0) return out;
  for (std::size_t p = 0; p < a.coeffs_.size(); ++p) {
    if (is_zero(a.coeffs_[p])) continue;
    Exponent ea = monomial_exponent(p);
    for (std::size_t q = 0; q < b.coeffs_.size(); ++q) {
      if (is_zero(b.coeffs_[q])) continue;
      Exponent eb = monomial_exponent(q);
      out.coeffs_[monomial_index(ea.i + eb.i, ea.j + eb.j)] += a.coeffs_[p] * b.coeffs_[q];
    }
  }
  return out;
}

std::string TernaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Exponent e = monomial_exponent(k);
    std::string mono;
    append_power(mono, "x1", e.i);
    append_power(mono, "x2", e.j);
    append_power(mono, "x3", m_ - e.i - e.j);
    append_term(os, first, coeffs_[k], mono);
  }
  return first ? std::string("0") : os.str();
}

// ---------------------------------------------------------------- PolySystem

PolySystem::PolySystem(int n1_, int n2_, const BivarPoly& f1, const BivarPoly& f2) : n1(n1_), n2(n2_) {
  if (n1 < 1 || n2 < 1) throw Error(Errc::invalid_spec, "PolySystem: degree bounds must be >= 1");
  F1 = f1.with_bound(n1);
  F2 = f2.with_bound(n2);
}

// ------------------------------------------------------------- free functions

TernaryForm homogenize(const BivarPoly& g, int m) {
  BivarPoly fitted = g.with_bound(m);
  return TernaryForm(m, fitted.coeffs());
}

BivarPoly dehomogenize(const TernaryForm& f) {
  if (f.degree() < 0) return BivarPoly(0);
  return BivarPoly(f.degree(), f.coeffs());
}

std::array<TernaryForm, 2> homogenize(const PolySystem& s) {
  return {homogenize(s.F1, s.n1), homogenize(s.F2, s.n2)};
}

BivarPoly top_form(const BivarPoly& g, int m) {
  if (g.degree() > m) throw Error(Errc::degree_overflow, "top_form: polynomial degree exceeds m");
  BivarPoly out(m);
  for (int i = 0; i <= m; ++i) out.set(i, m - i, g.coeff(i, m - i));
  return out;
}

TernaryForm directional_derivative(const TernaryForm& q, const std::array<Rational, 3>& a) {
  const int m = q.degree();
  if (m < 1) return TernaryForm(m - 1);
  TernaryForm out(m - 1);
  for (std::size_t idx = 0; idx < q.coeffs().size(); ++idx) {
    const Rational& c = q.coeffs()[idx];
    if (is_zero(c)) continue;
    Exponent e = monomial_exponent(idx);
    const int k = m - e.i - e.j;
    if (e.i > 0) out.set(e.i - 1, e.j, k, out.coeff(e.i - 1, e.j, k) + a[0] * c * e.i);
    if (e.j > 0) out.set(e.i, e.j - 1, k, out.coeff(e.i, e.j - 1, k) + a[1] * c * e.j);
    if (k > 0) out.set(e.i, e.j, k - 1, out.coeff(e.i, e.j, k - 1) + a[2] * c * k);
  }
  return out;
}

BivarPoly euler_weight(const BivarPoly& g, int m) {
  BivarPoly out = g.with_bound(std::max(m, 0));
  std::vector<Rational> c = out.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    Exponent e = monomial_exponent(k);
    c[k] *= (m - e.i - e.j);
  }
  return BivarPoly(out.dbound(), std::move(c));
}

BivarPoly jacobian(const PolySystem& s) {
  const int bound = std::max(s.n1 + s.n2 - 2, 0);
  BivarPoly j = s.F1.partial_x1() * s.F2.partial_x2() - s.F1.partial_x2() * s.F2.partial_x1();
  return j.with_bound(bound);
}

BivarPoly substitute(const BivarPoly& g, const Mat2& a, const Vec2& b) {
  // Images of X1 and X2 under X -> A X + b.
  BivarPoly y1(1);
  y1.set(1, 0, a[0][0]);
  y1.set(0, 1, a[0][1]);
  y1.set(0, 0, b[0]);
  BivarPoly y2(1);
  y2.set(1, 0, a[1][0]);
  y2.set(0, 1, a[1][1]);
  y2.set(0, 0, b[1]);

  const int d = g.dbound();
  std::vector<BivarPoly> p1{BivarPoly::constant(Rational(1))};
  std::vector<BivarPoly> p2{BivarPoly::constant(Rational(1))};
  for (int e = 1; e <= d; ++e) {
    p1.push_back(p1.back() * y1);
    p2.push_back(p2.back() * y2);
  }
  BivarPoly out(d);
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
    const Rational& c = g.coeffs()[k];
    if (is_zero(c)) continue;
    Exponent e = monomial_exponent(k);
    out += (p1[e.i] * p2[e.j] * c).with_bound(d);
  }
  return out;
}

PolySystem linear_substitution(const PolySystem& s, const Mat2& a, const Vec2& b) {
  Rational det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (is_zero(det)) throw Error(Errc::singular_matrix, "linear_substitution: matrix is singular");
  return PolySystem(s.n1, s.n2, substitute(s.F1, a, b), substitute(s.F2, a, b));
}

}  // namespace bezout
