#include <bezout/error.hpp>
#include <bezout/upoly.hpp>

#include <cmath>
#include <sstream>

namespace bezout {

double to_double(const Rational& r) { return r.get_d(); }

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& constant) {
  if (!bezout::is_zero(constant)) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  if (bezout::is_zero(c)) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && bezout::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (bezout::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
  if (bezout::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

UPoly UPoly::pow(int e) const {
  UPoly result(Rational(1));
  for (int i = 0; i < e; ++i) result *= *this;
  return result;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (bezout::is_zero(c)) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::internal, "UPoly division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  Rational lead_inv = 1 / b.leading();
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (bezout::is_zero(q)) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::not_divisible, "UPoly exact division left a remainder");
  return q;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  // Yun's algorithm.
  std::vector<UPoly> out;
  if (p.degree() < 1) return out;
  UPoly f = p.monic();
  UPoly d = f.derivative();
  UPoly a = gcd(f, d);
  UPoly b = exact_div(f, a);
  UPoly c = exact_div(d, a);
  UPoly e = c - b.derivative();
  while (b.degree() >= 1) {
    UPoly g = gcd(b, e);
    out.push_back(g);
    b = exact_div(b, g);
    c = exact_div(e, g);
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

Rational interpolation_node(int k) {
  if (k == 0) return Rational(0);
  long m = (k + 1) / 2;
  return (k % 2 == 1) ? Rational(m) : Rational(-m);
}

UPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size()) throw Error(Errc::shape_mismatch, "interpolate: node/value count mismatch");
  const std::size_t n = nodes.size();
  // Newton divided differences.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational denom = nodes[i] - nodes[i - level];
      if (bezout::is_zero(denom)) throw Error(Errc::interpolation_singular, "interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / denom;
    }
  }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= UPoly(std::vector<Rational>{-nodes[i], Rational(1)});
    result += UPoly(dd[i]);
  }
  return result;
}

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "ParseError";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::infinite_fiber: return "InfiniteFiber";
    case Errc::degree_drop: return "DegreeDrop";
    case Errc::no_general_line: return "NoGeneralLine";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::identically_zero: return "IdenticallyZero";
    case Errc::singular_pencil: return "SingularPencil";
    case Errc::interpolation_singular: return "InterpolationSingular";
    case Errc::evaluation_point: return "BadEvaluationPoint";
    case Errc::non_dominant: return "NonDominant";
    case Errc::ill_conditioned: return "IllConditioned";
    case Errc::fit_diverged: return "FitDiverged";
    case Errc::non_integer_sum: return "NonIntegerSum";
    case Errc::numeric_unstable: return "NumericUnstable";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace bezout
