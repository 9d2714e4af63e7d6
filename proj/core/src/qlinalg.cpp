#include <bezout/error.hpp>
#include <bezout/qlinalg.hpp>

#include <algorithm>
#include <numeric>

namespace bezout::qlinalg {

// --------------------------------------------------------------------- QMat

QMat::QMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::shape_mismatch, "QMat: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> QMat::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMat::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) throw Error(Errc::shape_mismatch, "QMat::append_row: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return bezout::is_zero(x); });
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::shape_mismatch, "QMat product: inner dimensions differ");
  QMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (bezout::is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::shape_mismatch, "QMat sum: shapes differ");
  QMat out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

QMat operator*(const Rational& s, const QMat& a) {
  QMat out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

std::vector<Rational> QMat::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw Error(Errc::shape_mismatch, "QMat::apply: vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!bezout::is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
  return out;
}

QMat vstack(const QMat& top, const QMat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(Errc::shape_mismatch, "vstack: column counts differ");
  QMat out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < bottom.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

QMat hstack(const QMat& left, const QMat& right) {
  if (left.rows() != right.rows()) throw Error(Errc::shape_mismatch, "hstack: row counts differ");
  QMat out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

// -------------------------------------------------------------- elimination

RrefResult rref(QMat m) {
  RrefResult res;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!is_zero(m(r, k))) m(i, k) -= f * m(r, k);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rref = std::move(m);
  return res;
}

std::size_t rank(const QMat& m) { return rref(m).rank(); }

Rational determinant(const QMat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::shape_mismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  // Clear denominators row by row, then fraction-free Bareiss elimination.
  std::vector<Integer> a(n * n);
  Rational scale(1);
  for (std::size_t r = 0; r < n; ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) {
      Rational x = m(r, c) * Rational(l);
      a[r * n + c] = x.get_num();
    }
  }
  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
      sign = -sign;
    }
    const Integer& piv = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[i * n + j] * piv - a[i * n + k] * a[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(v);
      }
      a[i * n + k] = 0;
    }
    prev = piv;
  }
  Rational det(a[n * n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim, const QMat& generators) {
  Subspace s(ambient_dim);
  if (generators.rows() == 0) return s;
  if (generators.cols() != ambient_dim) throw Error(Errc::dimension_mismatch, "Subspace::span: generator length differs from ambient dimension");
  RrefResult r = rref(generators);
  QMat basis(r.rank(), ambient_dim);
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(i, c) = r.rref(i, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators) {
  QMat g(0, ambient_dim);
  for (const auto& v : generators) g.append_row(v);
  return span(ambient_dim, g);
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(ambient_dim, QMat::identity(ambient_dim)); }

Subspace Subspace::coordinate_prefix(std::size_t ambient_dim, std::size_t k) {
  QMat g(k, ambient_dim);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = 1;
  return span(ambient_dim, g);
}

std::vector<Rational> Subspace::vector(std::size_t r) const {
  auto row = basis_.row(r);
  return {row.begin(), row.end()};
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "Subspace::contains: vector length differs from ambient dimension");
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Rational f = w[pivots_[r]];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!is_zero(basis_(r, c))) w[c] -= f * basis_(r, c);
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_zero(x); });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(Errc::dimension_mismatch, "Subspace::contains: ambient dimensions differ");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_.rows() == 0 ? QMat(0, ambient_) : basis_); }

// ------------------------------------------------------------- operations

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(Errc::dimension_mismatch, "sum: ambient dimensions differ");
  return Subspace::span(s.ambient_dim(), vstack(s.basis(), t.basis()));
}

Subspace intersection(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(Errc::dimension_mismatch, "intersection: ambient dimensions differ");
  return sum(s.annihilator(), t.annihilator()).annihilator();
}

Subspace image(const QMat& m, const Subspace& s) {
  if (s.ambient_dim() != m.cols()) throw Error(Errc::dimension_mismatch, "image: subspace does not live in the map's domain");
  QMat gens(0, m.rows());
  for (std::size_t r = 0; r < s.dim(); ++r) gens.append_row(m.apply(s.basis().row(r)));
  return Subspace::span(m.rows(), gens);
}

Subspace image(const QMat& m) { return Subspace::span(m.rows(), m.transpose()); }

Subspace preimage(const QMat& m, const Subspace& t) {
  if (t.ambient_dim() != m.rows()) throw Error(Errc::dimension_mismatch, "preimage: subspace does not live in the map's codomain");
  const Subspace ann = t.annihilator();
  if (ann.dim() == 0) return Subspace::full(m.cols());
  return kernel(ann.basis() * m);
}

Subspace kernel(const QMat& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMat gens(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.rref(i, f);
    gens.append_row(v);
  }
  return Subspace::span(n, gens);
}

Subspace prefix_intersect(const Subspace& s, std::size_t k) {
  const std::size_t n = s.ambient_dim();
  if (k > n) throw Error(Errc::dimension_mismatch, "prefix_intersect: k exceeds ambient dimension");
  if (s.dim() == 0) return s;
  // Trailing coordinates first, so eliminating them leaves the rows that
  // live entirely inside the prefix.
  const std::size_t tail = n - k;
  QMat permuted(s.dim(), n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < tail; ++c) permuted(r, c) = s.basis()(r, k + c);
    for (std::size_t c = 0; c < k; ++c) permuted(r, tail + c) = s.basis()(r, c);
  }
  RrefResult red = rref(permuted);
  QMat kept(0, n);
  for (std::size_t r = 0; r < red.rank(); ++r) {
    if (red.pivots[r] < tail) continue;
    std::vector<Rational> v(n);
    for (std::size_t c = 0; c < k; ++c) v[c] = red.rref(r, tail + c);
    kept.append_row(v);
  }
  return Subspace::span(n, kept);
}

RankKernelImage rref_rank_kernel_image(const QMat& m) {
  RankKernelImage out;
  RrefResult r = rref(m);
  out.rank = r.rank();
  out.rref = std::move(r.rref);
  out.kernel = kernel(m);
  out.image = image(m);
  return out;
}

// ------------------------------------------------------------------ pencils

QMat PencilMatrix::at(const Rational& t) const { return A + t * B; }

UPoly pencil_det(const PencilMatrix& p) {
  if (p.A.rows() != p.A.cols() || p.A.rows() != p.B.rows() || p.A.cols() != p.B.cols())
    throw Error(Errc::shape_mismatch, "pencil_det: pencil must be square with equal shapes");
  const std::size_t n = p.A.rows();
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (std::size_t k = 0; k <= n; ++k) {
    nodes.push_back(interpolation_node(static_cast<int>(k)));
    values.push_back(determinant(p.at(nodes.back())));
  }
  return interpolate(nodes, values);
}

PencilFiltration pencil_degree_filtration(const QMat& eta, const QMat& eta_prime) {
  if (eta.rows() != eta.cols() || eta.rows() != eta_prime.rows() || eta.cols() != eta_prime.cols())
    throw Error(Errc::shape_mismatch, "pencil_degree_filtration: maps must be square with equal shapes");
  const std::size_t n = eta.rows();
  if (pencil_det({eta_prime, eta}).is_zero())
    throw Error(Errc::singular_pencil, "pencil_degree_filtration: det(eta' + t eta) vanishes identically");

  PencilFiltration out;
  const Subspace im = image(eta);
  out.kernel_dim = kernel(eta).dim();
  out.chain.push_back(Subspace(n));
  out.dims.push_back(0);
  for (std::size_t step = 0;; ++step) {
    if (step > n + 1) throw Error(Errc::internal, "pencil_degree_filtration: chain failed to stabilize");
    const Subspace& cur = out.chain.back();
    Subspace next = intersection(image(eta_prime, preimage(eta, cur)), im);
    const bool stable = next.dim() == cur.dim() && next.contains(cur);
    out.chain.push_back(std::move(next));
    out.dims.push_back(out.chain.back().dim());
    if (stable) {
      out.stabilized_at = step;
      break;
    }
  }
  out.degree = static_cast<int>(n) - static_cast<int>(out.kernel_dim) - static_cast<int>(out.dims.back());
  return out;
}

bool is_chain(std::span<const Subspace> chain) {
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i].contains(chain[i - 1])) return false;
  return true;
}

bool is_concave(std::span<const std::size_t> dims) {
  for (std::size_t i = 1; i + 1 < dims.size(); ++i)
    if (2 * dims[i] < dims[i - 1] + dims[i + 1]) return false;
  return true;
}

}  // namespace bezout::qlinalg
