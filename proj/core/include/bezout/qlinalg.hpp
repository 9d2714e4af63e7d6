#pragma once

#include <bezout/rational.hpp>
#include <bezout/upoly.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bezout::qlinalg {

/// Dense row-major matrix of rationals. A matrix acts on column vectors, so a
/// linear map V -> W is stored with dim W rows and dim V columns.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMat(std::initializer_list<std::initializer_list<long>> rows);

  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  void append_row(std::span<const Rational> values);

  QMat transpose() const;
  bool is_zero() const;

  friend QMat operator*(const QMat& a, const QMat& b);
  friend QMat operator+(const QMat& a, const QMat& b);
  friend QMat operator*(const Rational& s, const QMat& a);
  friend bool operator==(const QMat& a, const QMat& b) = default;

  std::vector<Rational> apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rows of `top` followed by rows of `bottom`; column counts must agree.
QMat vstack(const QMat& top, const QMat& bottom);
// Columns of `left` followed by columns of `right`; row counts must agree.
QMat hstack(const QMat& left, const QMat& right);

struct RrefResult {
  QMat rref;                        // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of row r
  std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(QMat m);
std::size_t rank(const QMat& m);
Rational determinant(const QMat& m);

/// Linear subspace of Q^n held as a canonical basis: the nonzero rows of a
/// reduced row echelon matrix. Equal subspaces have identical bases, so
/// equality is a plain comparison.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);  // the zero subspace

  // Span of the rows of `generators`.
  static Subspace span(std::size_t ambient_dim, const QMat& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& generators);
  static Subspace full(std::size_t ambient_dim);
  // Span of the first k coordinate vectors.
  static Subspace coordinate_prefix(std::size_t ambient_dim, std::size_t k);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Rational> vector(std::size_t r) const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

  // Vectors annihilated by every basis vector under the standard pairing.
  Subspace annihilator() const;

 private:
  std::size_t ambient_ = 0;
  QMat basis_{0, 0};
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersection(const Subspace& s, const Subspace& t);
// { M v : v in S }; S lives in the column space of M.
Subspace image(const QMat& m, const Subspace& s);
// Column space of M.
Subspace image(const QMat& m);
// { v : M v in T }.
Subspace preimage(const QMat& m, const Subspace& t);
Subspace kernel(const QMat& m);
// S intersected with the span of the first k coordinates.
Subspace prefix_intersect(const Subspace& s, std::size_t k);

struct RankKernelImage {
  QMat rref;
  std::size_t rank = 0;
  Subspace kernel;
  Subspace image;
};
RankKernelImage rref_rank_kernel_image(const QMat& m);

/// A + t B.
struct PencilMatrix {
  QMat A;
  QMat B;
  QMat at(const Rational& t) const;
};

// det(A + t B) as an exact polynomial in t, by evaluation at the nodes
// 0, 1, -1, 2, ... and interpolation.
UPoly pencil_det(const PencilMatrix& p);

struct PencilFiltration {
  std::vector<Subspace> chain;  // L_0, L_1, ... up to and including the first repeat
  std::vector<std::size_t> dims;
  std::size_t kernel_dim = 0;   // dim of the kernel of the t-coefficient
  int degree = 0;               // deg_t det(eta' + t eta)
  std::size_t stabilized_at = 0;
};

// Filtration L_0 = 0, L_{i+1} = eta'(eta^{-1}(L_i)) ∩ Im eta for the pencil
// eta' + t eta, and the resulting degree n - dim ker eta - dim L_inf.
// Throws Errc::singular_pencil when det(eta' + t eta) vanishes identically.
PencilFiltration pencil_degree_filtration(const QMat& eta, const QMat& eta_prime);

bool is_chain(std::span<const Subspace> chain);
bool is_concave(std::span<const std::size_t> dims);

}  // namespace bezout::qlinalg
