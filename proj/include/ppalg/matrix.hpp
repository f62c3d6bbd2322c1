#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "ppalg/field.hpp"

namespace ppalg {

/// Dense matrix over an exact field. Sizes in this library are tiny
/// (dim Lambda <= a few dozen), so no sparsity tricks are needed.
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}

  F& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const F& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  bool is_zero() const {
    for (const F& x : a)
      if (!ppalg::is_zero(x)) return false;
    return true;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const F& xik = x(i, k);
        if (ppalg::is_zero(xik)) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  Mat transpose() const {
    Mat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    std::vector<F> r(rows, F(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!ppalg::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }
};

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row. Zero rows are dropped.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (!is_zero(m(i, col))) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(row, j));
    F inv = field_inv(m(row, col));
    for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  // drop zero rows
  Mat<F> out(static_cast<int>(pivots.size()), m.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  m = std::move(out);
  return pivots;
}

template <class F>
int rank_of(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

/// Basis of the right kernel {x : m x = 0}, one vector per column.
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
  int n = m.cols;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  std::vector<int> pivot_row(n, -1);
  for (size_t r = 0; r < pivots.size(); ++r) {
    is_pivot[pivots[r]] = true;
    pivot_row[pivots[r]] = static_cast<int>(r);
  }
  std::vector<std::vector<F>> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<F> v(n, F(0));
    v[j] = F(1);
    for (int c = 0; c < n; ++c)
      if (is_pivot[c]) v[c] = -m(pivot_row[c], j);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical subspace of row vectors: reduced echelon basis, so two
/// subspaces are equal iff their representations are identical.
template <class F>
class RowSpace {
 public:
  RowSpace() = default;
  explicit RowSpace(int ambient) : ambient_(ambient), basis_(0, ambient) {}
  RowSpace(int ambient, const std::vector<std::vector<F>>& gens)
      : ambient_(ambient), basis_(0, ambient) {
    insert_all(gens);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Mat<F>& basis() const { return basis_; }
  std::vector<F> basis_row(int i) const {
    std::vector<F> v(ambient_);
    for (int j = 0; j < ambient_; ++j) v[j] = basis_(i, j);
    return v;
  }

  void insert(const std::vector<F>& v) {
    Mat<F> m(basis_.rows + 1, ambient_);
    for (int i = 0; i < basis_.rows; ++i)
      for (int j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
    for (int j = 0; j < ambient_; ++j) m(basis_.rows, j) = v[j];
    pivots_ = rref(m);
    basis_ = std::move(m);
  }

  void insert_all(const std::vector<std::vector<F>>& gens) {
    Mat<F> m(basis_.rows + static_cast<int>(gens.size()), ambient_);
    for (int i = 0; i < basis_.rows; ++i)
      for (int j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
    for (size_t g = 0; g < gens.size(); ++g)
      for (int j = 0; j < ambient_; ++j)
        m(basis_.rows + static_cast<int>(g), j) = gens[g][j];
    pivots_ = rref(m);
    basis_ = std::move(m);
  }

  /// Residual of v after elimination against the basis; zero iff v lies in
  /// the subspace.
  std::vector<F> reduce(std::vector<F> v) const {
    for (int r = 0; r < basis_.rows; ++r) {
      const F& c = v[pivots_[r]];
      if (is_zero(c)) continue;
      F f = c;
      for (int j = 0; j < ambient_; ++j) v[j] -= f * basis_(r, j);
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    std::vector<F> r = reduce(v);
    for (const F& x : r)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<std::vector<F>> coords(const std::vector<F>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<F> c(basis_.rows);
    for (int r = 0; r < basis_.rows; ++r) c[r] = v[pivots_[r]];
    return c;
  }

  RowSpace sum(const RowSpace& other) const {
    RowSpace r = *this;
    for (int i = 0; i < other.dim(); ++i) r.insert(other.basis_row(i));
    return r;
  }

  RowSpace intersect(const RowSpace& other) const {
    // coefficients y with y * basis in the other space
    Mat<F> resid(dim(), ambient_);
    for (int i = 0; i < dim(); ++i) {
      std::vector<F> r = other.reduce(basis_row(i));
      for (int j = 0; j < ambient_; ++j) resid(i, j) = r[j];
    }
    std::vector<std::vector<F>> ys = kernel_basis(resid.transpose());
    RowSpace out(ambient_);
    for (const auto& y : ys) {
      std::vector<F> v(ambient_, F(0));
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < ambient_; ++j) v[j] += y[i] * basis_(i, j);
      out.insert(v);
    }
    return out;
  }

  friend bool operator==(const RowSpace& x, const RowSpace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }
  friend bool operator!=(const RowSpace& x, const RowSpace& y) {
    return !(x == y);
  }

 private:
  int ambient_ = 0;
  Mat<F> basis_;
  std::vector<int> pivots_;
};

}  // namespace ppalg
