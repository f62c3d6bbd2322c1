#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ppalg {

/// Small square integer matrix, used for reflection representations and
/// g-matrices. Entries stay tiny (roots of Dynkin type), int64 is ample.
struct IMat {
  int n = 0;
  std::vector<int64_t> a;

  IMat() = default;
  explicit IMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  int64_t& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  int64_t operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }

  static IMat identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool is_identity() const { return *this == identity(n); }

  friend IMat operator*(const IMat& x, const IMat& y) {
    assert(x.n == y.n);
    IMat r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        int64_t v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  friend bool operator==(const IMat& x, const IMat& y) {
    return x.n == y.n && x.a == y.a;
  }
  friend bool operator!=(const IMat& x, const IMat& y) { return !(x == y); }

  std::vector<int64_t> column(int j) const {
    std::vector<int64_t> c(n);
    for (int i = 0; i < n; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<int64_t> apply(const std::vector<int64_t>& v) const {
    std::vector<int64_t> r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  /// Fraction-free determinant (Bareiss).
  int64_t det() const {
    std::vector<int64_t> m = a;
    auto at = [&](int i, int j) -> int64_t& {
      return m[static_cast<size_t>(i) * n + j];
    };
    int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (at(k, k) == 0) {
        int sel = -1;
        for (int i = k + 1; i < n; ++i)
          if (at(i, k) != 0) {
            sel = i;
            break;
          }
        if (sel < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(at(k, j), at(sel, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j)
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
  }

  struct Hash {
    size_t operator()(const IMat& m) const {
      size_t h = 1469598103934665603ull;
      for (int64_t v : m.a) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
};

}  // namespace ppalg
