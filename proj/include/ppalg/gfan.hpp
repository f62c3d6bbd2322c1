#pragma once

#include <stdexcept>
#include <vector>

#include "ppalg/intmat.hpp"
#include "ppalg/right_ideal.hpp"
#include "ppalg/tau.hpp"
#include "ppalg/weyl.hpp"

namespace ppalg {

struct GMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// g-vector of the slice e_i I_w: the multiplicity difference P_0 - P_1
/// of its minimal presentation, or minus the unit vector at nakayama(i)
/// when the slice vanishes.
template <class F>
std::vector<int64_t> g_vector_of_slice(const IdealCalculus<F>& calc,
                                       const RowSpace<F>& ideal, int i) {
  const Algebra<F>& A = calc.algebra();
  ModuleRep<F> s = calc.slice_rep(i, ideal);
  if (s.total() == 0) {
    std::vector<int64_t> g(A.n(), 0);
    g[A.nakayama(i) - 1] = -1;
    return g;
  }
  return g_vector(s);
}

/// g-matrix from minimal presentations: column i is the g-vector of
/// e_i I_w.
template <class F>
IMat g_matrix_presentations(const IdealCalculus<F>& calc,
                            const RowSpace<F>& ideal) {
  int n = calc.algebra().n();
  IMat g(n);
  for (int i = 1; i <= n; ++i) {
    auto col = g_vector_of_slice(calc, ideal, i);
    for (int r = 0; r < n; ++r) g(r, i - 1) = col[r];
  }
  return g;
}

/// g-matrix from the contragradient reflection representation.
inline IMat g_matrix_reflections(const WeylElement& w) { return w.star; }

/// The two routes must agree; returns the common value.
template <class F>
IMat g_matrix_checked(const IdealCalculus<F>& calc, const RowSpace<F>& ideal,
                      const WeylElement& w) {
  IMat a = g_matrix_presentations(calc, ideal);
  if (a != w.star) throw GMismatch("presentation and reflection g-matrices differ");
  return a;
}

/// One chamber C(w): the open simplicial cone on the g-matrix columns.
struct Chamber {
  int index = 0;              // position in the enumeration
  IMat gmat;
  std::vector<int64_t> witness;  // sum of the columns, interior point
  std::vector<int> signs;        // sign of <witness, x> per positive root
};

struct ChamberFan {
  std::vector<Chamber> chambers;
  std::vector<std::vector<int64_t>> positive_roots;
};

inline ChamberFan chamber_fan(const WeylGroup& W,
                              const WeylGroup::Enumeration& en) {
  ChamberFan fan;
  fan.positive_roots = W.roots().positives;
  for (size_t k = 0; k < en.elements.size(); ++k) {
    Chamber c;
    c.index = static_cast<int>(k);
    c.gmat = en.elements[k].star;
    c.witness.assign(W.rank(), 0);
    for (int i = 0; i < W.rank(); ++i)
      for (int j = 0; j < W.rank(); ++j) c.witness[i] += c.gmat(i, j);
    for (const auto& root : fan.positive_roots) {
      int64_t p = 0;
      for (int i = 0; i < W.rank(); ++i) p += c.witness[i] * root[i];
      c.signs.push_back(p > 0 ? 1 : p < 0 ? -1 : 0);
    }
    fan.chambers.push_back(std::move(c));
  }
  return fan;
}

/// Locate a rational point in the fan. Exactly one chamber contains any
/// point off the walls; a zero coefficient reports a boundary.
struct ConeLocation {
  bool found = false;
  bool boundary = false;
  int index = -1;
};

inline ConeLocation cone_membership(const std::vector<Rat>& point,
                                    const ChamberFan& fan) {
  ConeLocation loc;
  int n = static_cast<int>(point.size());
  for (const Chamber& c : fan.chambers) {
    // solve gmat * x = point over the rationals (gmat is unimodular)
    Mat<Rat> m(n, n + 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = Rat(static_cast<long>(c.gmat(i, j)));
      m(i, n) = point[i];
    }
    rref(m);
    std::vector<Rat> x(n);
    bool ok = static_cast<int>(m.rows) == n;
    for (int i = 0; i < n && ok; ++i) x[i] = m(i, n);
    bool pos = true, nonneg = true;
    for (int i = 0; i < n; ++i) {
      int s = sgn(x[i]);
      if (s < 0) { pos = nonneg = false; break; }
      if (s == 0) pos = false;
    }
    if (pos) {
      loc.found = true;
      loc.index = c.index;
      return loc;
    }
    if (nonneg) {
      loc.found = true;
      loc.boundary = true;
      loc.index = c.index;
      return loc;
    }
  }
  return loc;
}

}  // namespace ppalg
