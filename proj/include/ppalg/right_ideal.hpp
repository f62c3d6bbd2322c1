#pragma once

#include <unordered_map>
#include <vector>

#include "ppalg/algebra.hpp"
#include "ppalg/module_rep.hpp"
#include "ppalg/weyl.hpp"

namespace ppalg {

/// Two-sided ideals of Lambda, held as canonical row spaces in the
/// coordinates of the algebra basis. All the ideals this library works
/// with are products of the maximal ideals I_i = Lambda(1-e_i)Lambda.
template <class F>
class IdealCalculus {
 public:
  explicit IdealCalculus(const Algebra<F>& A) : A_(A) {}

  const Algebra<F>& algebra() const { return A_; }

  RowSpace<F> unit_ideal() const {
    RowSpace<F> s(A_.dim());
    for (int k = 0; k < A_.dim(); ++k) s.insert(A_.basis_elt(k));
    return s;
  }

  /// I_i = Lambda (1 - e_i) Lambda: the annihilator of the simple S_i.
  RowSpace<F> maximal_ideal(int i) const {
    std::vector<std::vector<F>> gens;
    for (int j = 1; j <= A_.n(); ++j)
      if (j != i) gens.push_back(A_.e(j));
    return two_sided_closure(gens);
  }

  /// I_i * J, computed as the two-sided closure of (1 - e_i) J.
  RowSpace<F> maximal_times(int i, const RowSpace<F>& J) const {
    std::vector<std::vector<F>> gens;
    for (int r = 0; r < J.dim(); ++r) {
      std::vector<F> x = J.basis_row(r);
      for (int k = 0; k < A_.dim(); ++k)
        if (A_.basis()[k].src == i) x[k] = F(0);
      gens.push_back(std::move(x));
    }
    return two_sided_closure(gens);
  }

  /// General ideal product I J.
  RowSpace<F> product(const RowSpace<F>& I, const RowSpace<F>& J) const {
    RowSpace<F> out(A_.dim());
    for (int r = 0; r < I.dim(); ++r) {
      std::vector<F> x = I.basis_row(r);
      for (int s = 0; s < J.dim(); ++s)
        out.insert(A_.mult(x, J.basis_row(s)));
    }
    return out;
  }

  /// I_w = I_{i_1} ... I_{i_k} along a reduced word for w; independent of
  /// the choice of word.
  RowSpace<F> ideal_of(const WeylElement& w) const {
    return ideal_of_word(w.word);
  }

  RowSpace<F> ideal_of_word(const std::vector<int>& word) const {
    RowSpace<F> cur = unit_ideal();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      cur = maximal_times(*it, cur);
    return cur;
  }

  /// The slice e_i I as a subspace of Lambda.
  RowSpace<F> slice(int i, const RowSpace<F>& I) const {
    RowSpace<F> out(A_.dim());
    for (int r = 0; r < I.dim(); ++r) {
      std::vector<F> x = I.basis_row(r);
      for (int k = 0; k < A_.dim(); ++k)
        if (A_.basis()[k].src != i) x[k] = F(0);
      out.insert(x);
    }
    return out;
  }

  /// Representation carried by a right submodule of Lambda.
  ModuleRep<F> rep_of(const RowSpace<F>& I) const {
    int n = A_.n();
    std::vector<std::vector<int>> idx(n + 1);  // vertex -> Lambda basis ids
    std::vector<int> pos(A_.dim(), -1);
    for (int k = 0; k < A_.dim(); ++k) {
      int t = A_.basis()[k].tgt;
      pos[k] = static_cast<int>(idx[t].size());
      idx[t].push_back(k);
    }
    ModuleRep<F> m;
    m.alg = &A_;
    std::vector<RowSpace<F>> comp;
    for (int v = 1; v <= n; ++v) {
      RowSpace<F> c(static_cast<int>(idx[v].size()));
      for (int r = 0; r < I.dim(); ++r) {
        std::vector<F> x = I.basis_row(r);
        std::vector<F> res(idx[v].size());
        for (size_t j = 0; j < idx[v].size(); ++j) res[j] = x[idx[v][j]];
        c.insert(res);
      }
      m.dims.push_back(c.dim());
      comp.push_back(std::move(c));
    }
    for (const Arrow& a : A_.dq().arrows()) {
      int s = a.src, t = a.tgt;
      Mat<F> mat(m.dims[t - 1], m.dims[s - 1]);
      for (int c = 0; c < m.dims[s - 1]; ++c) {
        std::vector<F> row = comp[s - 1].basis_row(c);
        std::vector<F> x(A_.dim(), F(0));
        for (size_t j = 0; j < idx[s].size(); ++j) x[idx[s][j]] = row[j];
        std::vector<F> img = A_.right_mult_arrow(x, a.id);
        std::vector<F> res(idx[t].size());
        for (size_t j = 0; j < idx[t].size(); ++j) res[j] = img[idx[t][j]];
        auto co = comp[t - 1].coords(res);
        if (!co) throw std::logic_error("span is not a right submodule");
        for (int r = 0; r < mat.rows; ++r) mat(r, c) = (*co)[r];
      }
      m.act.push_back(std::move(mat));
    }
    return m;
  }

  ModuleRep<F> slice_rep(int i, const RowSpace<F>& I) const {
    return rep_of(slice(i, I));
  }

  /// Right annihilator of a module; a two-sided ideal of Lambda.
  RowSpace<F> annihilator(const ModuleRep<F>& M) const {
    std::vector<std::vector<F>> rows;
    for (int v = 1; v <= A_.n(); ++v)
      for (int j = 0; j < M.dims[v - 1]; ++j) {
        std::vector<F> x(M.total(), F(0));
        x[M.offset(v) + j] = F(1);
        // the map lambda -> x . lambda, one constraint row per output coord
        std::vector<std::vector<F>> block(M.total(),
                                          std::vector<F>(A_.dim(), F(0)));
        for (int k = 0; k < A_.dim(); ++k) {
          std::vector<F> img = apply_basis(M, x, k);
          for (int t = 0; t < M.total(); ++t) block[t][k] = img[t];
        }
        for (auto& b : block) rows.push_back(std::move(b));
      }
    Mat<F> sys(static_cast<int>(rows.size()), A_.dim());
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < A_.dim(); ++c) sys(static_cast<int>(r), c) = rows[r][c];
    RowSpace<F> out(A_.dim());
    for (const auto& x : kernel_basis(sys)) out.insert(x);
    return out;
  }

 private:
  RowSpace<F> two_sided_closure(std::vector<std::vector<F>> gens) const {
    RowSpace<F> s(A_.dim());
    for (auto& g : gens) s.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int r = 0; r < s.dim(); ++r)
        for (const Arrow& a : A_.dq().arrows()) {
          std::vector<F> x = s.basis_row(r);
          std::vector<F> right = A_.right_mult_arrow(x, a.id);
          if (!s.contains(right)) {
            s.insert(right);
            grew = true;
          }
          std::vector<F> left = A_.mult(A_.arrow_elt(a.id), x);
          if (!s.contains(left)) {
            s.insert(left);
            grew = true;
          }
        }
    }
    return s;
  }

  const Algebra<F>& A_;
};

/// All ideals I_w over a full enumeration of W, filled by one product per
/// element along the enumeration's breadth-first parent links.
template <class F>
class IdealTable {
 public:
  IdealTable(const IdealCalculus<F>& calc, const WeylGroup& W,
             const WeylGroup::Enumeration& en)
      : calc_(calc) {
    ideals_.reserve(en.elements.size());
    for (const WeylElement& w : en.elements) {
      if (w.length == 0) {
        ideals_.push_back(calc.unit_ideal());
        continue;
      }
      int i = w.word.front();
      WeylElement parent = W.s_times(i, w);
      ideals_.push_back(
          calc.maximal_times(i, ideals_[en.index_of(parent)]));
    }
  }

  const RowSpace<F>& at(int idx) const { return ideals_[idx]; }
  size_t size() const { return ideals_.size(); }

 private:
  const IdealCalculus<F>& calc_;
  std::vector<RowSpace<F>> ideals_;
};

/// Support tau-tilting pair attached to w: the module I_w together with
/// the projective e_{nakayama(i)} Lambda for every vertex i with
/// e_i I_w = 0.
template <class F>
struct SttPair {
  ModuleRep<F> module;
  std::vector<int> support;        // vertices i with e_i I_w != 0
  std::vector<int> proj_vertices;  // nakayama images of the complement
};

template <class F>
SttPair<F> stt_pair(const IdealCalculus<F>& calc, const RowSpace<F>& ideal) {
  const Algebra<F>& A = calc.algebra();
  SttPair<F> p;
  p.module = calc.rep_of(ideal);
  for (int i = 1; i <= A.n(); ++i) {
    if (calc.slice(i, ideal).dim() > 0)
      p.support.push_back(i);
    else
      p.proj_vertices.push_back(A.nakayama(i));
  }
  return p;
}

}  // namespace ppalg
