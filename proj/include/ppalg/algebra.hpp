#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ppalg/matrix.hpp"
#include "ppalg/quiver.hpp"

namespace ppalg {

struct DegreeBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The preprojective algebra of a Dynkin quiver, built grade by grade as
/// a quotient of the path algebra of the double quiver by the mesh
/// relations sum_a (a a* - a* a).
///
/// The basis consists of chosen representative paths; elements are dense
/// coefficient vectors over that basis. A path p from s to t lies in
/// e_s Lambda e_t, and products compose left to right: for x in
/// e_s Lambda e_t and y in e_t Lambda e_u, xy lies in e_s Lambda e_u.
template <class F>
class Algebra {
 public:
  struct Basis {
    int grade;
    int src;
    int tgt;
    std::vector<int> chain;  // arrow ids of the representative path
  };

  using Elt = std::vector<F>;

  explicit Algebra(const DynkinQuiver& q) : dq_(q) { build(); }
  explicit Algebra(const DoubleQuiver& dq) : dq_(dq) { build(); }

  const DoubleQuiver& dq() const { return dq_; }
  const DynkinQuiver& quiver() const { return dq_.base(); }
  int n() const { return dq_.n(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Basis>& basis() const { return basis_; }
  int max_grade() const { return max_grade_; }

  Elt zero() const { return Elt(basis_.size(), F(0)); }

  Elt basis_elt(int k) const {
    Elt x = zero();
    x[k] = F(1);
    return x;
  }

  Elt e(int i) const { return basis_elt(i - 1); }  // grade 0 comes first

  Elt unit() const {
    Elt x = zero();
    for (int i = 0; i < n(); ++i) x[i] = F(1);
    return x;
  }

  Elt arrow_elt(int arrow_id) const {
    return basis_elt(arrow_basis_.at(arrow_id));
  }

  Elt right_mult_arrow(const Elt& x, int arrow_id) const {
    Elt r = zero();
    for (size_t k = 0; k < x.size(); ++k) {
      if (is_zero(x[k])) continue;
      for (const auto& [j, c] : table_[k][arrow_id]) r[j] += x[k] * c;
    }
    return r;
  }

  Elt right_mult_basis(const Elt& x, int k) const {
    const Basis& b = basis_[k];
    if (b.grade == 0) {
      Elt r = zero();
      for (size_t j = 0; j < x.size(); ++j)
        if (basis_[j].tgt == b.tgt) r[j] = x[j];
      return r;
    }
    Elt r = x;
    for (int a : b.chain) r = right_mult_arrow(r, a);
    return r;
  }

  Elt mult(const Elt& x, const Elt& y) const {
    Elt r = zero();
    for (size_t k = 0; k < y.size(); ++k) {
      if (is_zero(y[k])) continue;
      Elt t = right_mult_basis(x, static_cast<int>(k));
      for (size_t j = 0; j < r.size(); ++j) r[j] += t[j] * y[k];
    }
    return r;
  }

  /// Basis indices of e_i Lambda (src == i) or Lambda e_i (src == false).
  std::vector<int> vertex_basis(int i, bool by_src = true) const {
    std::vector<int> out;
    for (size_t k = 0; k < basis_.size(); ++k)
      if ((by_src ? basis_[k].src : basis_[k].tgt) == i)
        out.push_back(static_cast<int>(k));
    return out;
  }

  std::vector<int> grade_dims() const {
    std::vector<int> d(max_grade_ + 1, 0);
    for (const Basis& b : basis_) ++d[b.grade];
    return d;
  }

  /// Nakayama permutation: soc(e_i Lambda) is the simple at nakayama(i).
  /// Computed directly from the socle rather than from a type table.
  int nakayama(int i) const { return nakayama_.at(i - 1); }

  std::string basis_name(int k) const {
    const Basis& b = basis_[k];
    if (b.grade == 0) return "e" + std::to_string(b.src);
    std::string s;
    for (size_t j = 0; j < b.chain.size(); ++j) {
      if (j) s += '.';
      s += dq_.arrow_name(b.chain[j]);
    }
    return s;
  }

  std::string elt_string(const Elt& x) const {
    std::string s;
    for (size_t k = 0; k < x.size(); ++k) {
      if (is_zero(x[k])) continue;
      if (!s.empty()) s += " + ";
      std::string c = to_string(x[k]);
      if (c == "1")
        s += basis_name(static_cast<int>(k));
      else
        s += c + "*" + basis_name(static_cast<int>(k));
    }
    return s.empty() ? "0" : s;
  }

  nlohmann::json dump() const {
    nlohmann::json j;
    j["quiver"] = dq_.base().to_edge_list();
    j["dimension"] = dim();
    j["grade_dimensions"] = grade_dims();
    j["nakayama"] = nlohmann::json::array();
    for (int i = 1; i <= n(); ++i) j["nakayama"].push_back(nakayama(i));
    j["basis"] = nlohmann::json::array();
    for (size_t k = 0; k < basis_.size(); ++k) {
      nlohmann::json b;
      b["name"] = basis_name(static_cast<int>(k));
      b["grade"] = basis_[k].grade;
      b["src"] = basis_[k].src;
      b["tgt"] = basis_[k].tgt;
      j["basis"].push_back(b);
    }
    return j;
  }

 private:
  static constexpr int kGradeGuard = 512;

  void build() {
    int n = dq_.n();
    int na = static_cast<int>(dq_.arrows().size());
    for (int i = 1; i <= n; ++i) basis_.push_back({0, i, i, {}});
    table_.resize(basis_.size(), std::vector<Expr>(na));

    std::vector<int> prev2, prev;  // grade d-2 and d-1 basis indices
    for (int i = 0; i < n; ++i) prev.push_back(i);

    for (int d = 1;; ++d) {
      if (d > kGradeGuard)
        throw DegreeBoundExceeded("graded construction did not terminate");
      // candidate symbols (b, a) = path of b extended by arrow a
      std::vector<std::pair<int, int>> symbols;
      std::map<std::pair<int, int>, int> symindex;
      for (int b : prev)
        for (const Arrow& a : dq_.arrows())
          if (a.src == basis_[b].tgt) {
            symindex[{b, a.id}] = static_cast<int>(symbols.size());
            symbols.push_back({b, a.id});
          }
      if (symbols.empty()) break;

      // mesh relations, planted at the right end of grade d-2 paths:
      // for c ending at vertex t, sum over arrows a out of t of
      // sign(a) * (c a) a*, with c a rewritten in the grade d-1 basis
      Mat<F> rel(static_cast<int>(prev2.size()), static_cast<int>(symbols.size()));
      for (size_t r = 0; r < prev2.size(); ++r) {
        int c = prev2[r];
        for (const Arrow& a : dq_.arrows()) {
          if (a.src != basis_[c].tgt) continue;
          F sgn = dq_.is_starred(a.id) ? F(-1) : F(1);
          for (const auto& [k, coef] : table_[c][a.id])
            rel(static_cast<int>(r), symindex.at({k, dq_.star(a.id)})) +=
                sgn * coef;
        }
      }
      std::vector<int> pivots = rref(rel);
      std::vector<bool> is_pivot(symbols.size(), false);
      std::vector<int> pivot_row(symbols.size(), -1);
      for (size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        pivot_row[pivots[r]] = static_cast<int>(r);
      }

      // non-pivot symbols survive as new basis paths
      std::vector<int> cur;
      std::vector<int> sym_basis(symbols.size(), -1);
      for (size_t s = 0; s < symbols.size(); ++s) {
        if (is_pivot[s]) continue;
        auto [b, aid] = symbols[s];
        Basis nb;
        nb.grade = d;
        nb.src = basis_[b].src;
        nb.tgt = dq_.arrows()[aid].tgt;
        nb.chain = basis_[b].chain;
        if (nb.grade == 1) nb.chain = {aid};
        else nb.chain.push_back(aid);
        sym_basis[s] = static_cast<int>(basis_.size());
        cur.push_back(static_cast<int>(basis_.size()));
        if (d == 1) arrow_basis_[aid] = static_cast<int>(basis_.size());
        basis_.push_back(std::move(nb));
        table_.emplace_back(na);
      }

      // arrow multiplication out of grade d-1
      for (size_t s = 0; s < symbols.size(); ++s) {
        auto [b, aid] = symbols[s];
        Expr& ex = table_[b][aid];
        if (!is_pivot[s]) {
          ex.push_back({sym_basis[s], F(1)});
          continue;
        }
        int r = pivot_row[s];
        for (size_t j = 0; j < symbols.size(); ++j)
          if (!is_pivot[j] && !is_zero(rel(r, static_cast<int>(j))))
            ex.push_back({sym_basis[j], -rel(r, static_cast<int>(j))});
      }

      if (cur.empty()) break;
      max_grade_ = d;
      prev2 = std::move(prev);
      prev = std::move(cur);
    }

    compute_nakayama();
  }

  void compute_nakayama() {
    for (int i = 1; i <= n(); ++i) {
      std::vector<int> rows = vertex_basis(i);
      // socle of e_i Lambda: right-multiplication by every arrow kills it
      int na = static_cast<int>(dq_.arrows().size());
      Mat<F> m(dim() * na, static_cast<int>(rows.size()));
      for (size_t c = 0; c < rows.size(); ++c)
        for (int a = 0; a < na; ++a) {
          Elt img = right_mult_arrow(basis_elt(rows[c]), a);
          for (int j = 0; j < dim(); ++j)
            m(a * dim() + j, static_cast<int>(c)) = img[j];
        }
      auto soc = kernel_basis(m);
      if (soc.size() != 1)
        throw std::logic_error("socle of e_i Lambda is not simple");
      int v = -1;
      for (size_t c = 0; c < rows.size(); ++c)
        if (!is_zero(soc[0][c])) {
          int t = basis_[rows[c]].tgt;
          if (v >= 0 && v != t)
            throw std::logic_error("socle spreads over two vertices");
          v = t;
        }
      nakayama_.push_back(v);
    }
  }

  using Expr = std::vector<std::pair<int, F>>;

  DoubleQuiver dq_;
  std::vector<Basis> basis_;
  std::vector<std::vector<Expr>> table_;  // [basis][arrow] -> next grade
  std::map<int, int> arrow_basis_;        // arrow id -> grade-1 basis index
  std::vector<int> nakayama_;
  int max_grade_ = 0;
};

}  // namespace ppalg
