#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ppalg/intmat.hpp"
#include "ppalg/quiver.hpp"

namespace ppalg {

/// Group element, canonically represented by the matrix of the
/// contragradient reflection representation (faithful on Dynkin types).
/// For a reduced word s_{i_1}...s_{i_k} the stored matrices are the
/// products sigma*_{i_k}...sigma*_{i_1} and sigma_{i_k}...sigma_{i_1},
/// matching the composition order the g-matrix description uses.
struct WeylElement {
  IMat star;               // canonical form
  IMat geom;               // reflection representation, same ordering
  std::vector<int> word;   // a reduced word, generator indices 1..n
  int length = 0;

  friend bool operator==(const WeylElement& x, const WeylElement& y) {
    return x.star == y.star;
  }
  friend bool operator!=(const WeylElement& x, const WeylElement& y) {
    return !(x == y);
  }
  bool is_identity() const { return star.is_identity(); }

  std::string word_string() const {
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(word[i]);
    }
    return s;
  }
};

struct RootSystem {
  std::vector<std::vector<int64_t>> roots;
  std::vector<std::vector<int64_t>> positives;
};

class WeylGroup {
 public:
  explicit WeylGroup(const DynkinQuiver& q) : q_(q), n_(q.n()) {
    DoubleQuiver dq(q);
    auto m = q.m_matrix();
    for (int i = 1; i <= n_; ++i) {
      IMat s = IMat::identity(n_);
      // sigma_i(e_j) = e_j + (m_ij - 2 delta_ij) e_i
      for (int j = 1; j <= n_; ++j)
        s(i - 1, j - 1) += m[i - 1][j - 1] - 2 * (i == j ? 1 : 0);
      sigma_.push_back(s);
      IMat t = IMat::identity(n_);
      // sigma*_i fixes e_j (j != i) and sends e_i to -e_i + sum over
      // doubled arrows out of i of e_{target}
      t(i - 1, i - 1) = -1;
      for (const Arrow& a : dq.arrows())
        if (a.src == i) t(a.tgt - 1, i - 1) += 1;
      sigma_star_.push_back(t);
    }
  }

  const DynkinQuiver& quiver() const { return q_; }
  int rank() const { return n_; }
  const IMat& sigma(int i) const { return sigma_.at(i - 1); }
  const IMat& sigma_star(int i) const { return sigma_star_.at(i - 1); }

  WeylElement identity() const {
    WeylElement e;
    e.star = IMat::identity(n_);
    e.geom = IMat::identity(n_);
    return e;
  }

  WeylElement generator(int i) const {
    check_vertex(i);
    WeylElement e;
    e.star = sigma_star(i);
    e.geom = sigma(i);
    e.word = {i};
    e.length = 1;
    return e;
  }

  /// Group product u*v (word of u followed by word of v).
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const {
    return from_matrices(v.star * u.star, v.geom * u.geom);
  }

  /// Left multiplication s_i * w, the mutation move.
  WeylElement s_times(int i, const WeylElement& w) const {
    check_vertex(i);
    return from_matrices(w.star * sigma_star(i), w.geom * sigma(i));
  }

  WeylElement inverse(const WeylElement& w) const {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    return from_word(rev);
  }

  WeylElement from_word(const std::vector<int>& word) const {
    IMat star = IMat::identity(n_), geom = IMat::identity(n_);
    for (int i : word) {
      check_vertex(i);
      star = sigma_star(i) * star;
      geom = sigma(i) * geom;
    }
    return from_matrices(star, geom);
  }

  /// i is a left descent of w iff l(s_i w) < l(w), detected on the stored
  /// reflection matrix: the i-th column must be a negative root.
  bool is_left_descent(const WeylElement& w, int i) const {
    for (int r = 0; r < n_; ++r)
      if (w.geom(r, i - 1) > 0) return false;
    return true;
  }

  std::vector<int> left_descents(const WeylElement& w) const {
    std::vector<int> d;
    for (int i = 1; i <= n_; ++i)
      if (is_left_descent(w, i)) d.push_back(i);
    return d;
  }

  int length(const WeylElement& w) const { return w.length; }

  struct Enumeration {
    std::vector<WeylElement> elements;  // BFS order, graded by length
    std::unordered_map<IMat, int, IMat::Hash> index;
    int index_of(const WeylElement& w) const { return index.at(w.star); }
  };

  Enumeration enumerate() const {
    Enumeration e;
    e.elements.push_back(identity());
    e.index.emplace(e.elements[0].star, 0);
    for (size_t head = 0; head < e.elements.size(); ++head) {
      WeylElement w = e.elements[head];  // copy: vector may reallocate
      for (int i = 1; i <= n_; ++i) {
        if (is_left_descent(w, i)) continue;
        WeylElement v;
        v.star = w.star * sigma_star(i);
        v.geom = w.geom * sigma(i);
        v.word.reserve(w.word.size() + 1);
        v.word.push_back(i);
        v.word.insert(v.word.end(), w.word.begin(), w.word.end());
        v.length = w.length + 1;
        if (e.index.emplace(v.star, static_cast<int>(e.elements.size())).second)
          e.elements.push_back(std::move(v));
      }
    }
    return e;
  }

  /// Left weak order: u <=_L w iff l(w) = l(u) + l(w u^{-1}).
  bool weak_leq(const WeylElement& u, const WeylElement& w) const {
    if (u.length > w.length) return false;
    WeylElement q = multiply(w, inverse(u));
    return w.length == u.length + q.length;
  }

  /// Right weak order: u <=_R w iff l(w) = l(u) + l(u^{-1} w), i.e. some
  /// reduced word of w starts with one of u.
  bool right_weak_leq(const WeylElement& u, const WeylElement& w) const {
    if (u.length > w.length) return false;
    WeylElement q = multiply(inverse(u), w);
    return w.length == u.length + q.length;
  }

  /// Precomputed order relation over an enumeration; leq[u][w] means
  /// u <=_L w.
  std::vector<std::vector<bool>> weak_order_table(const Enumeration& e) const {
    size_t m = e.elements.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (size_t u = 0; u < m; ++u)
      for (size_t w = 0; w < m; ++w)
        leq[u][w] = weak_leq(e.elements[u], e.elements[w]);
    return leq;
  }

  /// Longest element by greedy ascent; no enumeration needed.
  WeylElement longest_element() const {
    WeylElement w = identity();
    for (;;) {
      int up = -1;
      for (int i = 1; i <= n_ && up < 0; ++i)
        if (!is_left_descent(w, i)) up = i;
      if (up < 0) return w;
      w = s_times(up, w);
    }
  }

  /// |W| by breadth-first search keeping only matrix keys; usable where
  /// a full enumeration would not fit in memory.
  uint64_t count_elements() const {
    auto key = [this](const IMat& m) {
      std::string s(m.a.size(), '\0');
      for (size_t i = 0; i < m.a.size(); ++i)
        s[i] = static_cast<char>(static_cast<int8_t>(m.a[i]));
      return s;
    };
    std::unordered_set<std::string> seen;
    std::vector<IMat> frontier = {IMat::identity(n_)};
    seen.insert(key(frontier[0]));
    uint64_t count = 1;
    while (!frontier.empty()) {
      std::vector<IMat> next;
      for (const IMat& g : frontier)
        for (int i = 1; i <= n_; ++i) {
          bool descent = true;
          for (int r = 0; r < n_; ++r)
            if (g(r, i - 1) > 0) descent = false;
          if (descent) continue;
          IMat h = g * sigma(i);
          if (seen.insert(key(h)).second) {
            ++count;
            next.push_back(std::move(h));
          }
        }
      frontier = std::move(next);
    }
    return count;
  }

  WeylElement longest_element(const Enumeration& e) const {
    const WeylElement* best = &e.elements[0];
    for (const WeylElement& w : e.elements)
      if (w.length > best->length) best = &w;
    return *best;
  }

  WeylElement meet(const Enumeration& e, const WeylElement& u,
                   const WeylElement& w) const {
    return bound(e, u, w, /*lower=*/true);
  }
  WeylElement join(const Enumeration& e, const WeylElement& u,
                   const WeylElement& w) const {
    return bound(e, u, w, /*lower=*/false);
  }

  /// Hasse quiver of left weak order: edges w -> s_i w when length drops,
  /// labelled by i. Returned as (from index, to index, i).
  std::vector<std::array<int, 3>> hasse_edges(const Enumeration& e) const {
    std::vector<std::array<int, 3>> edges;
    for (size_t k = 0; k < e.elements.size(); ++k)
      for (int i : left_descents(e.elements[k])) {
        WeylElement v = s_times(i, e.elements[k]);
        edges.push_back({static_cast<int>(k), e.index_of(v), i});
      }
    return edges;
  }

  RootSystem roots() const {
    std::set<std::vector<int64_t>> seen;
    std::vector<std::vector<int64_t>> frontier;
    for (int i = 0; i < n_; ++i) {
      std::vector<int64_t> e(n_, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int64_t>> next;
      for (const auto& r : frontier)
        for (int i = 1; i <= n_; ++i) {
          auto img = sigma(i).apply(r);
          if (seen.insert(img).second) next.push_back(img);
        }
      frontier = std::move(next);
    }
    RootSystem rs;
    for (const auto& r : seen) {
      rs.roots.push_back(r);
      bool pos = true;
      for (int64_t c : r)
        if (c < 0) pos = false;
      if (pos) rs.positives.push_back(r);
    }
    return rs;
  }

  /// Closed-form order of the Weyl group from the type table.
  static long double group_order(const DynkinQuiver& q) {
    long double f = 1;
    switch (q.type()) {
      case DynkinType::A:
        for (int i = 2; i <= q.n() + 1; ++i) f *= i;
        return f;
      case DynkinType::D:
        for (int i = 2; i <= q.n(); ++i) f *= i;
        for (int i = 0; i < q.n() - 1; ++i) f *= 2;
        return f;
      case DynkinType::E:
        if (q.n() == 6) return 51840.0L;
        if (q.n() == 7) return 2903040.0L;
        return 696729600.0L;
    }
    return 0;
  }

 private:
  WeylElement from_matrices(IMat star, IMat geom) const {
    WeylElement w;
    w.star = std::move(star);
    w.geom = std::move(geom);
    // peel left descents to recover a reduced word; terminates because
    // the length strictly drops at each step
    IMat g = w.geom;
    int guard = 0;
    while (!g.is_identity()) {
      int d = -1;
      for (int i = 1; i <= n_ && d < 0; ++i) {
        bool desc = true;
        for (int r = 0; r < n_; ++r)
          if (g(r, i - 1) > 0) desc = false;
        if (desc) d = i;
      }
      if (d < 0 || ++guard > 1000)
        throw std::logic_error("descent peeling failed: not a group element?");
      w.word.push_back(d);
      g = g * sigma(d);
    }
    w.length = static_cast<int>(w.word.size());
    return w;
  }

  WeylElement bound(const Enumeration& e, const WeylElement& u,
                    const WeylElement& w, bool lower) const {
    auto cmp = [&](const WeylElement& a, const WeylElement& b) {
      return lower ? weak_leq(a, b) : weak_leq(b, a);
    };
    std::vector<const WeylElement*> bounds;
    for (const WeylElement& v : e.elements)
      if (cmp(v, u) && cmp(v, w)) bounds.push_back(&v);
    for (const WeylElement* cand : bounds) {
      bool extreme = true;
      for (const WeylElement* other : bounds)
        if (!cmp(*other, *cand)) {
          extreme = false;
          break;
        }
      if (extreme) return *cand;
    }
    throw std::logic_error("weak order is not a lattice?");
  }

  void check_vertex(int i) const {
    if (i < 1 || i > n_)
      throw std::out_of_range("generator index out of range: " +
                              std::to_string(i));
  }

  DynkinQuiver q_;
  int n_;
  std::vector<IMat> sigma_, sigma_star_;
};

}  // namespace ppalg
