#pragma once

#include <stdexcept>
#include <vector>

#include "ppalg/module_rep.hpp"
#include "ppalg/right_ideal.hpp"
#include "ppalg/tau.hpp"
#include "ppalg/weyl.hpp"

namespace ppalg {

struct ApproximationNotMinimal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSupportTauTilting : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Iterated composition of an endomorphism with itself, `e` times.
template <class F>
ModuleHom<F> hom_power(const ModuleHom<F>& h, int e) {
  ModuleHom<F> acc;
  for (const auto& m : h.f) acc.f.push_back(Mat<F>::identity(m.rows));
  ModuleHom<F> base = h;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// Split M into indecomposable summands via Fitting decompositions of
/// endomorphisms: for a non-nilpotent, non-invertible endomorphism h,
/// M = ker h^N + im h^N is a direct module decomposition.
template <class F>
std::vector<ModuleRep<F>> decompose(const ModuleRep<F>& M) {
  if (M.total() == 0) return {};
  auto ends = hom_basis(M, M);
  if (ends.size() - end_radical(M, ends).size() == 1) return {M};
  int N = M.total();
  std::vector<ModuleHom<F>> candidates = ends;
  for (size_t i = 0; i < ends.size(); ++i)
    for (size_t j = i + 1; j < ends.size(); ++j) {
      ModuleHom<F> s, d;
      for (size_t v = 0; v < ends[i].f.size(); ++v) {
        s.f.push_back(ends[i].f[v] + ends[j].f[v]);
        d.f.push_back(ends[i].f[v] - ends[j].f[v]);
      }
      candidates.push_back(std::move(s));
      candidates.push_back(std::move(d));
    }
  for (const auto& h : candidates) {
    ModuleHom<F> p = hom_power(h, N);
    SubSpaces<F> K = hom_kernel(M, p);
    int dk = K.dim();
    if (dk == 0 || dk == N) continue;
    SubSpaces<F> I = hom_image(M, p);
    auto out = decompose(sub_rep(M, K));
    for (auto& piece : decompose(sub_rep(M, I))) out.push_back(std::move(piece));
    return out;
  }
  throw std::logic_error("failed to split a decomposable module");
}

/// Minimal left add(U)-approximation of X, where U = U_1 + ... + U_r
/// with pairwise non-isomorphic indecomposable summands. The target is
/// sum of U_j^{c_j}; the multiplicities come from a basis of
/// Hom(X,U) / rad End(U) . Hom(X,U) over the division algebras
/// End(U_j)/rad.
template <class F>
struct Approximation {
  ModuleRep<F> target;
  ModuleHom<F> map;        // X -> target
  std::vector<int> mult;   // copies of U_j, in input order
};

template <class F>
Approximation<F> minimal_left_approximation(
    const ModuleRep<F>& X, const std::vector<ModuleRep<F>>& Us) {
  const Algebra<F>& A = *X.alg;
  int r = static_cast<int>(Us.size());
  ModuleRep<F> U = zero_rep(A);
  std::vector<int> uoff(r + 1, 0);  // vertexwise offsets handled below
  for (int j = 0; j < r; ++j) U = direct_sum(U, Us[j]);
  // vertexwise offset of summand j inside U
  auto block_offset = [&](int j, int v) {
    int o = 0;
    for (int t = 0; t < j; ++t) o += Us[t].dims[v];
    return o;
  };
  auto project = [&](const ModuleHom<F>& h, int j) {
    ModuleHom<F> p;  // X -> U_j component of h
    for (size_t v = 0; v < X.dims.size(); ++v) {
      Mat<F> m(Us[j].dims[v], X.dims[v]);
      int o = block_offset(j, static_cast<int>(v));
      for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c) m(i, c) = h.f[v](o + i, c);
      p.f.push_back(std::move(m));
    }
    return p;
  };
  auto homs = hom_basis(X, U);
  auto ends = hom_basis(U, U);
  auto radc = end_radical(U, ends);
  std::vector<ModuleHom<F>> rads;
  for (const auto& c : radc) {
    ModuleHom<F> rh;
    for (size_t v = 0; v < U.dims.size(); ++v)
      rh.f.push_back(Mat<F>(U.dims[v], U.dims[v]));
    for (size_t b = 0; b < ends.size(); ++b)
      for (size_t v = 0; v < U.dims.size(); ++v)
        for (size_t e = 0; e < rh.f[v].a.size(); ++e)
          rh.f[v].a[e] += c[b] * ends[b].f[v].a[e];
    rads.push_back(std::move(rh));
  }
  Approximation<F> ap;
  ap.mult.assign(r, 0);
  std::vector<std::vector<ModuleHom<F>>> chosen(r);
  for (int j = 0; j < r; ++j) {
    int flat_len = 0;
    for (size_t v = 0; v < X.dims.size(); ++v)
      flat_len += Us[j].dims[v] * X.dims[v];
    RowSpace<F> S(flat_len);
    for (const auto& rh : rads)
      for (const auto& h : homs)
        S.insert(project(compose(rh, h), j).flatten());
    auto ujend = hom_basis(Us[j], Us[j]);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& h : homs) {
        ModuleHom<F> g = project(h, j);
        if (S.contains(g.flatten())) continue;
        chosen[j].push_back(g);
        ++ap.mult[j];
        for (const auto& e : ujend) S.insert(compose(e, g).flatten());
        grew = true;
      }
    }
  }
  // assemble target and the stacked map
  ap.target = zero_rep(A);
  for (int j = 0; j < r; ++j)
    for (int c = 0; c < ap.mult[j]; ++c) ap.target = direct_sum(ap.target, Us[j]);
  for (size_t v = 0; v < X.dims.size(); ++v)
    ap.map.f.push_back(Mat<F>(ap.target.dims[v], X.dims[v]));
  std::vector<int> row_used(X.dims.size(), 0);
  for (int j = 0; j < r; ++j)
    for (const auto& g : chosen[j])
      for (size_t v = 0; v < X.dims.size(); ++v) {
        for (int i = 0; i < Us[j].dims[v]; ++i)
          for (int c = 0; c < X.dims[v]; ++c)
            ap.map.f[v](row_used[v] + i, c) = g.f[v](i, c);
        row_used[v] += Us[j].dims[v];
      }
  // certify the approximation property: every map X -> U factors
  // through ap.map
  std::vector<std::vector<F>> through;
  for (const auto& psi : hom_basis(ap.target, U))
    through.push_back(compose(psi, ap.map).flatten());
  RowSpace<F> T(homs.empty() ? 1 : static_cast<int>(homs[0].flatten().size()));
  if (!homs.empty()) {
    T = RowSpace<F>(static_cast<int>(homs[0].flatten().size()));
    for (auto& t : through) T.insert(t);
    for (const auto& h : homs)
      if (!T.contains(h.flatten()))
        throw ApproximationNotMinimal("approximation certificate failed");
  }
  return ap;
}

/// Module-level left mutation at vertex i of the pair attached to w:
/// minimal left add((1-e_i)I_w)-approximation of e_iI_w, cokernel Y,
/// result Y_1 + (1-e_i)I_w. Requires l(w) < l(s_i w) and e_iI_w != 0.
template <class F>
ModuleRep<F> left_mutation_via_approximation(const IdealCalculus<F>& calc,
                                             const RowSpace<F>& ideal,
                                             int i) {
  const Algebra<F>& A = calc.algebra();
  ModuleRep<F> X = calc.slice_rep(i, ideal);
  if (X.total() == 0)
    throw std::invalid_argument("slice at the mutation vertex is zero");
  std::vector<ModuleRep<F>> others;
  for (int j = 1; j <= A.n(); ++j) {
    if (j == i) continue;
    ModuleRep<F> s = calc.slice_rep(j, ideal);
    if (s.total() > 0) others.push_back(std::move(s));
  }
  ModuleRep<F> rest = zero_rep(A);
  for (const auto& o : others) rest = direct_sum(rest, o);
  if (others.empty()) {
    // approximation target is 0; the cokernel is X itself, which cannot
    // happen for a genuine left mutation of a sincere pair -- fall
    // through with an empty approximation
  }
  Approximation<F> ap = minimal_left_approximation(X, others);
  SubSpaces<F> img = hom_image(ap.target, ap.map);
  ModuleRep<F> Y = quotient_rep(ap.target, img);
  if (Y.total() == 0) return rest;
  auto pieces = decompose(Y);
  for (size_t p = 1; p < pieces.size(); ++p)
    if (!is_isomorphic(pieces[0], pieces[p]))
      throw ApproximationNotMinimal(
          "cokernel is not a sum of copies of one indecomposable");
  return direct_sum(pieces[0], rest);
}

}  // namespace ppalg
