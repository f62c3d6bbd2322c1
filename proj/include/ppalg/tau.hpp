#pragma once

#include <optional>
#include <vector>

#include "ppalg/module_rep.hpp"

namespace ppalg {

/// Coordinates of g in the span of `rows` (not necessarily echelon),
/// if it lies there.
template <class F>
std::optional<std::vector<F>> coords_in(const std::vector<std::vector<F>>& rows,
                                        const std::vector<F>& g) {
  int h = static_cast<int>(rows.size());
  int L = static_cast<int>(g.size());
  Mat<F> m(L, h + 1);
  for (int l = 0; l < L; ++l) {
    for (int j = 0; j < h; ++j) m(l, j) = rows[j][l];
    m(l, h) = g[l];
  }
  for (const auto& k : kernel_basis(m)) {
    if (is_zero(k[h])) continue;
    F d = -k[h];
    std::vector<F> x(h);
    for (int j = 0; j < h; ++j) x[j] = k[j] / d;
    return x;
  }
  return std::nullopt;
}

/// Syzygy: kernel of the projective cover.
template <class F>
ModuleRep<F> omega(const ModuleRep<F>& M) {
  if (M.total() == 0) return M;
  Cover<F> c = projective_cover(M);
  return sub_rep(c.P, hom_kernel(c.P, c.map));
}

/// Nakayama functor nu = D Hom(-, Lambda) as a functor on
/// representations: (nu M) e_j = D Hom(M, e_j Lambda), with the arrow
/// a: j -> k acting by the transpose of composition with left
/// multiplication by a, Hom(M, e_k Lambda) -> Hom(M, e_j Lambda).
template <class F>
ModuleRep<F> nu_rep(const ModuleRep<F>& M) {
  const Algebra<F>& A = *M.alg;
  int n = A.n();
  std::vector<ModuleRep<F>> proj;
  std::vector<std::vector<ModuleHom<F>>> H;
  std::vector<std::vector<std::vector<F>>> flat;
  for (int j = 1; j <= n; ++j) {
    proj.push_back(projective_rep(A, j));
    H.push_back(hom_basis(M, proj.back()));
    flat.emplace_back();
    for (const auto& h : H.back()) flat.back().push_back(h.flatten());
  }
  ModuleRep<F> out;
  out.alg = &A;
  for (int j = 0; j < n; ++j) out.dims.push_back(static_cast<int>(H[j].size()));
  // left multiplication by the arrow element, e_k Lambda -> e_j Lambda,
  // as a hom of representations
  auto left_mult_hom = [&](int arrow_id, int j, int k) {
    ModuleHom<F> lm;
    const ModuleRep<F>&Pk = proj[k - 1], &Pj = proj[j - 1];
    // local bases of the projectives at each vertex, in algebra order
    std::vector<std::vector<int>> atk(n + 1), atj(n + 1);
    std::vector<int> posj(A.dim(), -1);
    for (int b : A.vertex_basis(k, true)) atk[A.basis()[b].tgt].push_back(b);
    for (int b : A.vertex_basis(j, true)) {
      posj[b] = static_cast<int>(atj[A.basis()[b].tgt].size());
      atj[A.basis()[b].tgt].push_back(b);
    }
    for (int v = 1; v <= n; ++v) {
      Mat<F> m(Pj.dims[v - 1], Pk.dims[v - 1]);
      for (size_t c = 0; c < atk[v].size(); ++c) {
        auto img = A.mult(A.arrow_elt(arrow_id), A.basis_elt(atk[v][c]));
        for (int b = 0; b < A.dim(); ++b)
          if (!is_zero(img[b])) m(posj[b], static_cast<int>(c)) = img[b];
      }
      lm.f.push_back(std::move(m));
    }
    return lm;
  };
  for (const Arrow& a : A.dq().arrows()) {
    int j = a.src, k = a.tgt;
    ModuleHom<F> lm = left_mult_hom(a.id, j, k);
    // L: Hom(M, e_k Lambda) -> Hom(M, e_j Lambda), h -> lm . h
    Mat<F> L(out.dims[j - 1], out.dims[k - 1]);
    for (int c = 0; c < out.dims[k - 1]; ++c) {
      ModuleHom<F> g = compose(lm, H[k - 1][c]);
      auto co = coords_in(flat[j - 1], g.flatten());
      if (!co) throw std::logic_error("composite hom escapes the hom space");
      for (int r = 0; r < L.rows; ++r) L(r, c) = (*co)[r];
    }
    out.act.push_back(L.transpose());
  }
  return out;
}

/// Auslander-Reiten translate, tau = nu . Omega^2 (Lambda is
/// selfinjective, so nu is exact and this matches the kernel of
/// nu P_1 -> nu P_0 for a minimal presentation).
template <class F>
ModuleRep<F> tau_rep(const ModuleRep<F>& M) {
  if (M.total() == 0) return M;
  ModuleRep<F> o2 = omega(omega(M));
  if (o2.total() == 0) return o2;
  return nu_rep(o2);
}

template <class F>
bool is_tau_rigid(const ModuleRep<F>& M) {
  if (M.total() == 0) return true;
  ModuleRep<F> t = tau_rep(M);
  if (t.total() == 0) return true;
  return hom_basis(M, t).empty();
}

/// Minimal presentation data: multiplicities of each e_v Lambda in P_0
/// and P_1.
template <class F>
struct Presentation {
  std::vector<int> p0, p1;
};

template <class F>
Presentation<F> min_presentation(const ModuleRep<F>& M) {
  Presentation<F> pr;
  pr.p0.assign(M.alg->n(), 0);
  pr.p1.assign(M.alg->n(), 0);
  if (M.total() == 0) return pr;
  Cover<F> c0 = projective_cover(M);
  pr.p0 = c0.mult;
  ModuleRep<F> K = sub_rep(c0.P, hom_kernel(c0.P, c0.map));
  if (K.total() > 0) pr.p1 = projective_cover(K).mult;
  return pr;
}

/// g-vector of a module: P_0 - P_1 of the minimal presentation.
template <class F>
std::vector<int64_t> g_vector(const ModuleRep<F>& M) {
  Presentation<F> pr = min_presentation(M);
  std::vector<int64_t> g(pr.p0.size());
  for (size_t v = 0; v < g.size(); ++v) g[v] = pr.p0[v] - pr.p1[v];
  return g;
}

}  // namespace ppalg
