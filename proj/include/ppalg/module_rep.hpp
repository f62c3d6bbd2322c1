#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "ppalg/algebra.hpp"
#include "ppalg/matrix.hpp"

namespace ppalg {

/// Finite-dimensional right module over the preprojective algebra,
/// presented as a quiver representation of the double quiver: a space
/// M e_v per vertex and, for each doubled arrow a, the action of right
/// multiplication by a, a linear map M e_{src(a)} -> M e_{tgt(a)}.
///
/// Global coordinates concatenate the vertex components in order.
template <class F>
struct ModuleRep {
  const Algebra<F>* alg = nullptr;
  std::vector<int> dims;    // dims[v-1] = dim M e_v
  std::vector<Mat<F>> act;  // act[a]: dims[tgt] x dims[src]

  int total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
  int offset(int v) const {  // v is 1-based
    int t = 0;
    for (int u = 1; u < v; ++u) t += dims[u - 1];
    return t;
  }
  bool is_zero() const { return total() == 0; }
  const std::vector<int>& dim_vector() const { return dims; }
};

template <class F>
ModuleRep<F> zero_rep(const Algebra<F>& A) {
  ModuleRep<F> m;
  m.alg = &A;
  m.dims.assign(A.n(), 0);
  for (size_t a = 0; a < A.dq().arrows().size(); ++a) m.act.push_back(Mat<F>(0, 0));
  return m;
}

template <class F>
ModuleRep<F> simple_rep(const Algebra<F>& A, int i) {
  ModuleRep<F> m = zero_rep(A);
  m.dims[i - 1] = 1;
  for (const Arrow& a : A.dq().arrows())
    m.act[a.id] = Mat<F>(m.dims[a.tgt - 1], m.dims[a.src - 1]);
  return m;
}

template <class F>
ModuleRep<F> direct_sum(const ModuleRep<F>& x, const ModuleRep<F>& y) {
  ModuleRep<F> m;
  m.alg = x.alg;
  m.dims.resize(x.dims.size());
  for (size_t v = 0; v < x.dims.size(); ++v) m.dims[v] = x.dims[v] + y.dims[v];
  for (size_t a = 0; a < x.act.size(); ++a) {
    const Mat<F>&X = x.act[a], &Y = y.act[a];
    Mat<F> b(X.rows + Y.rows, X.cols + Y.cols);
    for (int i = 0; i < X.rows; ++i)
      for (int j = 0; j < X.cols; ++j) b(i, j) = X(i, j);
    for (int i = 0; i < Y.rows; ++i)
      for (int j = 0; j < Y.cols; ++j) b(X.rows + i, X.cols + j) = Y(i, j);
    m.act.push_back(std::move(b));
  }
  return m;
}

/// Right action of a basis path of the algebra on a global module vector.
template <class F>
std::vector<F> apply_basis(const ModuleRep<F>& M, const std::vector<F>& x,
                           int k) {
  const auto& b = M.alg->basis()[k];
  // project onto the source vertex component
  std::vector<F> cur(M.dims[b.src - 1], F(0));
  int off = M.offset(b.src);
  for (int j = 0; j < M.dims[b.src - 1]; ++j) cur[j] = x[off + j];
  int v = b.src;
  for (int a : b.chain) {
    cur = M.act[a].apply(cur);
    v = M.alg->dq().arrows()[a].tgt;
  }
  std::vector<F> out(M.total(), F(0));
  off = M.offset(v);
  for (size_t j = 0; j < cur.size(); ++j) out[off + j] = cur[j];
  return out;
}

template <class F>
std::vector<F> apply_elt(const ModuleRep<F>& M, const std::vector<F>& x,
                         const typename Algebra<F>::Elt& lam) {
  std::vector<F> out(M.total(), F(0));
  for (size_t k = 0; k < lam.size(); ++k) {
    if (is_zero(lam[k])) continue;
    std::vector<F> t = apply_basis(M, x, static_cast<int>(k));
    for (size_t j = 0; j < out.size(); ++j) out[j] += lam[k] * t[j];
  }
  return out;
}

/// The indecomposable projective e_i Lambda as a representation; its
/// basis at vertex v consists of the algebra basis paths i -> v, in the
/// order they appear in the algebra basis.
template <class F>
ModuleRep<F> projective_rep(const Algebra<F>& A, int i) {
  ModuleRep<F> m;
  m.alg = &A;
  m.dims.assign(A.n(), 0);
  std::vector<std::vector<int>> at(A.n() + 1);      // vertex -> basis ids
  std::vector<int> pos(A.dim(), -1);                // basis id -> local index
  for (int k : A.vertex_basis(i, true)) {
    int t = A.basis()[k].tgt;
    pos[k] = static_cast<int>(at[t].size());
    at[t].push_back(k);
    ++m.dims[t - 1];
  }
  for (const Arrow& a : A.dq().arrows()) {
    Mat<F> mat(m.dims[a.tgt - 1], m.dims[a.src - 1]);
    for (int c = 0; c < m.dims[a.src - 1]; ++c) {
      auto img = A.right_mult_arrow(A.basis_elt(at[a.src][c]), a.id);
      for (int k = 0; k < A.dim(); ++k)
        if (!is_zero(img[k])) mat(pos[k], c) = img[k];
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

/// Vertex-graded subspace of a module, one canonical row space per
/// vertex, in that module's vertex coordinates.
template <class F>
struct SubSpaces {
  std::vector<RowSpace<F>> at;  // index v-1

  static SubSpaces empty(const ModuleRep<F>& M) {
    SubSpaces s;
    for (int d : M.dims) s.at.push_back(RowSpace<F>(d));
    return s;
  }
  static SubSpaces full(const ModuleRep<F>& M) {
    SubSpaces s = empty(M);
    for (size_t v = 0; v < M.dims.size(); ++v)
      for (int j = 0; j < M.dims[v]; ++j) {
        std::vector<F> u(M.dims[v], F(0));
        u[j] = F(1);
        s.at[v].insert(u);
      }
    return s;
  }
  int dim() const {
    int t = 0;
    for (const auto& r : at) t += r.dim();
    return t;
  }
  std::vector<int> dim_vector() const {
    std::vector<int> d;
    for (const auto& r : at) d.push_back(r.dim());
    return d;
  }
  bool is_all(const ModuleRep<F>& M) const {
    for (size_t v = 0; v < M.dims.size(); ++v)
      if (at[v].dim() != M.dims[v]) return false;
    return true;
  }
  void insert_global(const ModuleRep<F>& M, const std::vector<F>& x) {
    for (size_t v = 1; v <= M.dims.size(); ++v) {
      int off = M.offset(static_cast<int>(v));
      std::vector<F> c(M.dims[v - 1]);
      for (int j = 0; j < M.dims[v - 1]; ++j) c[j] = x[off + j];
      at[v - 1].insert(c);
    }
  }
  friend bool operator==(const SubSpaces& a, const SubSpaces& b) {
    return a.at == b.at;
  }
};

/// Close a set of global vectors under the arrow action, yielding the
/// submodule they generate.
template <class F>
SubSpaces<F> submodule_closure(const ModuleRep<F>& M,
                               const std::vector<std::vector<F>>& gens) {
  SubSpaces<F> s = SubSpaces<F>::empty(M);
  for (const auto& g : gens) s.insert_global(M, g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Arrow& a : M.alg->dq().arrows()) {
      const RowSpace<F>& src = s.at[a.src - 1];
      for (int r = 0; r < src.dim(); ++r) {
        std::vector<F> img = M.act[a.id].apply(src.basis_row(r));
        if (!s.at[a.tgt - 1].contains(img)) {
          s.at[a.tgt - 1].insert(img);
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Representation carried by a submodule (the row spaces must already be
/// arrow-stable).
template <class F>
ModuleRep<F> sub_rep(const ModuleRep<F>& M, const SubSpaces<F>& S) {
  ModuleRep<F> m;
  m.alg = M.alg;
  for (const auto& r : S.at) m.dims.push_back(r.dim());
  for (const Arrow& a : M.alg->dq().arrows()) {
    Mat<F> mat(m.dims[a.tgt - 1], m.dims[a.src - 1]);
    for (int c = 0; c < m.dims[a.src - 1]; ++c) {
      std::vector<F> img = M.act[a.id].apply(S.at[a.src - 1].basis_row(c));
      auto co = S.at[a.tgt - 1].coords(img);
      if (!co) throw std::logic_error("subspace is not arrow-stable");
      for (int r = 0; r < mat.rows; ++r) mat(r, c) = (*co)[r];
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

/// Quotient M/S. Coordinates at each vertex are the standard basis
/// vectors away from the pivot columns of S.
template <class F>
ModuleRep<F> quotient_rep(const ModuleRep<F>& M, const SubSpaces<F>& S) {
  int n = static_cast<int>(M.dims.size());
  std::vector<std::vector<int>> keep(n);
  for (int v = 0; v < n; ++v) {
    std::vector<bool> piv(M.dims[v], false);
    for (int r = 0; r < S.at[v].dim(); ++r) {
      // pivot of a reduced echelon row = its first nonzero column
      auto row = S.at[v].basis_row(r);
      for (int j = 0; j < M.dims[v]; ++j)
        if (!is_zero(row[j])) {
          piv[j] = true;
          break;
        }
    }
    for (int j = 0; j < M.dims[v]; ++j)
      if (!piv[j]) keep[v].push_back(j);
  }
  ModuleRep<F> m;
  m.alg = M.alg;
  for (int v = 0; v < n; ++v) m.dims.push_back(static_cast<int>(keep[v].size()));
  for (const Arrow& a : M.alg->dq().arrows()) {
    int s = a.src - 1, t = a.tgt - 1;
    Mat<F> mat(m.dims[t], m.dims[s]);
    for (int c = 0; c < m.dims[s]; ++c) {
      std::vector<F> x(M.dims[s], F(0));
      x[keep[s][c]] = F(1);
      std::vector<F> img = S.at[t].reduce(M.act[a.id].apply(x));
      for (int r = 0; r < mat.rows; ++r) mat(r, c) = img[keep[t][r]];
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

/// Homomorphism of representations: one matrix per vertex.
template <class F>
struct ModuleHom {
  std::vector<Mat<F>> f;  // f[v-1]: N e_v <- M e_v

  std::vector<F> flatten() const {
    std::vector<F> out;
    for (const auto& m : f) out.insert(out.end(), m.a.begin(), m.a.end());
    return out;
  }
  bool is_zero() const {
    for (const auto& m : f)
      if (!m.is_zero()) return false;
    return true;
  }
};

template <class F>
std::vector<ModuleHom<F>> hom_basis(const ModuleRep<F>& M,
                                    const ModuleRep<F>& N) {
  int n = static_cast<int>(M.dims.size());
  // unknowns: entries of f_v, laid out vertex by vertex, row-major
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  int nu = off[n];
  std::vector<std::vector<F>> eqs;
  for (const Arrow& a : M.alg->dq().arrows()) {
    int s = a.src - 1, t = a.tgt - 1;
    // f_t * M_a - N_a * f_s = 0, entrywise
    for (int i = 0; i < N.dims[t]; ++i)
      for (int j = 0; j < M.dims[s]; ++j) {
        std::vector<F> row(nu, F(0));
        for (int k = 0; k < M.dims[t]; ++k)
          row[off[t] + i * M.dims[t] + k] += M.act[a.id](k, j);
        for (int k = 0; k < N.dims[s]; ++k)
          row[off[s] + k * M.dims[s] + j] -= N.act[a.id](i, k);
        eqs.push_back(std::move(row));
      }
  }
  Mat<F> sys(static_cast<int>(eqs.size()), nu);
  for (size_t r = 0; r < eqs.size(); ++r)
    for (int c = 0; c < nu; ++c) sys(static_cast<int>(r), c) = eqs[r][c];
  std::vector<ModuleHom<F>> out;
  for (const auto& x : kernel_basis(sys)) {
    ModuleHom<F> h;
    for (int v = 0; v < n; ++v) {
      Mat<F> m(N.dims[v], M.dims[v]);
      for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = x[off[v] + i * M.dims[v] + j];
      h.f.push_back(std::move(m));
    }
    out.push_back(std::move(h));
  }
  return out;
}

template <class F>
ModuleHom<F> compose(const ModuleHom<F>& g, const ModuleHom<F>& f) {
  ModuleHom<F> h;
  for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
  return h;
}

template <class F>
SubSpaces<F> hom_image(const ModuleRep<F>& N, const ModuleHom<F>& h) {
  SubSpaces<F> s = SubSpaces<F>::empty(N);
  for (size_t v = 0; v < N.dims.size(); ++v)
    for (int j = 0; j < h.f[v].cols; ++j) {
      std::vector<F> col(h.f[v].rows);
      for (int i = 0; i < h.f[v].rows; ++i) col[i] = h.f[v](i, j);
      s.at[v].insert(col);
    }
  return s;
}

template <class F>
SubSpaces<F> hom_kernel(const ModuleRep<F>& M, const ModuleHom<F>& h) {
  SubSpaces<F> s = SubSpaces<F>::empty(M);
  for (size_t v = 0; v < M.dims.size(); ++v)
    for (const auto& x : kernel_basis(h.f[v])) s.at[v].insert(x);
  return s;
}

/// Trace of U in X: the sum of images of all homomorphisms U -> X.
/// Always a submodule of X.
template <class F>
SubSpaces<F> trace_submodule(const ModuleRep<F>& U, const ModuleRep<F>& X) {
  SubSpaces<F> s = SubSpaces<F>::empty(X);
  for (const auto& h : hom_basis(U, X))
    for (size_t v = 0; v < X.dims.size(); ++v)
      for (int j = 0; j < h.f[v].cols; ++j) {
        std::vector<F> col(h.f[v].rows);
        for (int i = 0; i < h.f[v].rows; ++i) col[i] = h.f[v](i, j);
        s.at[v].insert(col);
      }
  return s;
}

/// X lies in Fac U iff X is generated by the images of maps from U.
template <class F>
bool fac_contains(const ModuleRep<F>& U, const ModuleRep<F>& X) {
  return trace_submodule(U, X).is_all(X);
}

/// Fac T is contained in Fac T' iff T itself lies in Fac T'.
template <class F>
bool fac_leq(const ModuleRep<F>& T, const ModuleRep<F>& Tp) {
  return fac_contains(Tp, T);
}

/// Isomorphism test: equal dimension vectors plus an invertible
/// combination of a hom basis, found by seeded random search. A random
/// combination of a spanning set of Hom(M,N) is invertible with
/// overwhelming probability whenever any isomorphism exists.
template <class F>
bool is_isomorphic(const ModuleRep<F>& M, const ModuleRep<F>& N,
                   uint64_t seed = 0x5eed) {
  if (M.dims != N.dims) return false;
  if (M.total() == 0) return true;
  auto homs = hom_basis(M, N);
  if (homs.empty()) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-23, 23);
  for (int attempt = 0; attempt < 40; ++attempt) {
    ModuleHom<F> h;
    for (size_t v = 0; v < M.dims.size(); ++v)
      h.f.push_back(Mat<F>(N.dims[v], M.dims[v]));
    for (const auto& b : homs) {
      F c = F(coef(rng));
      for (size_t v = 0; v < h.f.size(); ++v)
        for (size_t e = 0; e < h.f[v].a.size(); ++e)
          h.f[v].a[e] += c * b.f[v].a[e];
    }
    bool ok = true;
    for (size_t v = 0; v < h.f.size(); ++v)
      if (rank_of(h.f[v]) != M.dims[v]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Radical of the endomorphism algebra spanned by `ends`, as coefficient
/// vectors: the kernel of the trace form tr(xy) on End(M). Valid over
/// the rationals and over prime fields.
template <class F>
std::vector<std::vector<F>> end_radical(const ModuleRep<F>& M,
                                        const std::vector<ModuleHom<F>>& ends) {
  int d = static_cast<int>(ends.size());
  auto pair_trace = [&](const ModuleHom<F>& x, const ModuleHom<F>& y) {
    F t(0);
    for (size_t v = 0; v < M.dims.size(); ++v) {
      Mat<F> p = x.f[v] * y.f[v];
      for (int i = 0; i < p.rows; ++i) t += p(i, i);
    }
    return t;
  };
  Mat<F> form(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) form(i, j) = pair_trace(ends[i], ends[j]);
  return kernel_basis(form);
}

/// M is indecomposable iff End(M) is local, i.e. End/rad is
/// one-dimensional.
template <class F>
bool is_indecomposable(const ModuleRep<F>& M) {
  if (M.total() == 0) return false;
  auto ends = hom_basis(M, M);
  return ends.size() - end_radical(M, ends).size() == 1;
}

/// The radical submodule M rad(Lambda) = sum of all arrow images.
template <class F>
SubSpaces<F> radical_submodule(const ModuleRep<F>& M) {
  SubSpaces<F> s = SubSpaces<F>::empty(M);
  for (const Arrow& a : M.alg->dq().arrows()) {
    const Mat<F>& m = M.act[a.id];
    for (int j = 0; j < m.cols; ++j) {
      std::vector<F> col(m.rows);
      for (int i = 0; i < m.rows; ++i) col[i] = m(i, j);
      s.at[a.tgt - 1].insert(col);
    }
  }
  return s;
}

/// Projective cover P -> M: P together with the covering hom.
template <class F>
struct Cover {
  ModuleRep<F> P;
  ModuleHom<F> map;          // P -> M
  std::vector<int> mult;     // multiplicity of e_v Lambda in P, v-1 indexed
};

template <class F>
Cover<F> projective_cover(const ModuleRep<F>& M) {
  const Algebra<F>& A = *M.alg;
  int n = A.n();
  SubSpaces<F> rad = radical_submodule(M);
  // lift a basis of top(M): standard basis vectors away from the pivots
  std::vector<std::pair<int, std::vector<F>>> tops;  // (vertex, lift)
  std::vector<int> mult(n, 0);
  for (int v = 1; v <= n; ++v) {
    std::vector<bool> piv(M.dims[v - 1], false);
    for (int r = 0; r < rad.at[v - 1].dim(); ++r) {
      auto row = rad.at[v - 1].basis_row(r);
      for (int j = 0; j < M.dims[v - 1]; ++j)
        if (!is_zero(row[j])) {
          piv[j] = true;
          break;
        }
    }
    for (int j = 0; j < M.dims[v - 1]; ++j)
      if (!piv[j]) {
        std::vector<F> x(M.total(), F(0));
        x[M.offset(v) + j] = F(1);
        tops.push_back({v, x});
        ++mult[v - 1];
      }
  }
  Cover<F> c;
  c.mult = mult;
  c.P = zero_rep(A);
  std::vector<ModuleRep<F>> pieces;
  for (auto& [v, x] : tops) {
    pieces.push_back(projective_rep(A, v));
    c.P = direct_sum(c.P, pieces.back());
  }
  // covering map: on the copy of e_v Lambda with lift m, the basis path
  // b (from v) goes to m . b
  c.map.f.assign(n, Mat<F>(0, 0));
  for (int v = 1; v <= n; ++v) c.map.f[v - 1] = Mat<F>(M.dims[v - 1], c.P.dims[v - 1]);
  std::vector<int> used(n, 0);  // columns consumed per vertex so far
  for (size_t p = 0; p < tops.size(); ++p) {
    auto& [v, x] = tops[p];
    for (int k : A.vertex_basis(v, true)) {
      int t = A.basis()[k].tgt;
      std::vector<F> img = apply_basis(M, x, k);
      int col = used[t - 1]++;
      for (int i = 0; i < M.dims[t - 1]; ++i)
        c.map.f[t - 1](i, col) = img[M.offset(t) + i];
    }
  }
  return c;
}

}  // namespace ppalg
