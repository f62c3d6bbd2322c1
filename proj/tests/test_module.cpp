#include <doctest.h>

#include <vector>

#include "ppalg/right_ideal.hpp"
#include "ppalg/tau.hpp"
#include "ppalg/weyl.hpp"

using namespace ppalg;

TEST_CASE("rank one: the maximal ideal is zero") {
  Algebra<Rat> A(DynkinQuiver::from_code("A1"));
  IdealCalculus<Rat> calc(A);
  CHECK(calc.maximal_ideal(1).dim() == 0);
  CHECK(calc.unit_ideal().dim() == 1);
  ModuleRep<Rat> lam = calc.rep_of(calc.unit_ideal());
  CHECK(lam.dim_vector() == std::vector<int>{1});
}

TEST_CASE("A2 ideal arithmetic") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  RowSpace<Rat> I1 = calc.maximal_ideal(1);
  RowSpace<Rat> I2 = calc.maximal_ideal(2);
  CHECK(I2.dim() == 3);
  CHECK(calc.slice(1, I2).dim() == 2);
  CHECK(calc.slice(2, I2).dim() == 1);

  RowSpace<Rat> I12 = calc.product(I1, I2);
  CHECK(I12.dim() == 1);
  ModuleRep<Rat> m12 = calc.rep_of(I12);
  CHECK(m12.dim_vector() == std::vector<int>{1, 0});
  CHECK(is_isomorphic(m12, simple_rep(A, 1)));

  CHECK(calc.product(calc.product(I1, I2), I1).dim() == 0);
  CHECK(calc.product(I2, calc.unit_ideal()) == I2);
  CHECK(calc.product(calc.unit_ideal(), I2) == I2);
  // maximal_times agrees with the generic product
  CHECK(calc.maximal_times(1, I2) == calc.product(I1, I2));
}

TEST_CASE("ideal products are braid invariant") {
  for (const char* code : {"A2", "A3"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    IdealCalculus<Rat> calc(A);
    WeylGroup W(A.quiver());
    if (A.n() == 2) {
      CHECK(calc.ideal_of_word({1, 2, 1}) == calc.ideal_of_word({2, 1, 2}));
    } else {
      CHECK(calc.ideal_of_word({1, 2, 1}) == calc.ideal_of_word({2, 1, 2}));
      CHECK(calc.ideal_of_word({1, 3}) == calc.ideal_of_word({3, 1}));
      CHECK(calc.ideal_of_word({2, 3, 2}) == calc.ideal_of_word({3, 2, 3}));
    }
    // non-reduced words collapse: I_i is idempotent under the product
    CHECK(calc.ideal_of_word({1, 1}) == calc.ideal_of_word({1}));
    // ideal_of along any stored reduced word matches the table route
    auto en = W.enumerate();
    IdealTable<Rat> table(calc, W, en);
    for (size_t k = 0; k < en.elements.size(); ++k)
      CHECK(calc.ideal_of(en.elements[k]) == table.at(static_cast<int>(k)));
  }
}

TEST_CASE("slices of I_w are indecomposable or zero") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  WeylGroup W(A.quiver());
  auto en = W.enumerate();
  for (const WeylElement& w : en.elements) {
    RowSpace<Rat> I = calc.ideal_of(w);
    for (int i = 1; i <= A.n(); ++i) {
      ModuleRep<Rat> s = calc.slice_rep(i, I);
      if (s.total() > 0) CHECK(is_indecomposable(s));
    }
  }
}

TEST_CASE("hom spaces from projectives have the expected dimension") {
  Algebra<Rat> A(DynkinQuiver::from_code("A3"));
  IdealCalculus<Rat> calc(A);
  // Hom(e_i Lambda, M) = M e_i
  std::vector<ModuleRep<Rat>> mods = {
      calc.rep_of(calc.unit_ideal()), calc.rep_of(calc.maximal_ideal(2)),
      simple_rep(A, 1), projective_rep(A, 2)};
  for (const auto& M : mods)
    for (int i = 1; i <= A.n(); ++i)
      CHECK(hom_basis(projective_rep(A, i), M).size() ==
            static_cast<size_t>(M.dims[i - 1]));
}

TEST_CASE("projective covers and minimal presentations") {
  Algebra<Rat> A2(DynkinQuiver::from_code("A2"));
  Presentation<Rat> p = min_presentation(simple_rep(A2, 1));
  CHECK(p.p0 == std::vector<int>{1, 0});
  CHECK(p.p1 == std::vector<int>{0, 1});

  Algebra<Rat> A3(DynkinQuiver::from_code("A3"));
  Presentation<Rat> q = min_presentation(simple_rep(A3, 2));
  CHECK(q.p0 == std::vector<int>{0, 1, 0});
  CHECK(q.p1 == std::vector<int>{1, 0, 1});

  // projectives present themselves
  for (int i = 1; i <= 3; ++i) {
    Presentation<Rat> r = min_presentation(projective_rep(A3, i));
    std::vector<int> unit(3, 0);
    unit[i - 1] = 1;
    CHECK(r.p0 == unit);
    CHECK(r.p1 == std::vector<int>(3, 0));
  }

  // the cover really surjects: its image generates the module
  IdealCalculus<Rat> calc(A3);
  ModuleRep<Rat> M = calc.rep_of(calc.maximal_ideal(1));
  Cover<Rat> c = projective_cover(M);
  CHECK(hom_image(M, c.map).is_all(M));
}

TEST_CASE("Nakayama functor permutes the projectives") {
  for (const char* code : {"A2", "A3", "D4"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    for (int i = 1; i <= A.n(); ++i) {
      ModuleRep<Rat> nu = nu_rep(projective_rep(A, A.nakayama(i)));
      CHECK(is_isomorphic(nu, projective_rep(A, i)));
    }
  }
}

TEST_CASE("tau and tau-rigidity on small goldens") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  // tau I_2 = S_2 in type A2
  ModuleRep<Rat> M = calc.rep_of(calc.maximal_ideal(2));
  CHECK(is_isomorphic(tau_rep(M), simple_rep(A, 2)));
  // tau kills projectives
  CHECK(tau_rep(calc.rep_of(calc.unit_ideal())).total() == 0);
  CHECK(is_tau_rigid(calc.rep_of(calc.unit_ideal())));
  CHECK(is_tau_rigid(M));
  // S_1 + S_2 is not tau-rigid over the preprojective algebra of A2
  CHECK_FALSE(is_tau_rigid(direct_sum(simple_rep(A, 1), simple_rep(A, 2))));
}

TEST_CASE("Fac membership and the factor-order") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  ModuleRep<Rat> lam = calc.rep_of(calc.unit_ideal());
  ModuleRep<Rat> i2 = calc.rep_of(calc.ideal_of_word({2}));
  ModuleRep<Rat> i12 = calc.rep_of(calc.ideal_of_word({1, 2}));
  ModuleRep<Rat> i1 = calc.rep_of(calc.ideal_of_word({1}));
  CHECK(fac_contains(lam, i2));
  CHECK(fac_leq(i2, lam));
  CHECK(fac_leq(i12, i2));
  CHECK_FALSE(fac_leq(i2, i12));
  CHECK_FALSE(fac_leq(i1, i2));
  CHECK_FALSE(fac_leq(i2, i1));
  // zero module sits at the bottom
  CHECK(fac_leq(calc.rep_of(calc.ideal_of_word({1, 2, 1})), i1));
}

TEST_CASE("annihilators of simples and ideals") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  for (int i = 1; i <= A.n(); ++i)
    CHECK(calc.annihilator(simple_rep(A, i)) == calc.maximal_ideal(i));
  // ann I_{s2} = I_{s1 s2}
  CHECK(calc.annihilator(calc.rep_of(calc.ideal_of_word({2}))) ==
        calc.ideal_of_word({1, 2}));
  // Lambda is faithful
  CHECK(calc.annihilator(calc.rep_of(calc.unit_ideal())).dim() == 0);
}

TEST_CASE("dual dimension identity across the longest element") {
  for (const char* code : {"A2", "A3"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    IdealCalculus<Rat> calc(A);
    WeylGroup W(A.quiver());
    auto en = W.enumerate();
    WeylElement w0 = W.longest_element(en);
    for (const WeylElement& w : en.elements) {
      WeylElement u = W.multiply(W.inverse(w), w0);
      CHECK(calc.ideal_of(w).dim() + calc.ideal_of(u).dim() == A.dim());
    }
  }
}

TEST_CASE("support pairs cover every vertex exactly once") {
  Algebra<Rat> A(DynkinQuiver::from_code("A3"));
  IdealCalculus<Rat> calc(A);
  WeylGroup W(A.quiver());
  auto en = W.enumerate();
  for (const WeylElement& w : en.elements) {
    SttPair<Rat> p = stt_pair(calc, calc.ideal_of(w));
    CHECK(p.support.size() + p.proj_vertices.size() ==
          static_cast<size_t>(A.n()));
    // the projective part is Hom-orthogonal to the module part
    for (int v : p.proj_vertices)
      CHECK(hom_basis(projective_rep(A, v), p.module).empty());
  }
}

TEST_CASE("submodule closure, sub and quotient representations") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  ModuleRep<Rat> P = projective_rep(A, 1);  // dims (1,1) in type A2
  // the radical of e_1 Lambda is the span of the arrow image
  SubSpaces<Rat> rad = radical_submodule(P);
  CHECK(rad.dim() == 1);
  ModuleRep<Rat> top = quotient_rep(P, rad);
  CHECK(is_isomorphic(top, simple_rep(A, 1)));
  ModuleRep<Rat> sub = sub_rep(P, rad);
  CHECK(is_isomorphic(sub, simple_rep(A, 2)));
  // closure of the generator recovers all of P
  std::vector<Rat> gen(P.total(), Rat(0));
  gen[P.offset(1)] = Rat(1);
  CHECK(submodule_closure(P, {gen}).is_all(P));
}
