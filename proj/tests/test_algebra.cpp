#include <doctest.h>

#include <random>
#include <vector>

#include "ppalg/algebra.hpp"
#include "ppalg/weyl.hpp"

using namespace ppalg;

namespace {

// Independent dimension oracle: dim Lambda equals the sum of the heights
// of the positive roots, computed on the Weyl-group side.
int height_sum(const DynkinQuiver& q) {
  WeylGroup W(q);
  int s = 0;
  for (const auto& root : W.roots().positives)
    for (int64_t c : root) s += static_cast<int>(c);
  return s;
}

// Coxeter number h = 2 |Phi+| / n; the grading of Lambda tops out at h-2.
int coxeter_number(const DynkinQuiver& q) {
  WeylGroup W(q);
  return static_cast<int>(2 * W.roots().positives.size()) / q.n();
}

}  // namespace

TEST_CASE("algebra dimension equals the positive-root height sum") {
  struct Row {
    const char* code;
    int dim;
  };
  for (Row r : {Row{"A1", 1}, Row{"A2", 4}, Row{"A3", 10}, Row{"A4", 20},
                Row{"D4", 28}, Row{"D5", 0}}) {
    DynkinQuiver q = DynkinQuiver::from_code(r.code);
    Algebra<Rat> A(q);
    CHECK(A.dim() == height_sum(q));
    if (r.dim > 0) CHECK(A.dim() == r.dim);
    CHECK(A.max_grade() == (q.n() == 1 ? 0 : coxeter_number(q) - 2));
    auto gd = A.grade_dims();
    int total = 0;
    for (int d : gd) total += d;
    CHECK(total == A.dim());
    CHECK(gd[0] == q.n());
  }
}

TEST_CASE("mesh relations vanish in the constructed algebra") {
  for (const char* code : {"A2", "A3", "D4", "D5"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    const DoubleQuiver& dq = A.dq();
    for (int i = 1; i <= A.n(); ++i) {
      // sum over original arrows: a a* (source i) minus a* a (target i)
      auto rel = A.zero();
      for (const Arrow& a : dq.base().arrows()) {
        int sid = dq.star(a.id);
        if (a.src == i) {
          auto p = A.mult(A.arrow_elt(a.id), A.arrow_elt(sid));
          for (int k = 0; k < A.dim(); ++k) rel[k] += p[k];
        }
        if (a.tgt == i) {
          auto p = A.mult(A.arrow_elt(sid), A.arrow_elt(a.id));
          for (int k = 0; k < A.dim(); ++k) rel[k] -= p[k];
        }
      }
      for (int k = 0; k < A.dim(); ++k) CHECK(is_zero(rel[k]));
    }
  }
}

TEST_CASE("multiplication respects the path grading") {
  // products of a basis path with an arrow stay inside the expected
  // (source, target, grade) block of the basis
  for (const char* code : {"A3", "D4"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    for (int k = 0; k < A.dim(); ++k)
      for (const Arrow& a : A.dq().arrows()) {
        if (a.src != A.basis()[k].tgt) continue;
        auto img = A.right_mult_arrow(A.basis_elt(k), a.id);
        for (int b = 0; b < A.dim(); ++b) {
          if (is_zero(img[b])) continue;
          CHECK(A.basis()[b].src == A.basis()[k].src);
          CHECK(A.basis()[b].tgt == a.tgt);
          CHECK(A.basis()[b].grade == A.basis()[k].grade + 1);
        }
      }
  }
}

TEST_CASE("arrow elements are the grade-one basis paths") {
  for (const char* code : {"A3", "D4", "D5"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    for (const Arrow& a : A.dq().arrows()) {
      auto x = A.arrow_elt(a.id);
      int hits = 0;
      for (int k = 0; k < A.dim(); ++k) {
        if (is_zero(x[k])) continue;
        ++hits;
        CHECK(A.basis()[k].grade == 1);
        CHECK(A.basis()[k].chain == std::vector<int>{a.id});
        CHECK(A.basis()[k].src == a.src);
        CHECK(A.basis()[k].tgt == a.tgt);
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("unit and associativity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (const char* code : {"A3", "D4"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    for (int k = 0; k < A.dim(); ++k) {
      auto b = A.basis_elt(k);
      CHECK(A.mult(A.unit(), b) == b);
      CHECK(A.mult(b, A.unit()) == b);
    }
    for (int t = 0; t < 10; ++t) {
      auto rand_elt = [&] {
        auto x = A.zero();
        for (int k = 0; k < A.dim(); ++k) x[k] = Rat(coef(rng));
        return x;
      };
      auto x = rand_elt(), y = rand_elt(), z = rand_elt();
      CHECK(A.mult(A.mult(x, y), z) == A.mult(x, A.mult(y, z)));
    }
  }
}

TEST_CASE("idempotents decompose the algebra") {
  Algebra<Rat> A(DynkinQuiver::from_code("A3"));
  for (int i = 1; i <= A.n(); ++i)
    for (int j = 1; j <= A.n(); ++j) {
      auto p = A.mult(A.e(i), A.e(j));
      if (i == j)
        CHECK(p == A.e(i));
      else
        CHECK(p == A.zero());
    }
  int total = 0;
  for (int i = 1; i <= A.n(); ++i)
    total += static_cast<int>(A.vertex_basis(i, true).size());
  CHECK(total == A.dim());
}

TEST_CASE("Nakayama permutation from the socle") {
  struct Row {
    const char* code;
    std::vector<int> sigma;
  };
  for (Row r : {Row{"A2", {2, 1}}, Row{"A3", {3, 2, 1}},
                Row{"A4", {4, 3, 2, 1}}, Row{"D4", {1, 2, 3, 4}},
                Row{"D5", {1, 2, 3, 5, 4}}}) {
    Algebra<Rat> A(DynkinQuiver::from_code(r.code));
    for (int i = 1; i <= A.n(); ++i) CHECK(A.nakayama(i) == r.sigma[i - 1]);
    // selfinjectivity: e_i Lambda and Lambda e_{sigma(i)} are dual
    for (int i = 1; i <= A.n(); ++i)
      CHECK(A.vertex_basis(i, true).size() ==
            A.vertex_basis(A.nakayama(i), false).size());
  }
}

TEST_CASE("the opposite orientation yields the same dimensions") {
  for (const char* code : {"A3", "D4"}) {
    DynkinQuiver q = DynkinQuiver::from_code(code);
    Algebra<Rat> A(q);
    Algebra<Rat> B(DoubleQuiver(q).reversed());
    CHECK(A.dim() == B.dim());
    CHECK(A.grade_dims() == B.grade_dims());
  }
}

TEST_CASE("dump lists a named basis") {
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  auto j = A.dump();
  CHECK(j["dimension"] == 4);
  CHECK(j["basis"].size() == 4);
  CHECK(A.basis_name(0) == "e1");
  CHECK(A.elt_string(A.zero()) == "0");
}
