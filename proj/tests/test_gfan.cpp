#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "ppalg/gfan.hpp"

using namespace ppalg;

namespace {

IMat imat2(int64_t a, int64_t b, int64_t c, int64_t d) {
  IMat m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

TEST_CASE("rank one fan has exactly the two half-lines") {
  WeylGroup W(DynkinQuiver::from_code("A1"));
  auto en = W.enumerate();
  ChamberFan fan = chamber_fan(W, en);
  REQUIRE(fan.chambers.size() == 2);
  std::set<std::vector<int>> signs;
  for (const Chamber& c : fan.chambers) {
    REQUIRE(c.signs.size() == 1);
    CHECK(c.signs[0] != 0);
    signs.insert(c.signs);
  }
  CHECK(signs.size() == 2);
}

TEST_CASE("the six A2 g-matrices match the golden list") {
  WeylGroup W(DynkinQuiver::from_code("A2"));
  Algebra<Rat> A(DynkinQuiver::from_code("A2"));
  IdealCalculus<Rat> calc(A);
  std::map<std::vector<int>, IMat> golden = {
      {{}, IMat::identity(2)},
      {{2}, imat2(1, 1, 0, -1)},
      {{1}, imat2(-1, 0, 1, 1)},
      {{1, 2}, imat2(0, 1, -1, -1)},
      {{2, 1}, imat2(-1, -1, 1, 0)},
      {{1, 2, 1}, imat2(0, -1, -1, 0)},
  };
  for (const auto& [word, g] : golden) {
    WeylElement w = W.from_word(word);
    CHECK(g_matrix_reflections(w) == g);
    CHECK(g_matrix_presentations(calc, calc.ideal_of(w)) == g);
    CHECK(g_matrix_checked(calc, calc.ideal_of(w), w) == g);
  }
}

TEST_CASE("presentation and reflection g-matrices agree exhaustively") {
  for (const char* code : {"A2", "A3"}) {
    Algebra<Rat> A(DynkinQuiver::from_code(code));
    IdealCalculus<Rat> calc(A);
    WeylGroup W(A.quiver());
    auto en = W.enumerate();
    IdealTable<Rat> table(calc, W, en);
    for (size_t k = 0; k < en.elements.size(); ++k) {
      CHECK(g_matrix_presentations(calc, table.at(static_cast<int>(k))) ==
            en.elements[k].star);
      // projector columns are minus a unit vector at the Nakayama image
      for (int i = 1; i <= A.n(); ++i) {
        if (calc.slice(i, table.at(static_cast<int>(k))).dim() > 0) continue;
        auto col = en.elements[k].star.column(i - 1);
        std::vector<int64_t> expect(A.n(), 0);
        expect[A.nakayama(i) - 1] = -1;
        CHECK(col == expect);
      }
    }
  }
}

TEST_CASE("chambers are open, disjoint, and carry det parity") {
  for (const char* code : {"A2", "A3"}) {
    WeylGroup W(DynkinQuiver::from_code(code));
    auto en = W.enumerate();
    ChamberFan fan = chamber_fan(W, en);
    CHECK(fan.chambers.size() == en.elements.size());
    std::set<std::vector<int>> signsets;
    for (const Chamber& c : fan.chambers) {
      for (int s : c.signs) CHECK(s != 0);
      signsets.insert(c.signs);
      int64_t parity = en.elements[c.index].length % 2 == 0 ? 1 : -1;
      CHECK(c.gmat.det() == parity);
    }
    CHECK(signsets.size() == fan.chambers.size());
  }
}

TEST_CASE("cone membership locates interior points and walls") {
  WeylGroup W(DynkinQuiver::from_code("A2"));
  auto en = W.enumerate();
  ChamberFan fan = chamber_fan(W, en);

  // all-ones sits inside the fundamental chamber C_0
  std::vector<Rat> ones = {Rat(1), Rat(1)};
  ConeLocation loc = cone_membership(ones, fan);
  CHECK(loc.found);
  CHECK_FALSE(loc.boundary);
  CHECK(en.elements[loc.index].is_identity());

  // transported interior points land in the transported chamber
  for (size_t k = 0; k < en.elements.size(); ++k) {
    std::vector<int64_t> v = en.elements[k].star.apply({1, 1});
    std::vector<Rat> p = {Rat(static_cast<long>(v[0])),
                          Rat(static_cast<long>(v[1]))};
    ConeLocation at = cone_membership(p, fan);
    CHECK(at.found);
    CHECK_FALSE(at.boundary);
    CHECK(at.index == static_cast<int>(k));
  }

  // a wall point: the column shared by two chambers across a mutation
  // edge lies on the common boundary
  auto edges = W.hasse_edges(en);
  REQUIRE_FALSE(edges.empty());
  auto [from, to, i] = edges.front();
  const IMat &ga = en.elements[from].star, &gb = en.elements[to].star;
  std::vector<Rat> wall(W.rank(), Rat(0));
  for (int r = 0; r < W.rank(); ++r)
    for (int c = 0; c < W.rank(); ++c)
      if (c != i - 1) wall[r] += Rat(static_cast<long>(ga(r, c)));
  // the shared columns coincide on the two sides of the wall
  for (int r = 0; r < W.rank(); ++r)
    for (int c = 0; c < W.rank(); ++c)
      if (c != i - 1) CHECK(ga(r, c) == gb(r, c));
  ConeLocation wl = cone_membership(wall, fan);
  CHECK(wl.found);
  CHECK(wl.boundary);
}

TEST_CASE("fan witnesses avoid every root hyperplane") {
  WeylGroup W(DynkinQuiver::from_code("A3"));
  auto en = W.enumerate();
  ChamberFan fan = chamber_fan(W, en);
  CHECK(fan.positive_roots.size() == 6);
  for (const Chamber& c : fan.chambers)
    for (const auto& root : fan.positive_roots) {
      int64_t pairing = 0;
      for (int i = 0; i < W.rank(); ++i) pairing += c.witness[i] * root[i];
      CHECK(pairing != 0);
    }
}
