#include <doctest.h>

#include "ppalg/quiver.hpp"

using namespace ppalg;

TEST_CASE("type codes parse to the expected diagrams") {
  DynkinQuiver a2 = DynkinQuiver::parse("A2");
  CHECK(a2.n() == 2);
  REQUIRE(a2.arrows().size() == 1);
  CHECK(a2.arrows()[0].src == 1);
  CHECK(a2.arrows()[0].tgt == 2);
  CHECK(a2.type_tag() == "A2");

  DynkinQuiver a3 = DynkinQuiver::parse("A3");
  CHECK(a3.arrows().size() == 2);
  CHECK(a3.type() == DynkinType::A);

  DynkinQuiver d4 = DynkinQuiver::parse("D4");
  CHECK(d4.type_tag() == "D4");
  auto m = d4.m_matrix();
  int branch_degree = 0;
  for (int j = 0; j < 4; ++j) branch_degree += m[1][j];
  CHECK(branch_degree == 3);  // vertex 2 is the D4 branch vertex

  CHECK(DynkinQuiver::parse("E6").type_tag() == "E6");
  CHECK(DynkinQuiver::parse("E8").n() == 8);
  CHECK(DynkinQuiver::parse("A1").arrows().empty());
}

TEST_CASE("edge-list JSON round trip and classification") {
  DynkinQuiver d4 =
      DynkinQuiver::parse(R"({"vertices":4,"arrows":[[1,2],[3,2],[4,2]]})");
  CHECK(d4.type() == DynkinType::D);
  CHECK(d4.n() == 4);
  DynkinQuiver again = DynkinQuiver::parse(d4.to_edge_list().dump());
  CHECK(again.to_edge_list() == d4.to_edge_list());
  CHECK(again.type_tag() == d4.type_tag());
}

TEST_CASE("m-matrix is symmetric and orientation independent") {
  auto m1 = DynkinQuiver::parse(R"({"vertices":2,"arrows":[[1,2]]})").m_matrix();
  auto m2 = DynkinQuiver::parse(R"({"vertices":2,"arrows":[[2,1]]})").m_matrix();
  CHECK(m1 == m2);
  auto m = DynkinQuiver::parse("A3").m_matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(m[i][j] == m[j][i]);
      if (i == j) CHECK(m[i][j] == 0);
    }
  CHECK(m[0][1] == 1);
  CHECK(m[0][2] == 0);
}

TEST_CASE("malformed and non-Dynkin input is rejected") {
  CHECK_THROWS_AS(DynkinQuiver::parse(""), MalformedQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("Z9"), MalformedQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("Ax"), MalformedQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("{bad json"), MalformedQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse(R"({"vertices":2})"), MalformedQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("D3"), NonDynkinQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("E9"), NonDynkinQuiver);
  CHECK_THROWS_AS(DynkinQuiver::parse("E5"), NonDynkinQuiver);
  // a cycle has too many edges for a tree
  CHECK_THROWS_AS(
      DynkinQuiver::parse(R"({"vertices":3,"arrows":[[1,2],[2,3],[3,1]]})"),
      NonDynkinQuiver);
  // doubled edge
  CHECK_THROWS_AS(
      DynkinQuiver::parse(R"({"vertices":2,"arrows":[[1,2],[2,1]]})"),
      NonDynkinQuiver);
  // degree-4 star
  CHECK_THROWS_AS(
      DynkinQuiver::parse(
          R"({"vertices":5,"arrows":[[1,5],[2,5],[3,5],[4,5]]})"),
      NonDynkinQuiver);
  // out-of-range endpoint
  CHECK_THROWS_AS(DynkinQuiver::parse(R"({"vertices":2,"arrows":[[1,3]]})"),
                  MalformedQuiver);
}

TEST_CASE("double quiver star involution") {
  DoubleQuiver dq(DynkinQuiver::parse("A3"));
  CHECK(dq.arrows().size() == 4);
  for (const Arrow& a : dq.arrows()) {
    CHECK(dq.star(dq.star(a.id)) == a.id);
    CHECK(dq.star(a.id) != a.id);
    const Arrow& s = dq.arrows()[dq.star(a.id)];
    CHECK(s.src == a.tgt);
    CHECK(s.tgt == a.src);
    CHECK(dq.is_starred(a.id) != dq.is_starred(dq.star(a.id)));
  }
  DoubleQuiver d4(DynkinQuiver::parse("D4"));
  CHECK(d4.arrows().size() == 6);
  DoubleQuiver rev = d4.reversed();
  for (size_t i = 0; i < d4.arrows().size(); ++i) {
    CHECK(rev.arrows()[i].src == d4.arrows()[i].tgt);
    CHECK(rev.arrows()[i].tgt == d4.arrows()[i].src);
  }
}
