#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "schubert/criteria.hpp"
#include "schubert/grassmannian.hpp"

using namespace schubert;

TEST_CASE("type A setting") {
  MinusculeSetting gr(Family::A, 4, 2);
  CHECK(gr.r() == 2);
  CHECK(gr.n() == 5);
  REQUIRE(gr.v().has_value());
  CHECK(gr.index_set(*gr.v()) == IndexSet(5, {3, 5}));
  CHECK(gr.formula_v() == gr.oracle_v());
}

TEST_CASE("projective space minimum is the last point") {
  MinusculeSetting p(Family::A, 4, 1);
  REQUIRE(p.v().has_value());
  CHECK(p.index_set(*p.v()) == IndexSet(5, {5}));
  CHECK(p.formula_v() == p.v());
}

TEST_CASE("formula and oracle minimum differ for Gr(3,5)") {
  MinusculeSetting gr(Family::A, 4, 3);
  REQUIRE(gr.formula_v().has_value());
  REQUIRE(gr.oracle_v().has_value());
  CHECK(gr.index_set(*gr.formula_v()) == IndexSet(5, {3, 4, 5}));
  CHECK(gr.index_set(*gr.oracle_v()) == IndexSet(5, {2, 4, 5}));
  CHECK(gr.v() == gr.oracle_v());
  const CriteriaReport rep = lemma34_verdict(gr, gr.poset().bottom());
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("E^sing in Gr(2,4)") {
  MinusculeSetting gr(Family::A, 3, 2);
  const NodeId w = gr.node(IndexSet(4, {2, 4}));
  for (Backend b : {Backend::Partition, Backend::Quiver}) {
    const auto sing = e_sing(gr, w, b);
    REQUIRE(sing.size() == 1);
    CHECK(gr.index_set(sing[0]) == IndexSet(4, {1, 2}));
  }
  CHECK(e_sing(gr, gr.poset().bottom()).empty());
}

TEST_CASE("E^ss") {
  MinusculeSetting gr(Family::A, 4, 2);
  CHECK(e_ss(gr, gr.node(IndexSet(5, {2, 4}))).empty());
  const auto top = e_ss(gr, gr.poset().bottom());
  REQUIRE(top.size() == 1);
  CHECK(top[0] == *gr.v());
  const CriteriaReport empty = lemma34_verdict(gr, gr.node(IndexSet(5, {2, 4})));
  CHECK(empty.verdict);
  CHECK_FALSE(empty.warnings.empty());
}

TEST_CASE("backends agree and the verdict matches the gap criterion") {
  for (int n = 4; n <= 7; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      MinusculeSetting gr(Family::A, n - 1, r);
      const NodeId v = *gr.v();
      for (NodeId w = 0; w < gr.poset().size(); ++w) {
        auto a = e_sing(gr, w, Backend::Partition);
        auto b = e_sing(gr, w, Backend::Quiver);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        for (NodeId x : a)
          for (NodeId y : a)
            if (x != y) CHECK_FALSE(gr.poset().leq(x, y));
        if (gr.poset().leq(v, w)) {
          CHECK(lemma34_verdict(gr, w).verdict == semistable_in_smooth(gr.index_set(w), gr.index_set(v)));
        }
      }
    }
}

TEST_CASE("D and E settings") {
  for (auto [f, rank, k] : std::vector<std::tuple<Family, int, int>>{
           {Family::D, 5, 1}, {Family::D, 5, 5}, {Family::E6, 6, 1}, {Family::E7, 7, 7}}) {
    MinusculeSetting s(f, rank, k);
    REQUIRE(s.v().has_value());
    CHECK(s.v() == s.formula_v());
    CHECK_FALSE(s.oracle_v().has_value());
    const CriteriaReport full = lemma34_verdict(s, s.poset().bottom());
    CHECK(full.verdict);
    CHECK(full.e_sing.empty());
    const CriteriaReport at_v = lemma34_verdict(s, *s.v());
    CHECK(at_v.e_ss == std::vector<NodeId>{*s.v()});
    CHECK(s.describe(*s.v()).size() > 0);
  }
}
