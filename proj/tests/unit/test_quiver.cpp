#include <doctest.h>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

#include "schubert/grassmannian.hpp"
#include "schubert/quiver.hpp"

using namespace schubert;

namespace {

struct Fixture {
  MinusculePoset poset;
  QuiverAtlas atlas;
  Fixture(Family f, int rank, int k) : poset(build_minuscule_poset(RootSystem(f, rank), k)), atlas(poset) {}
};

int count(const std::string& text, const std::string& needle) {
  int c = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("Gr(2,4) quiver is a 2x2 grid") {
  Fixture fx(Family::A, 3, 2);
  const WordQuiver& q = fx.atlas.full();
  REQUIRE(q.size() == 4);
  CHECK(q.arrows().size() == 4);
  int maxima = 0, minima = 0, incomparable = 0;
  for (int i = 0; i < 4; ++i) {
    if (std::popcount(q.above(i)) == 1) ++maxima;
    if (std::popcount(q.below(i)) == 1) ++minima;
    for (int j = i + 1; j < 4; ++j)
      if (!q.geq(i, j) && !q.geq(j, i)) ++incomparable;
  }
  CHECK(maxima == 1);
  CHECK(minima == 1);
  CHECK(incomparable == 1);
}

TEST_CASE("projective space quiver is a chain") {
  for (int n = 2; n <= 7; ++n) {
    Fixture fx(Family::A, n - 1, 1);
    const WordQuiver& q = fx.atlas.full();
    CHECK(q.size() == n - 1);
    CHECK(static_cast<int>(q.arrows().size()) == n - 2);
    for (int i = 0; i < q.size(); ++i) CHECK(std::popcount(q.above(i)) == i + 1);
  }
}

TEST_CASE("full quiver sizes") {
  CHECK(Fixture(Family::E6, 6, 1).atlas.full().size() == 16);
  CHECK(Fixture(Family::E7, 7, 7).atlas.full().size() == 27);
  CHECK(Fixture(Family::D, 5, 1).atlas.full().size() == 8);
  CHECK(Fixture(Family::A, 6, 3).atlas.full().size() == 12);
}

TEST_CASE("ideals of the full quiver are the elements of W^P") {
  for (auto [f, rank, k] : std::vector<std::tuple<Family, int, int>>{
           {Family::A, 5, 3}, {Family::D, 5, 1}, {Family::D, 5, 5}, {Family::E6, 6, 1}}) {
    Fixture fx(f, rank, k);
    for (int x = 0; x < fx.poset.size(); ++x) {
      const MinusculeQuiver qx = embed_subquiver(fx.atlas, x);
      CHECK(qx.vertex_count() == fx.poset.length(x));
      CHECK(fx.atlas.element_of(qx.members()) == x);
      for (int y = 0; y < fx.poset.size(); ++y) {
        const bool subset = (fx.atlas.members_of(y) & ~qx.members()) == 0;
        CHECK(subset == fx.poset.leq(y, x));
      }
    }
    CHECK(fx.atlas.members_of(fx.poset.top()) == 0);
    CHECK(std::popcount(fx.atlas.members_of(fx.poset.bottom())) == fx.atlas.full().size());
  }
}

TEST_CASE("Gr(3,7) quiver of (3,5,7) has nine vertices") {
  Fixture fx(Family::A, 6, 3);
  const NodeId x = node_of_indexset(fx.poset, IndexSet(7, {3, 5, 7}));
  CHECK(embed_subquiver(fx.atlas, x).vertex_count() == 9);
}

TEST_CASE("full quivers have no real holes") {
  for (auto [f, rank, k] : std::vector<std::tuple<Family, int, int>>{
           {Family::A, 6, 3}, {Family::D, 6, 1}, {Family::D, 6, 6}, {Family::E6, 6, 1}, {Family::E7, 7, 7}}) {
    Fixture fx(f, rank, k);
    const MinusculeQuiver q = embed_subquiver(fx.atlas, fx.poset.bottom());
    CHECK(classify_holes(q).real_count() == 0);
    CHECK(is_smooth_quiver(q));
    CHECK(singular_components_quiver(q).empty());
  }
}

TEST_CASE("holes of the minimal element") {
  for (int n = 4; n <= 7; ++n) {
    Fixture fx(Family::D, n, 1);
    const NodeId v = fx.poset.apply(minimal_v_word(Family::D, n, 1));
    const HoleReport rep = classify_holes(fx.atlas.quiver(v));
    CHECK(rep.real_count() == 1);
    for (const Hole& h : rep.holes)
      if (h.kind == HoleKind::Real) CHECK(h.label == n - 2);
  }
  Fixture e6(Family::E6, 6, 1);
  const NodeId v = e6.poset.apply(minimal_v_word(Family::E6, 6, 1));
  CHECK(classify_holes(e6.atlas.quiver(v)).real_count() == 1);
}

TEST_CASE("essential holes are real") {
  Fixture fx(Family::E6, 6, 1);
  for (int x = 0; x < fx.poset.size(); ++x)
    for (const Hole& h : classify_holes(fx.atlas.quiver(x)).holes)
      if (h.essential) CHECK(h.kind == HoleKind::Real);
}

TEST_CASE("quiver smoothness agrees with the partition test in type A") {
  for (int n = 3; n <= 7; ++n)
    for (int r = 1; r < n; ++r) {
      Fixture fx(Family::A, n - 1, r);
      for (int x = 0; x < fx.poset.size(); ++x) {
        const BoxPartition mu = indexset_to_partition(indexset_of_node(fx.poset, x));
        const MinusculeQuiver q = fx.atlas.quiver(x);
        CHECK(is_smooth_quiver(q) == is_smooth(mu));
        std::vector<BoxPartition> comps;
        for (NodeId c : singular_components_quiver(q)) comps.push_back(indexset_to_partition(indexset_of_node(fx.poset, c)));
        std::sort(comps.begin(), comps.end());
        CHECK(comps == singular_components(mu));
      }
    }
}

TEST_CASE("quiver of Gr(2,4) singular point") {
  Fixture fx(Family::A, 3, 2);
  const NodeId x = node_of_indexset(fx.poset, IndexSet(4, {2, 4}));
  const auto comps = singular_components_quiver(fx.atlas.quiver(x));
  REQUIRE(comps.size() == 1);
  CHECK(indexset_of_node(fx.poset, comps[0]) == IndexSet(4, {1, 2}));
}

TEST_CASE("semistable check requires v <= w") {
  Fixture fx(Family::A, 4, 2);
  const NodeId v = node_of_indexset(fx.poset, IndexSet(5, {3, 5}));
  const NodeId w = node_of_indexset(fx.poset, IndexSet(5, {2, 4}));
  CHECK(semistable_in_smooth_quiver(fx.atlas.quiver(v), fx.atlas.quiver(v)));
  CHECK_THROWS_AS(semistable_in_smooth_quiver(fx.atlas.quiver(w), fx.atlas.quiver(v)), std::domain_error);
}

TEST_CASE("minimal words are reduced") {
  CHECK(minimal_v_word(Family::D, 5, 1) == Word{5, 4, 3, 2, 1});
  CHECK(minimal_v_word(Family::E7, 7, 7).size() == 15);
  CHECK_THROWS_AS(minimal_v_word(Family::A, 4, 1), std::invalid_argument);
  for (auto [f, rank, k] : std::vector<std::tuple<Family, int, int>>{{Family::D, 4, 1},
                                                                     {Family::D, 4, 3},
                                                                     {Family::D, 4, 4},
                                                                     {Family::D, 5, 4},
                                                                     {Family::D, 5, 5},
                                                                     {Family::D, 7, 6},
                                                                     {Family::D, 7, 7},
                                                                     {Family::E6, 6, 1},
                                                                     {Family::E6, 6, 6},
                                                                     {Family::E7, 7, 7},
                                                                     {Family::A, 6, 3}}) {
    const MinusculePoset p = build_minuscule_poset(RootSystem(f, rank), k);
    CHECK(p.try_apply(minimal_v_word(f, rank, k)).has_value());
  }
}

TEST_CASE("quivers do not depend on the reduced word") {
  for (auto [f, rank, k] : std::vector<std::tuple<Family, int, int>>{{Family::A, 4, 2}, {Family::D, 5, 5}, {Family::E6, 6, 1}}) {
    RootSystem s(f, rank);
    const MinusculePoset p = build_minuscule_poset(s, k);
    for (int x = 0; x < p.size(); x += 3) {
      const Word base = canonical_reduced_word(p, x);
      const WordQuiver q0(s, base);
      for (const Word& other : commutation_class(s, base, 20)) {
        CHECK(p.try_apply(other) == x);
        CHECK(quivers_isomorphic(q0, WordQuiver(s, other)));
      }
    }
  }
}

TEST_CASE("isomorphism detects different quivers") {
  RootSystem a3(Family::A, 3);
  CHECK_FALSE(quivers_isomorphic(WordQuiver(a3, {1, 2}), WordQuiver(a3, {1, 3})));
  CHECK_FALSE(quivers_isomorphic(WordQuiver(a3, {2, 1, 3}), WordQuiver(a3, {2, 1})));
}

TEST_CASE("DOT output") {
  Fixture fx(Family::E6, 6, 1);
  const NodeId v = fx.poset.apply(minimal_v_word(Family::E6, 6, 1));
  const std::string dot = quiver_to_dot(fx.atlas.quiver(v));
  CHECK(dot == quiver_to_dot(fx.atlas.quiver(v)));
  CHECK(dot.rfind("digraph Q {", 0) == 0);
  CHECK(count(dot, "doublecircle") == 1);

  const std::string empty = quiver_to_dot(fx.atlas.quiver(fx.poset.top()));
  CHECK(count(empty, "doublecircle") == 0);
  CHECK(count(empty, "solid") == 0);
  CHECK(count(empty, "dotted") > 0);
}
