#include <doctest.h>

#include <set>
#include <stdexcept>

#include "schubert/oracle.hpp"
#include "schubert/root_data.hpp"

using namespace schubert;

namespace {

std::vector<RootSystem> in_scope() {
  std::vector<RootSystem> out;
  for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
  for (int n = 4; n <= 7; ++n) out.emplace_back(Family::D, n);
  out.emplace_back(Family::E6, 6);
  out.emplace_back(Family::E7, 7);
  return out;
}

bool connected(const RootSystem& s) {
  std::set<int> seen{1};
  std::vector<int> stack{1};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 1; j <= s.rank(); ++j)
      if (s.adjacent(i, j) && seen.insert(j).second) stack.push_back(j);
  }
  return static_cast<int>(seen.size()) == s.rank();
}

}  // namespace

TEST_CASE("cartan matrices of small rank") {
  CHECK(cartan_matrix(Family::A, 2).matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(cartan_matrix(Family::A, 1).matrix() == std::vector<std::vector<int>>{{2}});
  RootSystem d4 = cartan_matrix(Family::D, 4);
  CHECK(d4.adjacent(2, 1));
  CHECK(d4.adjacent(2, 3));
  CHECK(d4.adjacent(2, 4));
  CHECK_FALSE(d4.adjacent(3, 4));
  CHECK_FALSE(d4.adjacent(1, 3));
}

TEST_CASE("exceptional numbering puts node 2 on the branch node 4") {
  for (Family f : {Family::E6, Family::E7}) {
    RootSystem s(f, default_rank(f));
    CHECK(s.adjacent(4, 2));
    CHECK(s.adjacent(4, 3));
    CHECK(s.adjacent(4, 5));
    CHECK(s.adjacent(1, 3));
    CHECK_FALSE(s.adjacent(1, 2));
  }
}

TEST_CASE("cartan matrices are symmetric, simply laced and connected") {
  for (const RootSystem& s : in_scope()) {
    CAPTURE(s.name());
    for (int i = 1; i <= s.rank(); ++i) {
      CHECK(s.cartan(i, i) == 2);
      for (int j = 1; j <= s.rank(); ++j) {
        CHECK(s.cartan(i, j) == s.cartan(j, i));
        if (i != j) CHECK((s.cartan(i, j) == 0 || s.cartan(i, j) == -1));
      }
    }
    CHECK(connected(s));
  }
}

TEST_CASE("invalid rank and family combinations are rejected") {
  CHECK_THROWS_AS(RootSystem(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::E6, 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem(Family::E7, 6), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("B"), std::invalid_argument);
  CHECK(parse_family("e6") == Family::E6);
}

TEST_CASE("minuscule weight table") {
  CHECK(minuscule_weights(RootSystem(Family::A, 6)) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(minuscule_weights(RootSystem(Family::E7, 7)) == std::vector<int>{7});
  CHECK(minuscule_weights(RootSystem(Family::D, 5)) == std::vector<int>{1, 4, 5});
  CHECK(minuscule_weights(RootSystem(Family::E6, 6)) == std::vector<int>{1, 6});
  CHECK(minuscule_weights(RootSystem(Family::E8, 8)).empty());
}

TEST_CASE("minuscule weights pair to at most one with every positive coroot") {
  // Orbit sizes from the Weyl dimension formula match the expected counts.
  CHECK(oracle::weyl_dimension(RootSystem(Family::E7, 7), 7) == 56);
  CHECK(oracle::weyl_dimension(RootSystem(Family::E6, 6), 1) == 27);
  CHECK(oracle::weyl_dimension(RootSystem(Family::D, 5), 1) == 10);
  CHECK(oracle::weyl_dimension(RootSystem(Family::D, 5), 5) == 16);
  CHECK(oracle::weyl_dimension(RootSystem(Family::A, 6), 3) == 35);
}

TEST_CASE("reflect") {
  RootSystem a2(Family::A, 2);
  Weight w1 = fundamental_weight(a2, 1);
  CHECK(reflect(w1, 1, a2).coords == std::vector<int>{-1, 1});
  CHECK(reflect(w1, 2, a2) == w1);
  CHECK_THROWS_AS(reflect(w1, 3, a2), std::out_of_range);
  for (const RootSystem& s : in_scope()) {
    for (int k = 1; k <= s.rank(); ++k) {
      Weight mu = fundamental_weight(s, k);
      mu = reflect(mu, k, s);
      for (int i = 1; i <= s.rank(); ++i) CHECK(reflect(reflect(mu, i, s), i, s) == mu);
    }
  }
}

TEST_CASE("diagram flips are automorphisms") {
  for (const RootSystem& s : in_scope()) {
    for (int i = 1; i <= s.rank(); ++i)
      for (int j = 1; j <= s.rank(); ++j) CHECK(s.cartan(diagram_flip(s, i), diagram_flip(s, j)) == s.cartan(i, j));
  }
  RootSystem d5(Family::D, 5);
  CHECK(diagram_flip(d5, 4) == 5);
  CHECK(diagram_flip(d5, 1) == 1);
  RootSystem e6(Family::E6, 6);
  CHECK(diagram_flip(e6, 1) == 6);
  CHECK(diagram_flip(e6, 3) == 5);
  CHECK(diagram_flip(e6, 2) == 2);
}
