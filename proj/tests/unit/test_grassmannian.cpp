#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "schubert/grassmannian.hpp"
#include "schubert/oracle.hpp"
#include "schubert/smt.hpp"

using namespace schubert;

namespace {

BoxPartition B(int r, int n, std::vector<int> parts) { return BoxPartition(r, n, std::move(parts)); }
IndexSet I(int n, std::vector<int> e) { return IndexSet(n, std::move(e)); }

// Brute smoothness: the rotated complement of mu is a rectangle.
bool rectangle_complement(const BoxPartition& mu) {
  std::vector<int> comp;
  for (int k = mu.r(); k >= 1; --k) comp.push_back(mu.width() - mu[k]);
  int h = 0;
  while (h < mu.r() && comp[h] > 0) ++h;
  for (int k = 0; k < h; ++k)
    if (comp[k] != comp[0]) return false;
  return true;
}

std::vector<int> ceil_element(int r, int n) {
  std::vector<int> out;
  for (int i = 1; i <= r; ++i) out.push_back((i * n + r - 1) / r);
  return out;
}

}  // namespace

TEST_CASE("index sets and partitions") {
  CHECK(indexset_to_partition(I(7, {3, 5, 7})) == B(3, 7, {2, 1, 0}));
  CHECK(indexset_to_partition(I(7, {1, 2, 3})) == B(3, 7, {4, 4, 4}));
  CHECK(indexset_to_partition(I(7, {5, 6, 7})) == B(3, 7, {0, 0, 0}));
  CHECK_THROWS_AS(B(2, 4, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(B(2, 4, {3, 0}), std::invalid_argument);
  CHECK(B(3, 7, {2, 1, 0})[4] == 0);
}

TEST_CASE("partition map is an order-reversing bijection") {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r < n; ++r) {
      const auto sets = all_index_sets(r, n);
      CHECK(sets.size() == all_box_partitions(r, n).size());
      for (const IndexSet& a : sets) {
        CHECK(partition_to_indexset(indexset_to_partition(a)) == a);
        for (const IndexSet& b : sets)
          CHECK(componentwise_leq(a, b) == diagram_contains(indexset_to_partition(a), indexset_to_partition(b)));
      }
    }
}

TEST_CASE("containment of diagrams") {
  CHECK(diagram_contains(B(3, 7, {2, 1, 0}), B(3, 7, {1, 1, 0})));
  CHECK_FALSE(diagram_contains(B(3, 7, {2, 1, 0}), B(3, 7, {1, 1, 1})));
  CHECK_THROWS_AS(diagram_contains(B(3, 7, {0, 0, 0}), B(2, 7, {0, 0})), std::invalid_argument);
}

TEST_CASE("corners") {
  CHECK(corners(B(3, 7, {2, 1, 0})) == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(corners(B(3, 7, {0, 0, 0})).empty());
  CHECK(corners(B(3, 7, {2, 2, 0})) == std::vector<Cell>{{2, 2}});
  // Full-width rows are skipped.
  CHECK(corners(B(2, 5, {3, 1})) == std::vector<Cell>{{2, 1}});
}

TEST_CASE("singular components") {
  CHECK(singular_components(B(2, 4, {1, 0})) == std::vector<BoxPartition>{B(2, 4, {2, 2})});
  CHECK(singular_components(B(3, 7, {2, 1, 0})) ==
        std::vector<BoxPartition>{B(3, 7, {2, 2, 2}), B(3, 7, {3, 3, 0})});
  CHECK(singular_components(B(3, 7, {0, 0, 0})).empty());
  CHECK(singular_components(B(3, 7, {4, 1, 1})).empty());
}

TEST_CASE("smoothness agrees with the rectangle test and T(mu) strictly contains mu") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r < n; ++r)
      for (const BoxPartition& mu : all_box_partitions(r, n)) {
        CHECK(is_smooth(mu) == rectangle_complement(mu));
        const auto comps = singular_components(mu);
        CHECK(comps.empty() == is_smooth(mu));
        for (const BoxPartition& c : comps) {
          CHECK(diagram_contains(c, mu));
          CHECK(c != mu);
          CHECK(c.size() > mu.size());
        }
      }
}

TEST_CASE("closed-form minimal element") {
  CHECK(minimal_semistable(3, 7) == I(7, {3, 5, 7}));
  CHECK(minimal_semistable(2, 5) == I(5, {3, 5}));
  CHECK(minimal_semistable(3, 6) == I(6, {3, 5, 6}));
  CHECK(minimal_semistable(2, 4) == I(4, {3, 4}));
  for (int n = 3; n <= 12; ++n)
    for (int r = 1; r < n; ++r) {
      const IndexSet v = minimal_semistable(r, n);
      CHECK(v[r] == n);
      if (n % r == 1) CHECK(std::vector<int>(v.entries().begin(), v.entries().end()) == ceil_element(r, n));
    }
}

TEST_CASE("closed form is not minimal unless n mod r is 1") {
  // Gr(3,5): the closed form gives the whole Grassmannian, which is smooth,
  // while the invariant search finds semistable points on a smaller X(w).
  CHECK(minimal_semistable(3, 5) == I(5, {3, 4, 5}));
  CHECK(minimal_semistable_oracle(3, 5) == std::vector<IndexSet>{I(5, {2, 4, 5})});
  CHECK(is_smooth(indexset_to_partition(I(5, {3, 4, 5}))));
  CHECK_FALSE(is_smooth(indexset_to_partition(I(5, {2, 4, 5}))));
}

TEST_CASE("oracle minimum is the ceiling element and is unique") {
  for (int n = 3; n <= 8; ++n)
    for (int r = 1; r < n; ++r) {
      CAPTURE(r);
      CAPTURE(n);
      const auto mins = minimal_semistable_oracle(r, n);
      REQUIRE(mins.size() == 1);
      CHECK(std::vector<int>(mins[0].entries().begin(), mins[0].entries().end()) == ceil_element(r, n));
    }
}

TEST_CASE("oracle minimum is singular in the coprime case") {
  for (int n = 5; n <= 8; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      if (std::gcd(r, n) != 1) continue;
      CAPTURE(r);
      CAPTURE(n);
      CHECK_FALSE(is_smooth(indexset_to_partition(minimal_semistable_oracle(r, n)[0])));
    }
}

TEST_CASE("semistable locus inside the smooth locus") {
  CHECK(semistable_in_smooth(I(7, {3, 5, 7}), I(7, {3, 5, 7})));
  CHECK(semistable_in_smooth(I(7, {5, 6, 7}), I(7, {3, 5, 7})));
  CHECK(semistable_in_smooth(I(5, {3, 5})));
  CHECK_THROWS_AS(semistable_in_smooth(I(7, {2, 5, 7}), I(7, {3, 5, 7})), std::domain_error);
}

TEST_CASE("gap criterion matches the components of the singular locus") {
  // X(w)^ss sits in the smooth locus iff no component X_{mu'} contains X(v),
  // i.e. no mu' in T(mu) is contained in lambda(v).
  for (int n = 4; n <= 8; ++n)
    for (int r = 2; r <= n - 2; ++r) {
      const IndexSet v = minimal_semistable_oracle(r, n)[0];
      const BoxPartition lv = indexset_to_partition(v);
      for (const IndexSet& w : all_index_sets(r, n)) {
        if (!componentwise_leq(v, w)) continue;
        bool inside = true;
        for (const BoxPartition& c : singular_components(indexset_to_partition(w)))
          if (diagram_contains(lv, c)) inside = false;
        CAPTURE(w.to_string());
        CHECK(semistable_in_smooth(w, v) == inside);
      }
    }
}

TEST_CASE("quotient smoothness report") {
  const auto ok = quotient_smoothness_report(I(5, {3, 5}));
  CHECK(ok.gcd == 1);
  CHECK(ok.semistable_nonempty);
  CHECK(ok.quotient_smooth);

  const auto below = quotient_smoothness_report(I(5, {2, 4}));
  CHECK_FALSE(below.semistable_nonempty);

  const auto even = quotient_smoothness_report(I(4, {3, 4}));
  CHECK(even.gcd == 2);
  CHECK_FALSE(even.quotient_smooth);
  CHECK_FALSE(even.warnings.empty());
}

TEST_CASE("strip oracle agrees with direct multichain enumeration") {
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r < n; ++r) {
      const int m0 = n / std::gcd(r, n);
      for (const IndexSet& w : all_index_sets(r, n)) {
        CAPTURE(w.to_string());
        const auto found = semistable_nonempty_oracle(w);
        const bool brute = oracle::brute_grassmann_semistable(w, m0) || oracle::brute_grassmann_semistable(w, 2 * m0);
        CHECK(found.found == brute);
        if (found.found) {
          CHECK(static_cast<int>(found.chain.size()) == found.degree);
          for (std::size_t k = 0; k < found.chain.size(); ++k) {
            CHECK(componentwise_leq(found.chain[k], k == 0 ? w : found.chain[k - 1]));
          }
        }
      }
    }
}
