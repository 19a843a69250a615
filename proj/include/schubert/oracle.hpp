#pragma once

// Brute-force reference implementations. Each one avoids the shortcuts of
// the main library (tableau criterion, greedy lifts, orbit BFS, strip DP)
// so the two can be compared.

#include <cstdint>
#include <map>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/root_data.hpp"
#include "schubert/smt.hpp"

namespace schubert::oracle {

/// Bruhat order on S_n as the transitive closure of u < u t for
/// transpositions t that raise the length.
class BruhatTable {
 public:
  explicit BruhatTable(int n);

  int n() const { return n_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  int index(const Permutation& w) const { return index_.at(w); }
  bool leq(const Permutation& u, const Permutation& w) const { return leq_[index(w)][index(u)]; }
  bool leq(int u, int w) const { return leq_[w][u]; }
  /// pi_d of element x.
  const IndexSet& projection(int x, int d) const { return projections_[x][d]; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::map<Permutation, int> index_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<IndexSet>> projections_;
};

int inversions(const Permutation& w);
/// Reduced word by bubble sort.
Word bubble_word(const Permutation& w);
/// u <= w iff u is a subword product of a reduced word of w.
bool subword_leq(const Permutation& u, const Permutation& w);

/// Minimum-length element of w W_I by enumerating W_I.
Permutation brute_min_coset_rep(const Permutation& w, const std::vector<int>& parabolic);

/// Chain search over every lift, no greedy choice.
bool exhaustive_standard(const AlphaZeroTableau& t, const Permutation& w, const BruhatTable& table);

/// All tableaux of shape m * alpha_0 (rows from all of I(1,n) and I(n-1,n)).
std::vector<AlphaZeroTableau> all_tableaux(int n, int m);

/// Invariant standard tableaux counted from all_tableaux with content counts
/// and exhaustive chains.
std::int64_t brute_invariant_dimension(const Permutation& w, int m, const BruhatTable& table);

/// Same count on X_P(w) in G/P, P = P_1 cap P_{n-1}: chains of minimal coset
/// representatives below w^P.
std::int64_t parabolic_invariant_dimension(const Permutation& w, int m, const BruhatTable& table);

/// T-invariant standard monomials of degree m on X(w) in Gr(r, n) by
/// enumerating multichains directly.
bool brute_grassmann_semistable(const IndexSet& w, int m);

/// dim V_omega from the Weyl dimension formula, positive roots by closure.
std::int64_t weyl_dimension(const RootSystem& system, int weight_index);
/// Number of positive roots not orthogonal to omega, i.e. dim G/P.
int flag_dimension(const RootSystem& system, int weight_index);

}  // namespace schubert::oracle
