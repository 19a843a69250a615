#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// Tableau of shape m * alpha_0 (alpha_0 = omega_1 + omega_{n-1}) stored as
/// its rows in chain order: short rows l_1..l_m, then long rows tau_1..tau_m
/// (each an (n-1)-subset).
struct AlphaZeroTableau {
  int n = 0;
  std::vector<int> short_rows;
  std::vector<IndexSet> long_rows;

  int degree() const { return static_cast<int>(short_rows.size()); }
  std::string to_string() const;
  friend auto operator<=>(const AlphaZeroTableau&, const AlphaZeroTableau&) = default;
};

/// Builds the tableau whose long rows miss the given values.
AlphaZeroTableau tableau_from_missing(int n, std::vector<int> short_rows, const std::vector<int>& missing);

struct TableauWeight {
  std::vector<int> counts;  // counts[i-1] = c(i)
};

TableauWeight tableau_weight(const AlphaZeroTableau& t);
/// All box contents occur equally often.
bool is_invariant(const AlphaZeroTableau& t);

bool is_young_on(const AlphaZeroTableau& t, const Permutation& w);

/// The Bruhat-maximal x <= bound with pi_d(x) = tau, d = tau.r().
std::optional<Permutation> max_lift_below(const Permutation& bound, const IndexSet& tau);

/// Greedy chain w >= phi_1 >= ... >= phi_{2m} with pi(phi) equal to the rows.
std::optional<std::vector<Permutation>> standard_chain(const AlphaZeroTableau& t, const Permutation& w);
bool is_standard_on(const AlphaZeroTableau& t, const Permutation& w);

/// Every invariant filling of shape m * alpha_0, standard or not.
std::vector<AlphaZeroTableau> invariant_tableaux(int n, int m);
std::vector<AlphaZeroTableau> invariant_standard_tableaux(const Permutation& w, int m);
std::int64_t invariant_dimension(const Permutation& w, int m);

/// Both families s_{i+1}...s_{n-1} s_i...s_1 and s_i...s_1 s_{i+1}...s_{n-1}.
std::vector<Permutation> minimal_semistable_borel(int n);

enum class FamilyCase { A, A2, B };

std::string to_string(FamilyCase c);
FamilyCase parse_family_case(const std::string& text);

struct FamilyIndex {
  int k;
  int j;
  friend auto operator<=>(const FamilyIndex&, const FamilyIndex&) = default;
};

/// Admissible (k, j) for the extension family, in chain order. k = 0 is the
/// minimal element (j = 0); the alias step (k = i+1 in case A, k = i in
/// case B) appears once with j = n - k.
std::vector<FamilyIndex> family_indices(FamilyCase c, int n, int i);
Permutation family_element(FamilyCase c, int n, int i, int k, int j);
int predicted_dimension(FamilyCase c, int n, int i, int k, int j);

/// The i values for which the case is defined.
std::vector<int> family_parameters(FamilyCase c, int n);

struct DimensionRow {
  int k;
  int j;
  Permutation element;
  std::int64_t computed;
  int predicted;
  bool match;
};

std::vector<DimensionRow> dimension_table(FamilyCase c, int n, int i);

/// Union of all family elements for S_n.
std::vector<Permutation> all_family_elements(int n);

/// Simple reflections of the Levi of P_1 cap P_{n-1}.
std::vector<int> alpha0_parabolic(int n);
/// w^P * w_{0,P} for every w^P in W^P, P = P_1 cap P_{n-1}.
std::vector<Permutation> alpha0_lifts(int n);

std::uint64_t binomial(int n, int k);

struct DegreeCheck {
  int m;
  std::int64_t dimension;
  std::uint64_t expected;
  bool pass;
};

struct NormalityReport {
  Permutation w;
  std::int64_t t = 0;
  std::vector<DegreeCheck> degrees;
  bool family_element = false;
  bool lift = false;
  bool pass = true;
};

/// Checks dim R_m = C(t+m-1, m) for 2 <= m <= max_m. Throws
/// std::domain_error if w has no degree-one invariants.
NormalityReport projective_normality_check(const Permutation& w, int max_m);

struct GrassmannSemistability {
  bool found = false;
  int degree = 0;
  int degree_bound = 0;
  std::vector<IndexSet> chain;  // tau_1 >= ... >= tau_m, top first
};

/// Searches degrees m_0 and 2 m_0 (m_0 = n / gcd(r, n)) for a T-invariant
/// standard monomial of L_{omega_r} on X(w) in Gr(r, n).
GrassmannSemistability semistable_nonempty_oracle(const IndexSet& w);

struct BorelSemistability {
  bool found = false;
  int degree = 0;
  int degree_bound = 0;
  std::optional<AlphaZeroTableau> witness;
};

/// Same search for L_{alpha_0} on X(w) in G/B, degrees 1 and 2.
BorelSemistability semistable_nonempty_oracle(const Permutation& w);

/// Minimal elements of I(r, n) with a semistable point according to the oracle.
std::vector<IndexSet> minimal_semistable_oracle(int r, int n);

}  // namespace schubert
