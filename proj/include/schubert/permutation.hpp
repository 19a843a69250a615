#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace schubert {

/// Sequence of simple-reflection indices s_{a_1} s_{a_2} ... s_{a_k}.
using Word = std::vector<int>;

std::string word_to_string(const Word& word);

/// Element of S_n in one-line notation (w(1), ..., w(n)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> line);

  static Permutation identity(int n);
  static Permutation longest(int n);

  int size() const { return static_cast<int>(line_.size()); }
  /// w(pos), 1-based.
  int operator()(int pos) const { return line_[pos - 1]; }
  std::span<const int> line() const { return line_; }

  /// Inversion count.
  int length() const;
  Permutation inverse() const;
  /// Functional composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// w * s_i: exchanges the entries in positions i and i+1.
  Permutation swap_positions(int i) const;
  /// s_i * w: exchanges the values i and i+1.
  Permutation swap_values(int i) const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> line_;
};

/// Strictly increasing r-tuple in {1..n}.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int n, std::vector<int> entries);

  int r() const { return static_cast<int>(entries_.size()); }
  int n() const { return n_; }
  /// i_k, 1-based.
  int operator[](int k) const { return entries_[k - 1]; }
  std::span<const int> entries() const { return entries_; }
  bool contains(int value) const;
  /// The (n - r)-subset of missing values.
  IndexSet complement() const;

  std::string to_string() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

/// Componentwise order on I(r, n) (the Bruhat order of W^{P_r}).
bool componentwise_leq(const IndexSet& a, const IndexSet& b);

/// s_{a_1} s_{a_2} ... s_{a_k} as a function, the rightmost factor applied
/// first. Reproduces s4 s5 s6 s3 s2 s1 -> (5,1,2,3,6,7,4) in S_7.
Permutation word_to_perm(const Word& word, int n);

/// The extension "s_{a_1} ... s_{a_k} base" in the notation used for chains
/// of Schubert varieties: letters are applied right to left as position
/// swaps, i.e. base * s_{a_k} * ... * s_{a_1}. Maps (5,1,2,3,6,7,4) under
/// s6 s5 s4 s3 s2 to (5,2,3,6,7,4,1).
Permutation extend(const Permutation& base, const Word& prefix);

/// A reduced word with word_to_perm(reduced_word(w)) == w.
Word reduced_word(const Permutation& w);

/// Sorted first i values of w.
IndexSet pi_projection(const Permutation& w, int i);

/// Bruhat order via the tableau criterion pi_i(u) <= pi_i(w) for all i.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// w = min_rep * parabolic_part with min_rep in W^I and parabolic_part in W_I.
struct CosetFactorization {
  Permutation min_rep;
  Permutation parabolic_part;
};

/// `parabolic` lists the simple reflections generating W_I.
CosetFactorization min_coset_rep(const Permutation& w, const std::vector<int>& parabolic);
Permutation max_parabolic_element(int n, const std::vector<int>& parabolic);
/// w^I * w_{0,I}: the maximal element of the coset w W_I.
Permutation max_coset_lift(const Permutation& w, const std::vector<int>& parabolic);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
/// All of I(r, n) in lexicographic order.
std::vector<IndexSet> all_index_sets(int r, int n);

/// Parsers for the three element spellings. Errors name the expected format.
Permutation parse_one_line(const std::string& text);
Word parse_word(const std::string& text);
IndexSet parse_index_set(const std::string& text, int n);

}  // namespace schubert
