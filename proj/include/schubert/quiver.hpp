#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubert/minuscule_poset.hpp"

namespace schubert {

using VertexMask = std::uint64_t;

/// Perrin quiver of a reduced word s_{b_1} ... s_{b_N}. Vertices are the
/// positions 0..N-1 (0-based) carrying the labels b_k; there is an arrow
/// i -> j when the labels pair nontrivially and i < j < s(i). The order is
/// i <= j iff there is an oriented path from j to i, so earlier positions
/// sit higher.
class WordQuiver {
 public:
  WordQuiver(const RootSystem& system, Word word);

  int size() const { return static_cast<int>(labels_.size()); }
  int label(int v) const { return labels_[v]; }
  const Word& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  std::optional<int> successor(int v) const;
  std::optional<int> predecessor(int v) const;
  /// {j : j >= v}, including v.
  VertexMask above(int v) const { return above_[v]; }
  /// {j : j <= v}, including v.
  VertexMask below(int v) const { return below_[v]; }
  bool geq(int j, int i) const { return (above_[i] >> j) & 1U; }
  bool pairs(int i, int j) const;

 private:
  RootSystem system_;
  Word labels_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<int> succ_;
  std::vector<int> pred_;
  std::vector<VertexMask> above_;
  std::vector<VertexMask> below_;
};

/// Two word quivers are isomorphic as labeled ordered quivers under the
/// bijection matching the k-th occurrence of each label.
bool quivers_isomorphic(const WordQuiver& a, const WordQuiver& b);

enum class HoleKind { Real, Virtual };

struct Hole {
  int vertex;
  int label;
  HoleKind kind;
  bool essential;
};

struct HoleReport {
  std::vector<Hole> holes;
  int real_count() const;
};

class QuiverAtlas;

/// Q_w as a down-closed set of vertices of Q_{w0}.
class MinusculeQuiver {
 public:
  MinusculeQuiver(const QuiverAtlas& atlas, NodeId element, VertexMask members);

  const QuiverAtlas& atlas() const { return *atlas_; }
  const WordQuiver& full() const;
  NodeId element() const { return element_; }
  VertexMask members() const { return members_; }
  bool contains(int v) const { return (members_ >> v) & 1U; }
  int vertex_count() const;

 private:
  const QuiverAtlas* atlas_;
  NodeId element_;
  VertexMask members_;
};

/// The full quiver Q_{w0} of a minuscule poset with the dictionary between
/// its order ideals and the elements of W^P.
class QuiverAtlas {
 public:
  explicit QuiverAtlas(const MinusculePoset& poset);

  const MinusculePoset& poset() const { return *poset_; }
  const WordQuiver& full() const { return full_; }
  VertexMask members_of(NodeId x) const { return members_.at(x); }
  NodeId element_of(VertexMask ideal) const;
  MinusculeQuiver quiver(NodeId x) const { return MinusculeQuiver(*this, x, members_of(x)); }

 private:
  const MinusculePoset* poset_;
  WordQuiver full_;
  std::vector<VertexMask> members_;
  std::vector<std::pair<VertexMask, NodeId>> by_ideal_;
};

WordQuiver build_full_quiver(const MinusculePoset& poset);
MinusculeQuiver embed_subquiver(const QuiverAtlas& atlas, NodeId w);

HoleReport classify_holes(const MinusculeQuiver& q);
bool is_smooth_quiver(const MinusculeQuiver& q);
/// Elements w_i with Q_{w_i} = Q_w minus Q_w^i, one per essential hole i.
std::vector<NodeId> singular_components_quiver(const MinusculeQuiver& q);
/// Every essential hole of Q_w is a vertex of Q_v. Throws std::domain_error
/// unless v <= w.
bool semistable_in_smooth_quiver(const MinusculeQuiver& w, const MinusculeQuiver& v);

/// The minimal element with semistable points for the pair, as a reduced
/// word. Projective spaces (A with r = 1 or r = n-1) are rejected. In type A
/// the element comes from the invariant-monomial search, which can sit
/// strictly below minimal_semistable(r, n).
Word minimal_v_word(Family family, int rank, int weight_index);

std::string quiver_to_dot(const MinusculeQuiver& q);

/// Reduced words reachable from `word` by commutation moves, breadth first,
/// stopping after `limit` words.
std::vector<Word> commutation_class(const RootSystem& system, const Word& word, std::size_t limit);

}  // namespace schubert
