#pragma once

#include <map>
#include <optional>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/root_data.hpp"

namespace schubert {

using NodeId = int;

/// Covering step mu -> s_label(mu) = mu - alpha_label, going down in the orbit.
struct PosetEdge {
  NodeId from;
  NodeId to;
  int label;
};

/// The orbit W.omega of a minuscule fundamental weight, which models W^P:
/// node x corresponds to the minimal coset representative sending omega to
/// the node's weight, its length is the distance from omega, and the Bruhat
/// order is reachability along downward edges.
class MinusculePoset {
 public:
  MinusculePoset(RootSystem system, int weight_index);

  const RootSystem& system() const { return system_; }
  int weight_index() const { return weight_index_; }
  int size() const { return static_cast<int>(weights_.size()); }

  NodeId top() const { return 0; }
  NodeId bottom() const { return size() - 1; }

  const Weight& weight(NodeId x) const { return weights_.at(x); }
  int length(NodeId x) const { return lengths_.at(x); }
  const std::vector<PosetEdge>& edges() const { return edges_; }
  std::optional<NodeId> find(const Weight& mu) const;

  /// Bruhat order u <= w.
  bool leq(NodeId u, NodeId w) const;

  /// Node of the element s_{a_1} ... s_{a_k}, i.e. the weight obtained by
  /// applying a_k first. Returns nullopt unless every step lowers the weight
  /// (that is, unless the word is a reduced word of an element of W^P).
  std::optional<NodeId> try_apply(const Word& word) const;
  NodeId apply(const Word& word) const;

 private:
  RootSystem system_;
  int weight_index_;
  std::vector<Weight> weights_;
  std::vector<int> lengths_;
  std::vector<PosetEdge> edges_;
  std::vector<std::vector<NodeId>> parents_;
  std::map<Weight, NodeId> index_;
  std::vector<std::vector<char>> below_;  // below_[w][u] <=> u <= w
};

MinusculePoset build_minuscule_poset(const RootSystem& system, int weight_index);

/// Reduced word read along a shortest path from the node up to omega,
/// taking the lowest available simple root at every step.
Word canonical_reduced_word(const MinusculePoset& poset, NodeId x);

// Type A dictionary: in (A_{n-1}, omega_r) the node with weight
// sum_{j in S} eps_j corresponds to the index set S.
IndexSet indexset_of_node(const MinusculePoset& poset, NodeId x);
NodeId node_of_indexset(const MinusculePoset& poset, const IndexSet& set);

}  // namespace schubert
