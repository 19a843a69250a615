#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/grassmannian.hpp"
#include "schubert/minuscule_poset.hpp"
#include "schubert/quiver.hpp"

namespace schubert {

/// A minuscule flag variety G/P_omega together with its quiver atlas and the
/// minimal element v with semistable points for L_omega.
class MinusculeSetting {
 public:
  MinusculeSetting(Family family, int rank, int weight_index);
  MinusculeSetting(const MinusculeSetting&) = delete;
  MinusculeSetting& operator=(const MinusculeSetting&) = delete;

  const RootSystem& system() const { return poset_->system(); }
  const MinusculePoset& poset() const { return *poset_; }
  const QuiverAtlas& atlas() const { return *atlas_; }
  bool type_a() const { return system().family() == Family::A; }
  /// (r, n) of Gr(r, n) in type A.
  int r() const { return poset_->weight_index(); }
  int n() const { return system().rank() + 1; }

  /// Closed-form minimal element: the a_i formula in type A, the explicit
  /// words in types D and E.
  std::optional<NodeId> formula_v() const { return formula_v_; }
  /// Type A only: the minimal element found by the invariant-monomial search.
  std::optional<NodeId> oracle_v() const;
  /// The element used by the criteria: oracle_v in type A, formula_v otherwise.
  std::optional<NodeId> v() const;

  NodeId node(const IndexSet& w) const { return node_of_indexset(*poset_, w); }
  IndexSet index_set(NodeId x) const { return indexset_of_node(*poset_, x); }
  std::string describe(NodeId x) const;

 private:
  std::unique_ptr<MinusculePoset> poset_;
  std::unique_ptr<QuiverAtlas> atlas_;
  std::optional<NodeId> formula_v_;
  mutable std::optional<std::optional<NodeId>> oracle_v_;
};

enum class Backend { Partition, Quiver };

/// Maximal singular T-fixed points of X_P(w): the tops of the singular
/// components. The partition backend is available in type A only.
std::vector<NodeId> e_sing(const MinusculeSetting& setting, NodeId w, Backend backend = Backend::Quiver);

/// {v} if v <= w, else empty.
std::vector<NodeId> e_ss(const MinusculeSetting& setting, NodeId w);

struct CriteriaReport {
  std::vector<NodeId> e_ss;
  std::vector<NodeId> e_sing;
  std::vector<std::pair<NodeId, NodeId>> comparable_pairs;  // (w1 in e_sing, w2 in e_ss), w1 >= w2
  bool verdict = true;
  std::optional<NodeId> formula_v;
  std::optional<NodeId> oracle_v;
  std::vector<std::string> warnings;
};

/// The semistable locus of X_P(w) lies in its smooth locus iff no element of
/// E^sing_w is above an element of E^ss_w.
CriteriaReport lemma34_verdict(const MinusculeSetting& setting, NodeId w, Backend backend = Backend::Quiver);

}  // namespace schubert
