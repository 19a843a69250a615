#include "schubert/minuscule_poset.hpp"

#include <deque>
#include <stdexcept>

namespace schubert {

MinusculePoset::MinusculePoset(RootSystem system, int weight_index)
    : system_(std::move(system)), weight_index_(weight_index) {
  if (!is_minuscule(system_, weight_index)) {
    throw std::invalid_argument("omega_" + std::to_string(weight_index) + " is not minuscule in " +
                                system_.name());
  }
  const int rank = system_.rank();
  Weight top = fundamental_weight(system_, weight_index);
  weights_.push_back(top);
  lengths_.push_back(0);
  parents_.emplace_back();
  index_.emplace(top, 0);

  std::deque<NodeId> queue{0};
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      const Weight& mu = weights_[x];
      if (mu[i] < -1 || mu[i] > 1) throw std::logic_error("orbit weight leaves {-1,0,1}: not minuscule");
      if (mu[i] != 1) continue;
      Weight child = reflect(mu, i, system_);
      auto [it, inserted] = index_.emplace(child, size());
      if (inserted) {
        weights_.push_back(child);
        lengths_.push_back(lengths_[x] + 1);
        parents_.emplace_back();
        queue.push_back(it->second);
      }
      edges_.push_back({x, it->second, i});
      parents_[it->second].push_back(x);
    }
  }

  // BFS order is a linear extension, so each node's down-set is final
  // once its parents have been processed.
  below_.assign(size(), std::vector<char>(size(), 0));
  for (NodeId w = 0; w < size(); ++w) {
    below_[w][w] = 1;
    for (NodeId p : parents_[w])
      for (NodeId u = 0; u < size(); ++u)
        if (below_[p][u]) below_[w][u] = 1;
  }
}

std::optional<NodeId> MinusculePoset::find(const Weight& mu) const {
  auto it = index_.find(mu);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool MinusculePoset::leq(NodeId u, NodeId w) const { return below_.at(w).at(u) != 0; }

std::optional<NodeId> MinusculePoset::try_apply(const Word& word) const {
  Weight mu = weights_[0];
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it > system_.rank()) return std::nullopt;
    if (mu[*it] != 1) return std::nullopt;
    mu = reflect(mu, *it, system_);
  }
  return find(mu);
}

NodeId MinusculePoset::apply(const Word& word) const {
  auto node = try_apply(word);
  if (!node) {
    throw std::invalid_argument("word " + word_to_string(word) + " is not a reduced word of an element of W^P for (" +
                                system_.name() + ", omega_" + std::to_string(weight_index_) + ")");
  }
  return *node;
}

MinusculePoset build_minuscule_poset(const RootSystem& system, int weight_index) {
  return MinusculePoset(system, weight_index);
}

Word canonical_reduced_word(const MinusculePoset& poset, NodeId x) {
  const RootSystem& system = poset.system();
  Word word;
  Weight mu = poset.weight(x);
  while (true) {
    int step = 0;
    for (int i = 1; i <= system.rank(); ++i) {
      if (mu[i] == -1) {
        step = i;
        break;
      }
    }
    if (step == 0) break;
    word.push_back(step);
    mu = reflect(mu, step, system);
  }
  if (static_cast<int>(word.size()) != poset.length(x)) throw std::logic_error("canonical word is not reduced");
  return word;
}

IndexSet indexset_of_node(const MinusculePoset& poset, NodeId x) {
  if (poset.system().family() != Family::A) throw std::invalid_argument("index sets only exist in type A");
  const int n = poset.system().rank() + 1;
  const Weight& mu = poset.weight(x);
  // mu_i = [i in S] - [i+1 in S]; |S| = r fixes the offset.
  const int r = poset.weight_index();
  std::vector<int> member(n + 1, 0);
  for (int base = 0; base <= 1; ++base) {
    member[n] = base;
    for (int i = n - 1; i >= 1; --i) member[i] = mu[i] + member[i + 1];
    int count = 0;
    bool valid = true;
    for (int i = 1; i <= n; ++i) {
      if (member[i] != 0 && member[i] != 1) valid = false;
      count += member[i];
    }
    if (valid && count == r) {
      std::vector<int> entries;
      for (int i = 1; i <= n; ++i)
        if (member[i]) entries.push_back(i);
      return IndexSet(n, std::move(entries));
    }
  }
  throw std::logic_error("weight does not encode an r-subset");
}

NodeId node_of_indexset(const MinusculePoset& poset, const IndexSet& set) {
  if (poset.system().family() != Family::A) throw std::invalid_argument("index sets only exist in type A");
  const int n = poset.system().rank() + 1;
  if (set.n() != n || set.r() != poset.weight_index()) {
    throw std::invalid_argument("index set " + set.to_string() + " is not in I(" +
                                std::to_string(poset.weight_index()) + "," + std::to_string(n) + ")");
  }
  Weight mu{std::vector<int>(n - 1, 0)};
  for (int i = 1; i < n; ++i) mu.coords[i - 1] = int(set.contains(i)) - int(set.contains(i + 1));
  auto node = poset.find(mu);
  if (!node) throw std::logic_error("index set weight missing from orbit");
  return *node;
}

}  // namespace schubert
