#include "schubert/quiver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schubert/grassmannian.hpp"
#include "schubert/smt.hpp"

namespace schubert {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

WordQuiver::WordQuiver(const RootSystem& system, Word word) : system_(system), labels_(std::move(word)) {
  const int n = size();
  if (n > 64) throw std::length_error("quivers are limited to 64 vertices");
  for (int b : labels_)
    if (b < 1 || b > system_.rank()) throw std::invalid_argument("word letter out of range for " + system_.name());
  succ_.assign(n, -1);
  pred_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (labels_[j] == labels_[i]) {
        succ_[i] = j;
        pred_[j] = i;
        break;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    int stop = succ_[i] < 0 ? n : succ_[i];
    for (int j = i + 1; j < stop; ++j)
      if (system_.adjacent(labels_[i], labels_[j])) arrows_.emplace_back(i, j);
  }
  // Arrows increase the position, so a reverse sweep closes the order.
  below_.assign(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    below_[i] = bit(i);
    for (auto [s, t] : arrows_)
      if (s == i) below_[i] |= below_[t];
  }
  above_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((below_[j] >> i) & 1U) above_[i] |= bit(j);
}

std::optional<int> WordQuiver::successor(int v) const {
  return succ_[v] < 0 ? std::nullopt : std::optional<int>(succ_[v]);
}

std::optional<int> WordQuiver::predecessor(int v) const {
  return pred_[v] < 0 ? std::nullopt : std::optional<int>(pred_[v]);
}

bool WordQuiver::pairs(int i, int j) const { return i != j && system_.cartan(labels_[i], labels_[j]) != 0; }

static std::vector<int> occurrence_map(const WordQuiver& from, const WordQuiver& to) {
  std::map<int, std::vector<int>> slots;
  for (int v = 0; v < to.size(); ++v) slots[to.label(v)].push_back(v);
  std::map<int, std::size_t> used;
  std::vector<int> image(from.size(), -1);
  for (int v = 0; v < from.size(); ++v) {
    auto& list = slots[from.label(v)];
    std::size_t k = used[from.label(v)]++;
    if (k >= list.size()) return {};
    image[v] = list[k];
  }
  return image;
}

bool quivers_isomorphic(const WordQuiver& a, const WordQuiver& b) {
  if (a.size() != b.size() || a.arrows().size() != b.arrows().size()) return false;
  std::vector<int> image = occurrence_map(a, b);
  if (static_cast<int>(image.size()) != a.size()) return false;
  std::set<std::pair<int, int>> target(b.arrows().begin(), b.arrows().end());
  for (auto [s, t] : a.arrows())
    if (!target.count({image[s], image[t]})) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.geq(j, i) != b.geq(image[j], image[i])) return false;
  return true;
}

int HoleReport::real_count() const {
  return static_cast<int>(std::count_if(holes.begin(), holes.end(), [](const Hole& h) { return h.kind == HoleKind::Real; }));
}

MinusculeQuiver::MinusculeQuiver(const QuiverAtlas& atlas, NodeId element, VertexMask members)
    : atlas_(&atlas), element_(element), members_(members) {}

const WordQuiver& MinusculeQuiver::full() const { return atlas_->full(); }

int MinusculeQuiver::vertex_count() const { return std::popcount(members_); }

QuiverAtlas::QuiverAtlas(const MinusculePoset& poset)
    : poset_(&poset), full_(build_full_quiver(poset)), members_(poset.size(), 0) {
  const int n = full_.size();
  // Order ideals (down-closed sets) grown one addable vertex at a time.
  std::set<VertexMask> seen{0};
  std::deque<VertexMask> queue{0};
  while (!queue.empty()) {
    VertexMask ideal = queue.front();
    queue.pop_front();
    Word word;
    for (int v = 0; v < n; ++v)
      if ((ideal >> v) & 1U) word.push_back(full_.label(v));
    auto node = poset.try_apply(word);
    if (!node) throw std::logic_error("order ideal of Q_w0 does not spell an element of W^P");
    by_ideal_.emplace_back(ideal, *node);
    members_[*node] = ideal;
    for (int v = 0; v < n; ++v) {
      if ((ideal >> v) & 1U) continue;
      VertexMask lower = full_.below(v) & ~bit(v);
      if ((lower & ~ideal) != 0) continue;
      VertexMask next = ideal | bit(v);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (static_cast<int>(by_ideal_.size()) != poset.size()) {
    throw std::logic_error("ideal count of Q_w0 differs from |W^P|");
  }
  std::sort(by_ideal_.begin(), by_ideal_.end());
  for (NodeId x = 0; x < poset.size(); ++x) {
    if (std::popcount(members_[x]) != poset.length(x)) throw std::logic_error("ideal size differs from length");
  }
}

NodeId QuiverAtlas::element_of(VertexMask ideal) const {
  auto it = std::lower_bound(by_ideal_.begin(), by_ideal_.end(), std::make_pair(ideal, NodeId{-1}));
  if (it == by_ideal_.end() || it->first != ideal) throw std::invalid_argument("vertex set is not an order ideal of Q_w0");
  return it->second;
}

WordQuiver build_full_quiver(const MinusculePoset& poset) {
  return WordQuiver(poset.system(), canonical_reduced_word(poset, poset.bottom()));
}

MinusculeQuiver embed_subquiver(const QuiverAtlas& atlas, NodeId w) { return atlas.quiver(w); }

HoleReport classify_holes(const MinusculeQuiver& q) {
  const WordQuiver& full = q.full();
  HoleReport report;
  VertexMask real = 0;
  for (int i = 0; i < full.size(); ++i) {
    if (q.contains(i)) {
      auto p = full.predecessor(i);
      if (p && q.contains(*p)) continue;
      int pairing = 0;
      for (int j = 0; j < full.size(); ++j)
        if (q.contains(j) && full.geq(j, i) && full.pairs(i, j)) ++pairing;
      if (pairing == 2) {
        report.holes.push_back({i, full.label(i), HoleKind::Real, false});
        real |= bit(i);
      }
    } else if (!full.successor(i)) {
      report.holes.push_back({i, full.label(i), HoleKind::Virtual, false});
    }
  }
  for (Hole& h : report.holes) {
    if (h.kind != HoleKind::Real) continue;
    VertexMask upper = full.above(h.vertex) & q.members() & ~bit(h.vertex);
    h.essential = (upper & real) == 0;
  }
  return report;
}

bool is_smooth_quiver(const MinusculeQuiver& q) { return classify_holes(q).real_count() == 0; }

std::vector<NodeId> singular_components_quiver(const MinusculeQuiver& q) {
  std::vector<NodeId> out;
  for (const Hole& h : classify_holes(q).holes) {
    if (!h.essential) continue;
    VertexMask rest = q.members() & ~q.full().above(h.vertex);
    out.push_back(q.atlas().element_of(rest));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool semistable_in_smooth_quiver(const MinusculeQuiver& w, const MinusculeQuiver& v) {
  if (&w.atlas() != &v.atlas()) throw std::invalid_argument("quivers come from different atlases");
  if (!w.atlas().poset().leq(v.element(), w.element())) {
    throw std::domain_error("semistable locus is empty: v is not below w");
  }
  for (const Hole& h : classify_holes(w).holes)
    if (h.essential && !v.contains(h.vertex)) return false;
  return true;
}

static Word d_spin_word(int n) {
  // w_i = tau_i s_{n-1} or tau_i s_n, tau_i = s_{2i-1} ... s_{n-2};
  // v = w_k ... w_1. For even n this lands in the omega_{n-1} orbit, for
  // odd n in the omega_n orbit.
  const int factors = n / 2 + (n % 2);
  Word word;
  for (int i = factors; i >= 1; --i) {
    for (int a = 2 * i - 1; a <= n - 2; ++a) word.push_back(a);
    bool odd_i = i % 2 == 1;
    bool ends_low = (n % 2 == 0) ? odd_i : !odd_i;
    word.push_back(ends_low ? n - 1 : n);
  }
  return word;
}

static Word flip_word(const RootSystem& system, Word word) {
  for (int& a : word) a = diagram_flip(system, a);
  return word;
}

Word minimal_v_word(Family family, int rank, int weight_index) {
  RootSystem system(family, rank);
  if (!is_minuscule(system, weight_index)) {
    throw std::invalid_argument("omega_" + std::to_string(weight_index) + " is not minuscule in " + system.name());
  }
  switch (family) {
    case Family::A: {
      const int n = rank + 1;
      if (weight_index == 1 || weight_index == n - 1) {
        throw std::invalid_argument("projective spaces (r = 1 or r = n-1) are excluded");
      }
      // The a_i closed form is not always minimal; take the minimum found by
      // the invariant-monomial search instead.
      auto minimal = minimal_semistable_oracle(weight_index, n);
      if (minimal.size() != 1) throw std::logic_error("expected a unique minimal semistable element");
      MinusculePoset poset(system, weight_index);
      return canonical_reduced_word(poset, node_of_indexset(poset, minimal.front()));
    }
    case Family::D: {
      const int n = rank;
      if (weight_index == 1) {
        Word word;
        for (int a = n; a >= 1; --a) word.push_back(a);
        return word;
      }
      Word word = d_spin_word(n);
      int native = n % 2 == 0 ? n - 1 : n;
      return weight_index == native ? word : flip_word(system, word);
    }
    case Family::E6: {
      Word word{5, 6, 1, 3, 4, 5, 2, 4, 3, 1};
      return weight_index == 1 ? word : flip_word(system, word);
    }
    case Family::E7:
      return {5, 2, 4, 3, 7, 6, 5, 4, 1, 2, 3, 4, 5, 6, 7};
    case Family::E8:
      break;
  }
  throw std::invalid_argument("no minuscule weights in " + system.name());
}

std::string quiver_to_dot(const MinusculeQuiver& q) {
  const WordQuiver& full = q.full();
  VertexMask real = 0;
  for (const Hole& h : classify_holes(q).holes)
    if (h.kind == HoleKind::Real) real |= bit(h.vertex);
  std::ostringstream out;
  out << "digraph Q {\n";
  for (int v = 0; v < full.size(); ++v) {
    out << "  v" << v << " [label=\"" << full.label(v) << "\"";
    out << ", shape=" << (((real >> v) & 1U) ? "doublecircle" : "circle");
    out << ", style=" << (q.contains(v) ? "solid" : "dotted") << "];\n";
  }
  for (auto [s, t] : full.arrows()) {
    bool solid = q.contains(s) && q.contains(t);
    out << "  v" << s << " -> v" << t << " [style=" << (solid ? "solid" : "dotted") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Word> commutation_class(const RootSystem& system, const Word& word, std::size_t limit) {
  std::vector<Word> out{word};
  std::set<Word> seen{word};
  for (std::size_t head = 0; head < out.size() && out.size() < limit; ++head) {
    Word current = out[head];
    for (std::size_t k = 0; k + 1 < current.size(); ++k) {
      if (current[k] == current[k + 1] || system.adjacent(current[k], current[k + 1])) continue;
      Word next = current;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) {
        out.push_back(next);
        if (out.size() >= limit) break;
      }
    }
  }
  return out;
}

}  // namespace schubert
