#include "schubert/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schubert/smt.hpp"

namespace schubert {

MinusculeSetting::MinusculeSetting(Family family, int rank, int weight_index)
    : poset_(std::make_unique<MinusculePoset>(RootSystem(family, rank), weight_index)),
      atlas_(std::make_unique<QuiverAtlas>(*poset_)) {
  if (type_a()) {
    if (r() >= 1 && r() <= n() - 1) formula_v_ = node(minimal_semistable(r(), n()));
  } else if (family != Family::E8) {
    formula_v_ = poset_->apply(minimal_v_word(family, rank, weight_index));
  }
}

std::optional<NodeId> MinusculeSetting::oracle_v() const {
  if (!type_a()) return std::nullopt;
  if (!oracle_v_) {
    auto minimal = minimal_semistable_oracle(r(), n());
    if (minimal.size() > 1) throw std::logic_error("semistability oracle found several minimal elements");
    oracle_v_ = minimal.empty() ? std::optional<NodeId>() : std::optional<NodeId>(node(minimal.front()));
  }
  return *oracle_v_;
}

std::optional<NodeId> MinusculeSetting::v() const { return type_a() ? oracle_v() : formula_v_; }

std::string MinusculeSetting::describe(NodeId x) const {
  if (type_a()) return index_set(x).to_string();
  return word_to_string(canonical_reduced_word(*poset_, x));
}

std::vector<NodeId> e_sing(const MinusculeSetting& setting, NodeId w, Backend backend) {
  if (backend == Backend::Quiver) return singular_components_quiver(setting.atlas().quiver(w));
  if (!setting.type_a()) throw std::invalid_argument("the partition backend needs type A");
  std::vector<NodeId> out;
  for (const BoxPartition& mu : singular_components(indexset_to_partition(setting.index_set(w)))) {
    out.push_back(setting.node(partition_to_indexset(mu)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> e_ss(const MinusculeSetting& setting, NodeId w) {
  auto v = setting.v();
  if (v && setting.poset().leq(*v, w)) return {*v};
  return {};
}

CriteriaReport lemma34_verdict(const MinusculeSetting& setting, NodeId w, Backend backend) {
  CriteriaReport report;
  report.formula_v = setting.formula_v();
  report.oracle_v = setting.oracle_v();
  report.e_ss = e_ss(setting, w);
  report.e_sing = e_sing(setting, w, backend);
  for (NodeId w1 : report.e_sing)
    for (NodeId w2 : report.e_ss)
      if (setting.poset().leq(w2, w1)) report.comparable_pairs.emplace_back(w1, w2);
  report.verdict = report.comparable_pairs.empty();
  if (report.e_ss.empty()) report.warnings.push_back("semistable locus empty");
  if (setting.type_a()) {
    if (std::gcd(setting.r(), setting.n()) != 1) {
      report.warnings.push_back("gcd(r,n) != 1: stability != semistability not guaranteed");
    }
    if (report.formula_v != report.oracle_v) {
      std::string formula = report.formula_v ? setting.describe(*report.formula_v) : "none";
      std::string oracle = report.oracle_v ? setting.describe(*report.oracle_v) : "none";
      report.warnings.push_back("closed-form minimal element " + formula + " differs from the oracle minimum " + oracle);
    }
  }
  return report;
}

}  // namespace schubert
