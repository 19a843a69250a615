#include "schubert/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "schubert/criteria.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/oracle.hpp"
#include "schubert/quiver.hpp"
#include "schubert/smt.hpp"

namespace schubert::verify {

void SuiteResult::record(bool ok, const std::string& witness) {
  ++checks;
  if (ok) return;
  if (failures == 0) first_failure = witness;
  ++failures;
}

namespace {

int option_or(const SuiteOptions& options, int fallback) {
  return options.exhaustive_n > 0 ? options.exhaustive_n : fallback;
}

std::string gr_name(int r, int n) { return "Gr(" + std::to_string(r) + "," + std::to_string(n) + ")"; }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

SuiteResult golden_sl7() {
  SuiteResult result{"golden-sl7"};
  const Permutation v = word_to_perm({4, 5, 6, 3, 2, 1}, 7);
  result.record(v == Permutation({5, 1, 2, 3, 6, 7, 4}), "v = s4s5s6s3s2s1 is " + v.to_string());
  const Word w1{6, 5, 4, 3, 2};
  const Word w2{5, 4, 3, 2};
  struct Step {
    Word word;
    std::int64_t dim;
  };
  // Extensions of v along the worked example; the last three steps act on
  // w' = (5,6,7,4,3,2,1).
  const std::vector<Step> steps{
      {{}, 1},
      {{2}, 1},
      {{3, 2}, 1},
      {{4, 3, 2}, 1},
      {{5, 4, 3, 2}, 1},
      {w1, 4},
      {concat({{2}, w1}), 4},
      {concat({{3, 2}, w1}), 4},
      {concat({{4, 3, 2}, w1}), 4},
      {concat({{5, 4, 3, 2}, w1}), 4},
      {concat({{2}, w2, w1}), 4},
      {concat({{3, 2}, w2, w1}), 4},
      {concat({{4, 3, 2}, w2, w1}), 4},
      {concat({{1}, {4, 3, 2}, w2, w1}), 5},
      {concat({{2, 1}, {4, 3, 2}, w2, w1}), 5},
      {concat({{1, 2, 1}, {4, 3, 2}, w2, w1}), 6},
  };
  for (const Step& step : steps) {
    Permutation w = extend(v, step.word);
    std::int64_t dim = invariant_dimension(w, 1);
    result.record(dim == step.dim, word_to_string(step.word) + " v = " + w.to_string() + ": dim " +
                                       std::to_string(dim) + ", expected " + std::to_string(step.dim));
  }
  result.record(extend(v, w1) == Permutation({5, 2, 3, 6, 7, 4, 1}), "s6s5s4s3s2 v");
  result.record(extend(v, concat({{4, 3, 2}, w2, w1})) == Permutation({5, 6, 7, 4, 3, 2, 1}), "w'");
  result.record(extend(v, concat({{1, 2, 1}, {4, 3, 2}, w2, w1})) == Permutation::longest(7), "w0");
  result.notes.push_back("16 dimension checks along the chain (five of dimension 1, eight of 4, two of 5, one of 6)");
  return result;
}

SuiteResult lemma_tables(const SuiteOptions& options) {
  SuiteResult result{"lemma-tables"};
  const int top = option_or(options, 7);
  for (int n = 4; n <= top; ++n) {
    for (FamilyCase c : {FamilyCase::A, FamilyCase::A2, FamilyCase::B}) {
      for (int i : family_parameters(c, n)) {
        std::int64_t last_length = -1;
        for (const DimensionRow& row : dimension_table(c, n, i)) {
          std::string where = "case " + to_string(c) + " n=" + std::to_string(n) + " i=" + std::to_string(i) +
                              " (k,j)=(" + std::to_string(row.k) + "," + std::to_string(row.j) + ") " +
                              row.element.to_string();
          result.record(row.match, where + ": dim " + std::to_string(row.computed) + ", predicted " +
                                       std::to_string(row.predicted));
          if (row.element.length() < last_length) result.record(false, where + ": length decreases along the family");
          last_length = row.element.length();
        }
      }
    }
    result.record(family_element(FamilyCase::A2, n, n - 1, n - 2, 2).length() > 0, "A2 top element");
    if (n >= 4) {
      result.record(family_element(FamilyCase::A, n, 1, n - 1, 1) == Permutation::longest(n),
                    "v_{n-1,1} = w0 for n=" + std::to_string(n));
    }
  }
  return result;
}

SuiteResult minimal_borel(const SuiteOptions& options) {
  SuiteResult result{"minimal-borel"};
  const int top = option_or(options, 5);
  for (int n = 3; n <= top; ++n) {
    oracle::BruhatTable table(n);
    std::vector<Permutation> hits;
    for (const Permutation& w : table.elements())
      if (oracle::brute_invariant_dimension(w, 1, table) > 0) hits.push_back(w);
    std::vector<Permutation> minimal;
    for (const Permutation& w : hits) {
      bool is_min = std::none_of(hits.begin(), hits.end(), [&](const Permutation& u) { return u != w && table.leq(u, w); });
      if (is_min) minimal.push_back(w);
    }
    std::sort(minimal.begin(), minimal.end());
    auto families = minimal_semistable_borel(n);
    std::string listing;
    for (const Permutation& w : minimal) listing += " " + w.to_string();
    result.record(minimal == families, "S_" + std::to_string(n) + ": brute-force minimal set" + listing);
    result.notes.push_back("S_" + std::to_string(n) + ": " + std::to_string(minimal.size()) + " minimal elements");
  }
  return result;
}

SuiteResult hilbert(const SuiteOptions& options) {
  SuiteResult result{"hilbert"};
  const int top = option_or(options, 6);
  for (int n = 4; n <= top; ++n) {
    const int max_m = n <= 5 ? 3 : 2;
    int outside = 0;
    for (const Permutation& w : alpha0_lifts(n)) {
      if (invariant_dimension(w, 1) == 0) continue;
      NormalityReport report = projective_normality_check(w, max_m);
      for (const DegreeCheck& d : report.degrees) {
        result.record(d.pass, w.to_string() + " t=" + std::to_string(report.t) + " m=" + std::to_string(d.m) +
                                  ": dim " + std::to_string(d.dimension) + ", expected " + std::to_string(d.expected));
      }
      if (!report.family_element) {
        ++outside;
        if (!report.pass) result.notes.push_back("failure outside the families: " + w.to_string());
      }
    }
    result.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(outside) +
                           " lifts with t >= 1 are not family elements");
  }
  return result;
}

SuiteResult cross_smooth(const SuiteOptions& options) {
  SuiteResult result{"cross-smooth"};
  const int top = option_or(options, 7);
  for (int n = 2; n <= std::max(top, 8); ++n) {
    for (int r = 1; r < n; ++r) {
      bool in_box = r <= 4 && n - r <= 4;
      if (n > top && !in_box) continue;
      MinusculeSetting setting(Family::A, n - 1, r);
      for (const IndexSet& w : all_index_sets(r, n)) {
        BoxPartition mu = indexset_to_partition(w);
        bool rectangle = is_smooth(mu);
        bool no_components = singular_components(mu).empty();
        bool quiver = is_smooth_quiver(setting.atlas().quiver(setting.node(w)));
        result.record(rectangle == no_components && no_components == quiver,
                      gr_name(r, n) + " " + w.to_string() + " mu=" + mu.to_string());
      }
    }
  }
  return result;
}

SuiteResult cross_singular(const SuiteOptions& options) {
  SuiteResult result{"cross-singular"};
  const int top = option_or(options, 7);
  for (int n = 2; n <= top; ++n) {
    for (int r = 1; r < n; ++r) {
      MinusculeSetting setting(Family::A, n - 1, r);
      for (const IndexSet& w : all_index_sets(r, n)) {
        std::vector<BoxPartition> from_quiver;
        for (NodeId x : singular_components_quiver(setting.atlas().quiver(setting.node(w)))) {
          from_quiver.push_back(indexset_to_partition(setting.index_set(x)));
        }
        std::sort(from_quiver.begin(), from_quiver.end());
        auto expected = singular_components(indexset_to_partition(w));
        result.record(from_quiver == expected, gr_name(r, n) + " " + w.to_string());
        auto partition_side = e_sing(setting, setting.node(w), Backend::Partition);
        auto quiver_side = e_sing(setting, setting.node(w), Backend::Quiver);
        result.record(partition_side == quiver_side, gr_name(r, n) + " " + w.to_string() + ": e_sing backends");
      }
    }
  }
  return result;
}

void lemma34_type_a(SuiteResult& result, int top) {
  long formula_disagreements = 0;
  for (int n = 3; n <= top; ++n) {
    for (int r = 1; r < n; ++r) {
      if (std::gcd(r, n) != 1) continue;
      MinusculeSetting setting(Family::A, n - 1, r);
      const NodeId v = *setting.v();
      const IndexSet v_set = setting.index_set(v);
      const auto qv = setting.atlas().quiver(v);
      for (const IndexSet& w : all_index_sets(r, n)) {
        NodeId x = setting.node(w);
        if (!componentwise_leq(v_set, w)) continue;
        bool proposition = semistable_in_smooth(w, v_set);
        bool quiver = semistable_in_smooth_quiver(setting.atlas().quiver(x), qv);
        bool lemma_quiver = lemma34_verdict(setting, x, Backend::Quiver).verdict;
        bool lemma_partition = lemma34_verdict(setting, x, Backend::Partition).verdict;
        result.record(proposition == quiver && quiver == lemma_quiver && lemma_quiver == lemma_partition,
                      gr_name(r, n) + " w=" + w.to_string() + " v=" + v_set.to_string());
        const IndexSet formula = minimal_semistable(r, n);
        if (componentwise_leq(formula, w) && semistable_in_smooth(w, formula) != proposition) ++formula_disagreements;
      }
    }
  }
  result.notes.push_back("closed-form v gives a different semistable-in-smooth verdict in " +
                         std::to_string(formula_disagreements) + " cases");
}

void lemma34_minuscule(SuiteResult& result, Family family, int rank, int weight) {
  MinusculeSetting setting(family, rank, weight);
  const NodeId v = *setting.v();
  const auto qv = setting.atlas().quiver(v);
  for (NodeId x = 0; x < setting.poset().size(); ++x) {
    if (!setting.poset().leq(v, x)) continue;
    bool quiver = semistable_in_smooth_quiver(setting.atlas().quiver(x), qv);
    bool lemma = lemma34_verdict(setting, x).verdict;
    result.record(quiver == lemma, setting.system().name() + " omega_" + std::to_string(weight) + " w=" +
                                       setting.describe(x));
  }
}

SuiteResult lemma34(const SuiteOptions& options) {
  SuiteResult result{"lemma34"};
  const std::string& family = options.family;
  const bool all = family == "all";
  if (all || family == "A") lemma34_type_a(result, option_or(options, 7));
  if (all || family == "D") {
    for (int n = 4; n <= std::max(6, options.exhaustive_n); ++n)
      for (int weight : {1, n - 1, n}) lemma34_minuscule(result, Family::D, n, weight);
  }
  if (all || family == "E6") {
    lemma34_minuscule(result, Family::E6, 6, 1);
    lemma34_minuscule(result, Family::E6, 6, 6);
  }
  if (all || family == "E7") lemma34_minuscule(result, Family::E7, 7, 7);
  if (result.checks == 0) throw std::invalid_argument("unknown family '" + family + "' (expected A, D, E6, E7 or all)");
  return result;
}

SuiteResult minimal_singular(const SuiteOptions& options) {
  SuiteResult result{"minimal-singular"};
  const int top = option_or(options, 8);
  for (int n = 4; n <= top; ++n) {
    for (int r = 2; r <= n - 2; ++r) {
      if (std::gcd(r, n) != 1) continue;
      MinusculeSetting setting(Family::A, n - 1, r);
      NodeId v = *setting.v();
      int holes = classify_holes(setting.atlas().quiver(v)).real_count();
      result.record(holes >= 1, gr_name(r, n) + " v=" + setting.index_set(v).to_string() + " has no real hole");
      NodeId formula = *setting.formula_v();
      if (formula != v && classify_holes(setting.atlas().quiver(formula)).real_count() == 0) {
        result.notes.push_back(gr_name(r, n) + ": closed-form element " + setting.index_set(formula).to_string() +
                               " is smooth; the oracle minimum " + setting.index_set(v).to_string() + " is not");
      }
    }
  }
  auto check = [&](Family family, int rank, int weight) {
    MinusculeSetting setting(family, rank, weight);
    NodeId v = *setting.v();
    auto report = classify_holes(setting.atlas().quiver(v));
    result.record(report.real_count() >= 1, setting.system().name() + " omega_" + std::to_string(weight) +
                                                " v=" + setting.describe(v) + " has no real hole");
    return report;
  };
  for (int n = 4; n <= 6; ++n) {
    auto report = check(Family::D, n, 1);
    bool at_fork = std::any_of(report.holes.begin(), report.holes.end(),
                               [&](const Hole& h) { return h.kind == HoleKind::Real && h.label == n - 2; });
    result.record(at_fork, "D" + std::to_string(n) + " omega_1: no real hole labelled n-2");
    check(Family::D, n, n - 1);
    check(Family::D, n, n);
  }
  check(Family::E6, 6, 1);
  check(Family::E6, 6, 6);
  check(Family::E7, 7, 7);
  return result;
}

struct PosetSpec {
  Family family;
  int rank;
  int weight;
};

std::vector<PosetSpec> small_posets() {
  std::vector<PosetSpec> out;
  for (int n = 2; n <= 8; ++n)
    for (int r = 1; r < n; ++r)
      if (binomial(n, r) <= 56) out.push_back({Family::A, n - 1, r});
  for (int n = 4; n <= 6; ++n)
    for (int weight : {1, n - 1, n}) out.push_back({Family::D, n, weight});
  out.push_back({Family::E6, 6, 1});
  out.push_back({Family::E6, 6, 6});
  out.push_back({Family::E7, 7, 7});
  return out;
}

SuiteResult quiver_words() {
  SuiteResult result{"quiver-words"};
  constexpr std::size_t kWordsPerElement = 48;
  long words = 0;
  for (const PosetSpec& spec : small_posets()) {
    RootSystem system(spec.family, spec.rank);
    MinusculePoset poset(system, spec.weight);
    QuiverAtlas atlas(poset);
    std::string where = system.name() + " omega_" + std::to_string(spec.weight);
    result.record(poset.size() == oracle::weyl_dimension(system, spec.weight), where + ": orbit size");
    result.record(atlas.full().size() == oracle::flag_dimension(system, spec.weight), where + ": full quiver size");
    for (NodeId x = 0; x < poset.size(); ++x) {
      const Word canonical = canonical_reduced_word(poset, x);
      const WordQuiver reference(system, canonical);
      Word member_word;
      for (int v = 0; v < atlas.full().size(); ++v)
        if ((atlas.members_of(x) >> v) & 1U) member_word.push_back(atlas.full().label(v));
      result.record(quivers_isomorphic(reference, WordQuiver(system, member_word)),
                    where + " " + word_to_string(canonical) + ": subquiver of Q_w0 differs");
      for (const Word& word : commutation_class(system, canonical, kWordsPerElement)) {
        ++words;
        bool same_element = poset.try_apply(word) == std::optional<NodeId>(x);
        result.record(same_element && quivers_isomorphic(reference, WordQuiver(system, word)),
                      where + " " + word_to_string(canonical) + " vs " + word_to_string(word));
      }
    }
  }
  result.notes.push_back(std::to_string(words) + " reduced words compared");
  return result;
}

SuiteResult greedy_oracle(const SuiteOptions& options) {
  SuiteResult result{"greedy-oracle"};
  const int top = option_or(options, 5);
  for (int n = 2; n <= top; ++n) {
    oracle::BruhatTable table(n);
    for (int m : {1, 2}) {
      auto tableaux = oracle::all_tableaux(n, m);
      for (const Permutation& w : table.elements()) {
        for (const AlphaZeroTableau& t : tableaux) {
          bool greedy = is_standard_on(t, w);
          bool exhaustive = oracle::exhaustive_standard(t, w, table);
          result.record(greedy == exhaustive, w.to_string() + " " + t.to_string());
        }
      }
    }
  }
  return result;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"golden-sl7",       "lemma-tables", "minimal-borel", "hilbert",      "cross-smooth",
          "cross-singular",   "lemma34",      "minimal-singular", "quiver-words", "greedy-oracle"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "golden-sl7") return golden_sl7();
  if (name == "lemma-tables") return lemma_tables(options);
  if (name == "minimal-borel") return minimal_borel(options);
  if (name == "hilbert") return hilbert(options);
  if (name == "cross-smooth") return cross_smooth(options);
  if (name == "cross-singular") return cross_singular(options);
  if (name == "lemma34") return lemma34(options);
  if (name == "minimal-singular") return minimal_singular(options);
  if (name == "quiver-words") return quiver_words();
  if (name == "greedy-oracle") return greedy_oracle(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace schubert::verify
