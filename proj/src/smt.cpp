#include "schubert/smt.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace schubert {

std::string AlphaZeroTableau::to_string() const {
  std::string out = "short=(";
  for (std::size_t j = 0; j < short_rows.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(short_rows[j]);
  }
  out += ") long=(";
  for (std::size_t j = 0; j < long_rows.size(); ++j) {
    if (j) out += ',';
    out += long_rows[j].to_string();
  }
  return out + ")";
}

AlphaZeroTableau tableau_from_missing(int n, std::vector<int> short_rows, const std::vector<int>& missing) {
  AlphaZeroTableau t;
  t.n = n;
  t.short_rows = std::move(short_rows);
  for (int c : t.short_rows)
    if (c < 1 || c > n) throw std::invalid_argument("short row entry out of range 1..n");
  for (int c : missing) t.long_rows.push_back(IndexSet(n, {c}).complement());
  if (t.long_rows.size() != t.short_rows.size()) throw std::invalid_argument("shape m*alpha_0 needs m rows of each length");
  return t;
}

TableauWeight tableau_weight(const AlphaZeroTableau& t) {
  TableauWeight weight{std::vector<int>(t.n, 0)};
  for (int l : t.short_rows) ++weight.counts[l - 1];
  for (const IndexSet& row : t.long_rows)
    for (int v : row.entries()) ++weight.counts[v - 1];
  return weight;
}

bool is_invariant(const AlphaZeroTableau& t) {
  const auto counts = tableau_weight(t).counts;
  return std::all_of(counts.begin(), counts.end(), [&](int c) { return c == counts.front(); });
}

bool is_young_on(const AlphaZeroTableau& t, const Permutation& w) {
  if (w.size() != t.n) throw std::invalid_argument("tableau and permutation disagree on n");
  for (int l : t.short_rows)
    if (l > w(1)) return false;
  IndexSet top = pi_projection(w, t.n - 1);
  for (const IndexSet& row : t.long_rows)
    if (!componentwise_leq(row, top)) return false;
  return true;
}

std::optional<Permutation> max_lift_below(const Permutation& bound, const IndexSet& tau) {
  const int n = bound.size();
  const int d = tau.r();
  if (tau.n() != n) throw std::invalid_argument("row and permutation disagree on n");
  std::vector<std::vector<int>> bound_prefix(n + 1);
  for (int p = 1; p <= n; ++p) {
    bound_prefix[p] = bound_prefix[p - 1];
    bound_prefix[p].insert(std::upper_bound(bound_prefix[p].begin(), bound_prefix[p].end(), bound(p)), bound(p));
  }
  std::vector<int> line(n);
  std::vector<char> used(n + 1, 0);
  std::vector<int> prefix;
  // Bruhat order refines the lexicographic order, so the lexicographically
  // largest feasible element is the maximum when one exists.
  std::function<bool(int)> search = [&](int p) -> bool {
    if (p > n) return true;
    for (int value = n; value >= 1; --value) {
      if (used[value] || tau.contains(value) != (p <= d)) continue;
      prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), value), value);
      bool ok = true;
      for (int k = 0; k < p && ok; ++k) ok = prefix[k] <= bound_prefix[p][k];
      if (ok) {
        used[value] = 1;
        line[p - 1] = value;
        if (search(p + 1)) return true;
        used[value] = 0;
      }
      prefix.erase(std::find(prefix.begin(), prefix.end(), value));
    }
    return false;
  };
  if (!search(1)) return std::nullopt;
  return Permutation(line);
}

std::optional<std::vector<Permutation>> standard_chain(const AlphaZeroTableau& t, const Permutation& w) {
  if (w.size() != t.n) throw std::invalid_argument("tableau and permutation disagree on n");
  std::vector<Permutation> chain;
  Permutation bound = w;
  auto step = [&](const IndexSet& row) {
    auto x = max_lift_below(bound, row);
    if (!x) return false;
    chain.push_back(*x);
    bound = *x;
    return true;
  };
  for (int l : t.short_rows)
    if (!step(IndexSet(t.n, {l}))) return std::nullopt;
  for (const IndexSet& row : t.long_rows)
    if (!step(row)) return std::nullopt;
  return chain;
}

bool is_standard_on(const AlphaZeroTableau& t, const Permutation& w) { return standard_chain(t, w).has_value(); }

static void multisets(int n, int m, int low, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == m) {
    out.push_back(current);
    return;
  }
  for (int v = low; v <= n; ++v) {
    current.push_back(v);
    multisets(n, m, v, current, out);
    current.pop_back();
  }
}

std::vector<AlphaZeroTableau> invariant_tableaux(int n, int m) {
  if (n < 2 || m < 0) throw std::invalid_argument("need n >= 2 and m >= 0");
  std::vector<std::vector<int>> bags;
  std::vector<int> current;
  multisets(n, m, 1, current, bags);
  std::vector<AlphaZeroTableau> out;
  for (const auto& bag : bags) {
    std::vector<int> shorts = bag;
    do {
      std::vector<int> missing = bag;
      do {
        out.push_back(tableau_from_missing(n, shorts, missing));
      } while (std::next_permutation(missing.begin(), missing.end()));
    } while (std::next_permutation(shorts.begin(), shorts.end()));
  }
  return out;
}

std::vector<AlphaZeroTableau> invariant_standard_tableaux(const Permutation& w, int m) {
  std::vector<AlphaZeroTableau> out;
  for (auto& t : invariant_tableaux(w.size(), m))
    if (is_young_on(t, w) && is_standard_on(t, w)) out.push_back(std::move(t));
  return out;
}

std::int64_t invariant_dimension(const Permutation& w, int m) {
  return static_cast<std::int64_t>(invariant_standard_tableaux(w, m).size());
}

static Word descending(int from, int to) {
  Word word;
  for (int a = from; a >= to; --a) word.push_back(a);
  return word;
}

static Word ascending(int from, int to) {
  Word word;
  for (int a = from; a <= to; ++a) word.push_back(a);
  return word;
}

static Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

static Permutation case_a_minimal(int n, int i) { return word_to_perm(concat(ascending(i + 1, n - 1), descending(i, 1)), n); }
static Permutation case_b_minimal(int n, int i) { return word_to_perm(concat(descending(i, 1), ascending(i + 1, n - 1)), n); }

std::vector<Permutation> minimal_semistable_borel(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::set<Permutation> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.insert(case_a_minimal(n, i));
    out.insert(case_b_minimal(n, i));
  }
  return {out.begin(), out.end()};
}

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::A: return "A";
    case FamilyCase::A2: return "A2";
    case FamilyCase::B: return "B";
  }
  return "?";
}

FamilyCase parse_family_case(const std::string& text) {
  if (text == "A") return FamilyCase::A;
  if (text == "A2") return FamilyCase::A2;
  if (text == "B") return FamilyCase::B;
  throw std::invalid_argument("unknown family case '" + text + "' (expected A, A2 or B)");
}

std::vector<int> family_parameters(FamilyCase c, int n) {
  std::vector<int> out;
  switch (c) {
    case FamilyCase::A:
      for (int i = 1; i <= n - 3; ++i) out.push_back(i);
      break;
    case FamilyCase::A2:
      if (n >= 3) out.push_back(n - 1);
      break;
    case FamilyCase::B:
      for (int i = 1; i <= n - 1; ++i) out.push_back(i);
      break;
  }
  return out;
}

static void check_parameter(FamilyCase c, int n, int i) {
  if (n < 3) throw std::invalid_argument("extension families need n >= 3");
  bool ok = false;
  switch (c) {
    case FamilyCase::A: ok = i >= 1 && i <= n - 3; break;
    case FamilyCase::A2: ok = i == n - 1 || i == n - 2; break;
    case FamilyCase::B: ok = i >= 1 && i <= n - 1; break;
  }
  if (!ok) throw std::invalid_argument("parameter i=" + std::to_string(i) + " out of range for case " + to_string(c));
}

std::vector<FamilyIndex> family_indices(FamilyCase c, int n, int i) {
  check_parameter(c, n, i);
  std::vector<FamilyIndex> out{{0, 0}};
  auto row = [&](int k, int j_low) {
    for (int j = j_low; j <= n - k; ++j) out.push_back({k, j});
  };
  switch (c) {
    case FamilyCase::A:
      for (int k = 1; k <= i; ++k) row(k, 2);
      out.push_back({i + 1, n - i - 1});
      for (int k = i + 2; k <= n - 1; ++k) row(k, 1);
      break;
    case FamilyCase::A2:
      for (int k = 1; k <= n - 2; ++k) row(k, 2);
      break;
    case FamilyCase::B:
      for (int k = 1; k <= i - 1; ++k) row(k, 2);
      out.push_back({i, n - i});
      for (int k = i + 1; k <= n - 1; ++k) row(k, 1);
      break;
  }
  return out;
}

static std::vector<std::pair<FamilyIndex, Permutation>> family_chain(FamilyCase c, int n, int i) {
  const auto indices = family_indices(c, n, i);
  const int alias_k = c == FamilyCase::A ? i + 1 : (c == FamilyCase::B ? i : -1);
  // Rows below this k extend with s_j...s_2, the rest with s_j...s_1.
  const int first_full_row = c == FamilyCase::A ? i + 2 : (c == FamilyCase::B ? i + 1 : n);
  std::vector<std::pair<FamilyIndex, Permutation>> out;
  Permutation base;
  Permutation row_last;
  int current_row = 0;
  for (const FamilyIndex& idx : indices) {
    Permutation element;
    if (idx.k == 0) {
      switch (c) {
        case FamilyCase::A: element = case_a_minimal(n, i); break;
        case FamilyCase::A2: element = word_to_perm(descending(n - 1, 1), n); break;
        case FamilyCase::B: element = case_b_minimal(n, i); break;
      }
    } else {
      if (idx.k != current_row) base = row_last;
      if (idx.k == alias_k) {
        element = base;
      } else {
        element = extend(base, descending(idx.j, idx.k >= first_full_row ? 1 : 2));
      }
    }
    current_row = idx.k;
    row_last = element;
    out.emplace_back(idx, element);
  }
  return out;
}

Permutation family_element(FamilyCase c, int n, int i, int k, int j) {
  for (auto& [idx, element] : family_chain(c, n, i))
    if (idx.k == k && (idx.j == j || k == 0)) return element;
  throw std::invalid_argument("(k, j) = (" + std::to_string(k) + ", " + std::to_string(j) +
                              ") is not admissible for case " + to_string(c));
}

int predicted_dimension(FamilyCase c, int n, int i, int k, int j) {
  check_parameter(c, n, i);
  if (k == 0) return 1;
  switch (c) {
    case FamilyCase::A:
      if (k == 1) return j <= n - 2 ? 1 : i + 1;
      if (k <= i + 1) return i + 1;
      return k;
    case FamilyCase::A2:
      if (k == 1 && j <= n - 2) return 1;
      return n - 1;
    case FamilyCase::B:
      if (k == 1 && j <= n - 2) return 1;
      if (k <= i) return i;
      return k;
  }
  return -1;
}

std::vector<DimensionRow> dimension_table(FamilyCase c, int n, int i) {
  std::vector<DimensionRow> out;
  for (auto& [idx, element] : family_chain(c, n, i)) {
    std::int64_t computed = invariant_dimension(element, 1);
    int predicted = predicted_dimension(c, n, i, idx.k, idx.j);
    out.push_back({idx.k, idx.j, element, computed, predicted, computed == predicted});
  }
  return out;
}

std::vector<Permutation> all_family_elements(int n) {
  std::set<Permutation> out;
  for (FamilyCase c : {FamilyCase::A, FamilyCase::A2, FamilyCase::B})
    for (int i : family_parameters(c, n))
      for (auto& entry : family_chain(c, n, i)) out.insert(entry.second);
  return {out.begin(), out.end()};
}

std::vector<int> alpha0_parabolic(int n) {
  std::vector<int> out;
  for (int a = 2; a <= n - 2; ++a) out.push_back(a);
  return out;
}

std::vector<Permutation> alpha0_lifts(int n) {
  const auto parabolic = alpha0_parabolic(n);
  std::set<Permutation> out;
  for (const Permutation& w : all_permutations(n)) out.insert(max_coset_lift(w, parabolic));
  return {out.begin(), out.end()};
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int a = 1; a <= k; ++a) result = result * static_cast<std::uint64_t>(n - k + a) / static_cast<std::uint64_t>(a);
  return result;
}

NormalityReport projective_normality_check(const Permutation& w, int max_m) {
  NormalityReport report;
  report.w = w;
  report.t = invariant_dimension(w, 1);
  if (report.t < 1) throw std::domain_error("X(" + w.to_string() + ") has no degree-one T-invariant sections");
  const int n = w.size();
  const auto family = all_family_elements(n);
  report.family_element = std::binary_search(family.begin(), family.end(), w);
  report.lift = max_coset_lift(w, alpha0_parabolic(n)) == w;
  for (int m = 2; m <= max_m; ++m) {
    DegreeCheck check{m, invariant_dimension(w, m), binomial(static_cast<int>(report.t) + m - 1, m), false};
    check.pass = check.dimension >= 0 && static_cast<std::uint64_t>(check.dimension) == check.expected;
    report.pass = report.pass && check.pass;
    report.degrees.push_back(check);
  }
  return report;
}

namespace {

// Standard monomials of degree m on X(w) in Gr(r, n) are chains
// tau_1 >= ... >= tau_m <= w. Written as an r x m semistandard tableau
// (column j = tau_{m+1-j}) the cells holding values <= v form a partition,
// so the search runs over partitions in the r x m box, adding one
// horizontal strip of size c per value.
class GrassmannChainSearch {
 public:
  GrassmannChainSearch(const IndexSet& w, int m, int c) : w_(w), r_(w.r()), n_(w.n()), m_(m), c_(c) {}

  std::optional<std::vector<IndexSet>> run() {
    std::vector<int> shape(r_, 0);
    strips_.clear();
    if (!extend(1, shape)) return std::nullopt;
    // Recover the tableau from the strips.
    std::vector<std::vector<int>> cells(r_, std::vector<int>(m_, 0));
    std::vector<int> before(r_, 0);
    for (int v = 1; v <= n_; ++v) {
      const auto& after = strips_[v - 1];
      for (int k = 0; k < r_; ++k)
        for (int col = before[k]; col < after[k]; ++col) cells[k][col] = v;
      before = after;
    }
    std::vector<IndexSet> chain;
    for (int col = m_ - 1; col >= 0; --col) {
      std::vector<int> entries(r_);
      for (int k = 0; k < r_; ++k) entries[k] = cells[k][col];
      chain.emplace_back(n_, entries);
    }
    return chain;
  }

 private:
  bool extend(int v, const std::vector<int>& shape) {
    if (v > n_) return true;
    if (failed_.count({v, shape})) return false;
    std::vector<int> next = shape;
    if (place(v, 0, c_, shape, next)) return true;
    failed_.insert({v, shape});
    return false;
  }

  bool place(int v, int k, int left, const std::vector<int>& shape, std::vector<int>& next) {
    if (k == r_) {
      if (left != 0) return false;
      for (int row = 0; row < r_; ++row)
        if (w_[row + 1] <= v && next[row] != m_) return false;
      strips_.resize(v);
      strips_[v - 1] = next;
      return extend(v + 1, next);
    }
    int cap = k == 0 ? m_ : shape[k - 1];
    for (int add = std::min(left, cap - shape[k]); add >= 0; --add) {
      next[k] = shape[k] + add;
      if (place(v, k + 1, left - add, shape, next)) return true;
    }
    next[k] = shape[k];
    return false;
  }

  IndexSet w_;
  int r_, n_, m_, c_;
  std::set<std::pair<int, std::vector<int>>> failed_;
  std::vector<std::vector<int>> strips_;
};

}  // namespace

GrassmannSemistability semistable_nonempty_oracle(const IndexSet& w) {
  const int r = w.r();
  const int n = w.n();
  if (r < 1 || r >= n) throw std::invalid_argument("Gr(r,n) needs 1 <= r <= n-1");
  const int g = std::gcd(r, n);
  const int m0 = n / g;
  GrassmannSemistability result;
  result.degree_bound = 2 * m0;
  for (int m : {m0, 2 * m0}) {
    GrassmannChainSearch search(w, m, m * r / n);
    if (auto chain = search.run()) {
      result.found = true;
      result.degree = m;
      result.chain = std::move(*chain);
      return result;
    }
  }
  return result;
}

BorelSemistability semistable_nonempty_oracle(const Permutation& w) {
  BorelSemistability result;
  result.degree_bound = 2;
  for (int m : {1, 2}) {
    auto found = invariant_standard_tableaux(w, m);
    if (!found.empty()) {
      result.found = true;
      result.degree = m;
      result.witness = found.front();
      return result;
    }
  }
  return result;
}

std::vector<IndexSet> minimal_semistable_oracle(int r, int n) {
  std::vector<IndexSet> hits;
  for (const IndexSet& w : all_index_sets(r, n))
    if (semistable_nonempty_oracle(w).found) hits.push_back(w);
  std::vector<IndexSet> out;
  for (const IndexSet& w : hits) {
    bool minimal = std::none_of(hits.begin(), hits.end(),
                                [&](const IndexSet& u) { return u != w && componentwise_leq(u, w); });
    if (minimal) out.push_back(w);
  }
  return out;
}

}  // namespace schubert
