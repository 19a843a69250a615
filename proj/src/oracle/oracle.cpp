#include "schubert/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace schubert::oracle {

BruhatTable::BruhatTable(int n) : n_(n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  do {
    index_.emplace(Permutation(line), static_cast<int>(elements_.size()));
    elements_.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  const int size = static_cast<int>(elements_.size());
  for (const Permutation& x : elements_) {
    std::vector<IndexSet> row(n + 1);
    for (int d = 1; d <= n; ++d) {
      std::vector<int> values(x.line().begin(), x.line().begin() + d);
      std::sort(values.begin(), values.end());
      row[d] = IndexSet(n, values);
    }
    projections_.push_back(std::move(row));
  }
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inversions(elements_[a]) < inversions(elements_[b]); });
  leq_.assign(size, std::vector<char>(size, 0));
  // Process by increasing length: w's down-set is the union of the down-sets
  // of all u = w t with smaller length.
  for (int w : order) {
    leq_[w][w] = 1;
    auto values = std::vector<int>(elements_[w].line().begin(), elements_[w].line().end());
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (values[a] < values[b]) continue;
        std::swap(values[a], values[b]);
        int u = index_.at(Permutation(values));
        std::swap(values[a], values[b]);
        for (int x = 0; x < size; ++x)
          if (leq_[u][x]) leq_[w][x] = 1;
      }
    }
  }
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a)
    for (int b = a + 1; b <= w.size(); ++b)
      if (w(a) > w(b)) ++count;
  return count;
}

Word bubble_word(const Permutation& w) {
  // Sorting w by adjacent swaps records w = s_{a_k} ... s_{a_1} read in the
  // right-multiplication convention; reverse to get the word.
  std::vector<int> values(w.line().begin(), w.line().end());
  Word swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < values.size(); ++p) {
      if (values[p] > values[p + 1]) {
        std::swap(values[p], values[p + 1]);
        swaps.push_back(static_cast<int>(p) + 1);
        changed = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

static Permutation apply_positions(int n, const Word& word) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  for (int a : word) std::swap(values[a - 1], values[a]);
  return Permutation(values);
}

bool subword_leq(const Permutation& u, const Permutation& w) {
  const Word word = bubble_word(w);
  if (apply_positions(w.size(), word) != w) throw std::logic_error("bubble word does not spell w");
  const std::size_t len = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < len; ++k)
      if ((mask >> k) & 1U) sub.push_back(word[k]);
    if (apply_positions(w.size(), sub) == u) return true;
  }
  return false;
}

Permutation brute_min_coset_rep(const Permutation& w, const std::vector<int>& parabolic) {
  const int n = w.size();
  std::set<Permutation> group{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (int a : parabolic) {
        Word letter{a};
        Permutation y = x * apply_positions(n, letter);
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  Permutation best = w;
  for (const Permutation& u : group) {
    Permutation candidate = w * u;
    if (inversions(candidate) < inversions(best)) best = candidate;
  }
  return best;
}

static std::vector<IndexSet> chain_rows(const AlphaZeroTableau& t) {
  std::vector<IndexSet> rows;
  for (int l : t.short_rows) rows.push_back(IndexSet(t.n, {l}));
  for (const IndexSet& row : t.long_rows) rows.push_back(row);
  return rows;
}

static bool chain_exists(const std::vector<IndexSet>& rows, const std::vector<int>& candidates,
                         int bound, const BruhatTable& table) {
  std::vector<std::vector<int>> lifts(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (int x : candidates)
      if (table.projection(x, rows[k].r()) == rows[k]) lifts[k].push_back(x);
  std::map<std::pair<std::size_t, int>, bool> memo;
  std::function<bool(std::size_t, int)> go = [&](std::size_t k, int top) -> bool {
    if (k == rows.size()) return true;
    auto key = std::make_pair(k, top);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool found = false;
    for (int x : lifts[k]) {
      if (!table.leq(x, top)) continue;
      if (go(k + 1, x)) {
        found = true;
        break;
      }
    }
    memo[key] = found;
    return found;
  };
  return go(0, bound);
}

bool exhaustive_standard(const AlphaZeroTableau& t, const Permutation& w, const BruhatTable& table) {
  std::vector<int> all(table.elements().size());
  std::iota(all.begin(), all.end(), 0);
  return chain_exists(chain_rows(t), all, table.index(w), table);
}

std::vector<AlphaZeroTableau> all_tableaux(int n, int m) {
  std::vector<AlphaZeroTableau> out;
  std::vector<int> digits(2 * m, 1);
  while (true) {
    std::vector<int> shorts(digits.begin(), digits.begin() + m);
    std::vector<int> missing(digits.begin() + m, digits.end());
    out.push_back(tableau_from_missing(n, shorts, missing));
    int k = 2 * m - 1;
    while (k >= 0 && digits[k] == n) digits[k--] = 1;
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

static bool balanced(const AlphaZeroTableau& t) {
  std::vector<int> counts(t.n, 0);
  for (int l : t.short_rows) ++counts[l - 1];
  for (const IndexSet& row : t.long_rows)
    for (int v : row.entries()) ++counts[v - 1];
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

std::int64_t brute_invariant_dimension(const Permutation& w, int m, const BruhatTable& table) {
  std::int64_t count = 0;
  for (const AlphaZeroTableau& t : all_tableaux(w.size(), m))
    if (balanced(t) && exhaustive_standard(t, w, table)) ++count;
  return count;
}

std::int64_t parabolic_invariant_dimension(const Permutation& w, int m, const BruhatTable& table) {
  const int n = w.size();
  std::vector<int> parabolic;
  for (int a = 2; a <= n - 2; ++a) parabolic.push_back(a);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(table.elements().size()); ++x)
    if (brute_min_coset_rep(table.elements()[x], parabolic) == table.elements()[x]) reps.push_back(x);
  int bound = table.index(brute_min_coset_rep(w, parabolic));
  std::int64_t count = 0;
  for (const AlphaZeroTableau& t : all_tableaux(n, m))
    if (balanced(t) && chain_exists(chain_rows(t), reps, bound, table)) ++count;
  return count;
}

bool brute_grassmann_semistable(const IndexSet& w, int m) {
  const int r = w.r();
  const int n = w.n();
  if ((m * r) % n != 0) return false;
  const int target = m * r / n;
  std::vector<IndexSet> below;
  for (const IndexSet& s : all_index_sets(r, n))
    if (componentwise_leq(s, w)) below.push_back(s);
  std::vector<int> counts(n + 1, 0);
  std::function<bool(int, const IndexSet&)> go = [&](int left, const IndexSet& top) -> bool {
    if (left == 0) {
      for (int v = 1; v <= n; ++v)
        if (counts[v] != target) return false;
      return true;
    }
    for (const IndexSet& s : below) {
      if (!componentwise_leq(s, top)) continue;
      bool ok = true;
      for (int v : s.entries()) ok = ok && counts[v] < target;
      if (!ok) continue;
      for (int v : s.entries()) ++counts[v];
      bool found = go(left - 1, s);
      for (int v : s.entries()) --counts[v];
      if (found) return true;
    }
    return false;
  };
  return go(m, w);
}

static std::vector<std::vector<int>> positive_roots(const RootSystem& system) {
  const int rank = system.rank();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> alpha(rank, 0);
    alpha[i] = 1;
    roots.insert(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 1; i <= rank; ++i) {
        int pairing = 0;
        for (int j = 1; j <= rank; ++j) pairing += beta[j - 1] * system.cartan(i, j);
        std::vector<int> image = beta;
        image[i - 1] -= pairing;
        bool positive = std::all_of(image.begin(), image.end(), [](int c) { return c >= 0; });
        if (positive && roots.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

std::int64_t weyl_dimension(const RootSystem& system, int weight_index) {
  // Simply laced: <lambda + rho, beta^vee> = sum_i c_i (lambda_i + 1).
  std::int64_t numerator = 1;
  std::int64_t denominator = 1;
  for (const auto& beta : positive_roots(system)) {
    int height = std::accumulate(beta.begin(), beta.end(), 0);
    numerator *= height + beta[weight_index - 1];
    denominator *= height;
    std::int64_t g = std::gcd(numerator, denominator);
    numerator /= g;
    denominator /= g;
  }
  if (denominator != 1) throw std::logic_error("Weyl dimension formula did not yield an integer");
  return numerator;
}

int flag_dimension(const RootSystem& system, int weight_index) {
  int count = 0;
  for (const auto& beta : positive_roots(system))
    if (beta[weight_index - 1] != 0) ++count;
  return count;
}

}  // namespace schubert::oracle
