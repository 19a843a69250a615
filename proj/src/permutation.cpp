#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // allow whitespace and a leading 's' for words such as "s4,s5"
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (!token.empty() && (token[0] == 's' || token[0] == 'S')) token.erase(0, 1);
    if (token.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(value);
  }
  return out;
}

std::string join(std::span<const int> values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << 's' << word[i];
  }
  return out.str();
}

Permutation::Permutation(std::vector<int> line) : line_(std::move(line)) {
  std::vector<char> seen(line_.size() + 1, 0);
  for (int v : line_) {
    if (v < 1 || v > size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n: " + join(line_));
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  return Permutation(std::move(line));
}

Permutation Permutation::longest(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = n - i;
  return Permutation(std::move(line));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < line_.size(); ++i)
    for (std::size_t j = i + 1; j < line_.size(); ++j)
      if (line_[i] > line_[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(line_.size());
  for (std::size_t i = 0; i < line_.size(); ++i) inv[line_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(b.line_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.line_[b.line_[i] - 1];
  return Permutation(std::move(out));
}

Permutation Permutation::swap_positions(int i) const {
  if (i < 1 || i >= size()) throw std::out_of_range("simple reflection s" + std::to_string(i) + " out of range");
  Permutation out = *this;
  std::swap(out.line_[i - 1], out.line_[i]);
  return out;
}

Permutation Permutation::swap_values(int i) const {
  if (i < 1 || i >= size()) throw std::out_of_range("simple reflection s" + std::to_string(i) + " out of range");
  Permutation out = *this;
  for (int& v : out.line_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return out;
}

std::string Permutation::to_string() const { return join(line_); }

IndexSet::IndexSet(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const bool in_range = entries_[k] >= 1 && entries_[k] <= n_;
    const bool increasing = k == 0 || entries_[k - 1] < entries_[k];
    if (!in_range || !increasing) {
      throw std::invalid_argument("index set must satisfy i1<i2<...<ir in 1.." + std::to_string(n_) +
                                  ", got " + join(entries_));
    }
  }
}

bool IndexSet::contains(int value) const {
  return std::binary_search(entries_.begin(), entries_.end(), value);
}

IndexSet IndexSet::complement() const {
  std::vector<int> rest;
  for (int v = 1; v <= n_; ++v)
    if (!contains(v)) rest.push_back(v);
  return IndexSet(n_, std::move(rest));
}

std::string IndexSet::to_string() const { return join(entries_); }

bool componentwise_leq(const IndexSet& a, const IndexSet& b) {
  if (a.r() != b.r() || a.n() != b.n()) throw std::invalid_argument("index sets from different I(r,n)");
  for (int k = 1; k <= a.r(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Permutation word_to_perm(const Word& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int letter : word) w = w.swap_positions(letter);
  return w;
}

Permutation extend(const Permutation& base, const Word& prefix) {
  Permutation w = base;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) w = w.swap_positions(*it);
  return w;
}

Word reduced_word(const Permutation& w) {
  Word reversed;
  Permutation cur = w;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < cur.size(); ++i) {
      if (cur(i) > cur(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back(descent);
    cur = cur.swap_positions(descent);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

IndexSet pi_projection(const Permutation& w, int i) {
  if (i < 0 || i > w.size()) throw std::out_of_range("projection index out of range");
  std::vector<int> head(w.line().begin(), w.line().begin() + i);
  std::sort(head.begin(), head.end());
  return IndexSet(w.size(), std::move(head));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = u.size();
  std::vector<int> pu, pw;
  pu.reserve(n);
  pw.reserve(n);
  for (int i = 1; i < n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
    for (int k = 0; k < i; ++k)
      if (pu[k] > pw[k]) return false;
  }
  return true;
}

namespace {

// Maximal runs of consecutive positions joined by reflections in `parabolic`.
std::vector<std::pair<int, int>> parabolic_blocks(int n, const std::vector<int>& parabolic) {
  std::vector<char> joined(n + 1, 0);
  for (int s : parabolic) {
    if (s < 1 || s >= n) throw std::out_of_range("parabolic generator s" + std::to_string(s) + " out of range");
    joined[s] = 1;
  }
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int p = 1; p <= n; ++p) {
    if (p == n || !joined[p]) {
      blocks.emplace_back(start, p);
      start = p + 1;
    }
  }
  return blocks;
}

}  // namespace

CosetFactorization min_coset_rep(const Permutation& w, const std::vector<int>& parabolic) {
  std::vector<int> line(w.line().begin(), w.line().end());
  for (auto [a, b] : parabolic_blocks(w.size(), parabolic)) std::sort(line.begin() + a - 1, line.begin() + b);
  Permutation rep(std::move(line));
  return {rep, rep.inverse() * w};
}

Permutation max_parabolic_element(int n, const std::vector<int>& parabolic) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  for (auto [a, b] : parabolic_blocks(n, parabolic)) std::reverse(line.begin() + a - 1, line.begin() + b);
  return Permutation(std::move(line));
}

Permutation max_coset_lift(const Permutation& w, const std::vector<int>& parabolic) {
  return min_coset_rep(w, parabolic).min_rep * max_parabolic_element(w.size(), parabolic);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<IndexSet> all_index_sets(int r, int n) {
  std::vector<IndexSet> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  std::iota(cur.begin(), cur.end(), 1);
  for (;;) {
    out.emplace_back(n, cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == n - r + k + 1) --k;
    if (k < 0) break;
    ++cur[k];
    for (int t = k + 1; t < r; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

Permutation parse_one_line(const std::string& text) {
  try {
    return Permutation(parse_int_list(text));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("expected a one-line permutation w(1),...,w(n) of 1..n: ") + e.what());
  }
}

Word parse_word(const std::string& text) {
  if (text == "e") return {};
  std::string spaced = text;
  for (char& ch : spaced)
    if (ch == 's' || ch == 'S' || std::isspace(static_cast<unsigned char>(ch))) ch = ',';
  try {
    return parse_int_list(spaced);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("expected a word of simple reflections a1,a2,... : ") + e.what());
  }
}

IndexSet parse_index_set(const std::string& text, int n) {
  try {
    return IndexSet(n, parse_int_list(text));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("expected i1<i2<...<ir in 1..") + std::to_string(n) + ": " + e.what());
  }
}

}  // namespace schubert
