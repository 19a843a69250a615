#include "schubert/grassmannian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert {

BoxPartition::BoxPartition(int r, int n, std::vector<int> parts) : r_(r), n_(n), parts_(std::move(parts)) {
  if (r < 0 || n < r) throw std::invalid_argument("box needs 0 <= r <= n");
  if (static_cast<int>(parts_.size()) != r) throw std::invalid_argument("partition must have exactly r parts");
  for (int k = 0; k < r; ++k) {
    if (parts_[k] < 0 || parts_[k] > n - r || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw std::invalid_argument("partition " + to_string() + " must satisfy n-r >= l1 >= ... >= lr >= 0");
    }
  }
}

int BoxPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string BoxPartition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::vector<BoxPartition> all_box_partitions(int r, int n) {
  std::vector<BoxPartition> out;
  for (const IndexSet& set : all_index_sets(r, n)) out.push_back(indexset_to_partition(set));
  std::sort(out.begin(), out.end());
  return out;
}

BoxPartition indexset_to_partition(const IndexSet& set) {
  const int r = set.r();
  const int n = set.n();
  std::vector<int> parts(r);
  for (int j = 1; j <= r; ++j) parts[j - 1] = n - r + j - set[j];
  return BoxPartition(r, n, std::move(parts));
}

IndexSet partition_to_indexset(const BoxPartition& lambda) {
  std::vector<int> entries(lambda.r());
  for (int j = 1; j <= lambda.r(); ++j) entries[j - 1] = lambda.n() - lambda.r() + j - lambda[j];
  return IndexSet(lambda.n(), std::move(entries));
}

static void require_same_box(const BoxPartition& a, const BoxPartition& b) {
  if (a.r() != b.r() || a.n() != b.n()) {
    throw std::invalid_argument("partitions " + a.to_string() + " and " + b.to_string() + " live in different boxes");
  }
}

bool diagram_contains(const BoxPartition& lambda, const BoxPartition& mu) {
  require_same_box(lambda, mu);
  for (int k = 1; k <= lambda.r(); ++k)
    if (mu[k] > lambda[k]) return false;
  return true;
}

std::vector<Cell> corners(const BoxPartition& mu) {
  std::vector<Cell> out;
  for (int i = 1; i <= mu.r(); ++i) {
    if (mu[i] >= 1 && mu[i] > mu[i + 1] && mu[i] != mu.width()) out.push_back({i, mu[i]});
  }
  return out;
}

std::vector<BoxPartition> singular_components(const BoxPartition& mu) {
  std::vector<BoxPartition> out;
  for (const Cell& c : corners(mu)) {
    if (c.row + 1 > mu.r() || c.col + 1 > mu.width()) continue;
    std::vector<int> parts = mu.parts();
    for (int k = 0; k <= c.row; ++k) parts[k] = std::max(parts[k], c.col + 1);
    out.emplace_back(mu.r(), mu.n(), std::move(parts));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_smooth(const BoxPartition& mu) {
  int seen = 0;
  for (int k = 1; k <= mu.r(); ++k) {
    int complement = mu.width() - mu[k];
    if (complement == 0) continue;
    if (seen != 0 && complement != seen) return false;
    seen = complement;
  }
  return true;
}

IndexSet minimal_semistable(int r, int n) {
  if (r < 1 || r > n - 1) throw std::invalid_argument("Gr(r,n) needs 1 <= r <= n-1");
  int q = n / r;
  int t = n % r;
  if (t == 0) {
    q -= 1;
    t = r;
  }
  std::vector<int> entries(r);
  for (int i = 1; i <= r; ++i) {
    int a = i <= t - 1 ? i * (q + 1) : i * q + (t - 1);
    entries[i - 1] = a + 1;
  }
  return IndexSet(n, std::move(entries));
}

bool semistable_in_smooth(const IndexSet& w, const IndexSet& v) {
  if (w.r() != v.r() || w.n() != v.n()) throw std::invalid_argument("w and v must lie in the same I(r,n)");
  if (!componentwise_leq(v, w)) {
    throw std::domain_error("semistable locus of X(" + w.to_string() + ") is empty: " + w.to_string() +
                            " is not above " + v.to_string());
  }
  for (int i = 1; i < w.r(); ++i) {
    if (w[i + 1] > w[i] + 1 && !(w[i] < v[i + 1])) return false;
  }
  return true;
}

bool semistable_in_smooth(const IndexSet& w) { return semistable_in_smooth(w, minimal_semistable(w.r(), w.n())); }

QuotientSmoothnessReport quotient_smoothness_report(const IndexSet& w) {
  return quotient_smoothness_report(w, minimal_semistable(w.r(), w.n()));
}

QuotientSmoothnessReport quotient_smoothness_report(const IndexSet& w, const IndexSet& v) {
  QuotientSmoothnessReport report;
  report.gcd = std::gcd(w.r(), w.n());
  report.semistable_nonempty = componentwise_leq(v, w);
  if (report.semistable_nonempty) report.criterion_holds = semistable_in_smooth(w, v);
  report.quotient_smooth = report.gcd == 1 && report.semistable_nonempty && report.criterion_holds;
  if (report.gcd != 1) report.warnings.push_back("gcd != 1: stability != semistability not guaranteed");
  if (!report.semistable_nonempty) report.warnings.push_back("semistable locus empty");
  return report;
}

}  // namespace schubert
