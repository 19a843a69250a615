#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// Young diagram inside the r x (n-r) box: n-r >= parts[0] >= ... >= parts[r-1] >= 0.
class BoxPartition {
 public:
  BoxPartition() = default;
  BoxPartition(int r, int n, std::vector<int> parts);

  int r() const { return r_; }
  int n() const { return n_; }
  int width() const { return n_ - r_; }
  /// lambda_k, 1-based; lambda_{r+1} reads as 0.
  int operator[](int k) const { return k > r_ ? 0 : parts_[k - 1]; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const;

  std::string to_string() const;

  friend auto operator<=>(const BoxPartition&, const BoxPartition&) = default;

 private:
  int r_ = 0;
  int n_ = 0;
  std::vector<int> parts_;
};

std::vector<BoxPartition> all_box_partitions(int r, int n);

/// lambda_j = n - r + j - i_j.
BoxPartition indexset_to_partition(const IndexSet& set);
IndexSet partition_to_indexset(const BoxPartition& lambda);

/// mu is a subdiagram of lambda, i.e. X_lambda is contained in X_mu.
bool diagram_contains(const BoxPartition& lambda, const BoxPartition& mu);

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Removable cells (i, mu_i) outside full-width rows.
std::vector<Cell> corners(const BoxPartition& mu);

/// T(mu): for each corner (i, j) with room below and to the right, add the
/// cell (i+1, j+1) and complete minimally. Sorted, deduplicated.
std::vector<BoxPartition> singular_components(const BoxPartition& mu);

/// The 180-degree rotated complement of mu in the box is a rectangle.
bool is_smooth(const BoxPartition& mu);

/// The element (a_1 + 1, ..., a_r + 1) built from n = qr + t, 1 <= t <= r.
IndexSet minimal_semistable(int r, int n);

/// For every i with w_{i+1} > w_i + 1 one has w_i < v_{i+1}. Throws
/// std::domain_error when w is not above v.
bool semistable_in_smooth(const IndexSet& w, const IndexSet& v);
bool semistable_in_smooth(const IndexSet& w);

struct QuotientSmoothnessReport {
  int gcd = 0;
  bool semistable_nonempty = false;
  bool criterion_holds = false;
  bool quotient_smooth = false;
  std::vector<std::string> warnings;
};

/// Uses v = minimal_semistable(r, n) unless another minimal element is given.
QuotientSmoothnessReport quotient_smoothness_report(const IndexSet& w);
QuotientSmoothnessReport quotient_smoothness_report(const IndexSet& w, const IndexSet& v);

}  // namespace schubert
