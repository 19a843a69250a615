#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

// Simply-laced Dynkin types. E8 is carried only so that minuscule_weights()
// can answer "none" for it.
enum class Family { A, D, E6, E7, E8 };

std::string to_string(Family family);
Family parse_family(std::string_view text);

/// Simply-laced root system with Cartan matrix in Bourbaki numbering.
///
/// Simple roots are indexed 1..rank everywhere in the library. Type D has its
/// fork at nodes n-1 and n; types E have the branch node 4 adjacent to node 2.
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// a_{ij} = <alpha_j, alpha_i^vee>.
  int cartan(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && cartan(i, j) != 0; }
  const std::vector<std::vector<int>>& matrix() const { return cartan_; }

  std::string name() const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_;
  }

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
};

RootSystem cartan_matrix(Family family, int rank);

/// Default rank for the exceptional families; 0 for A and D.
int default_rank(Family family);

/// Indices of the minuscule fundamental weights (empty for E8).
std::vector<int> minuscule_weights(const RootSystem& system);
bool is_minuscule(const RootSystem& system, int weight_index);

/// Weight in fundamental-weight coordinates: coords[i-1] = <mu, alpha_i^vee>.
struct Weight {
  std::vector<int> coords;

  int operator[](int i) const { return coords[i - 1]; }
  int rank() const { return static_cast<int>(coords.size()); }
  std::string to_string() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight fundamental_weight(const RootSystem& system, int i);

/// s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight reflect(const Weight& mu, int i, const RootSystem& system);

/// The diagram automorphism used to transport data between the two spin
/// nodes of D_n and between omega_1 and omega_6 of E6. Identity otherwise.
int diagram_flip(const RootSystem& system, int node);

}  // namespace schubert
