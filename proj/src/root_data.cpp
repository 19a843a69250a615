#include "schubert/root_data.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace schubert {

namespace {

std::vector<std::pair<int, int>> dynkin_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i + 1 <= rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

void check_rank(Family family, int rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E6: ok = rank == 6; break;
    case Family::E7: ok = rank == 7; break;
    case Family::E8: ok = rank == 8; break;
  }
  if (!ok) {
    throw std::invalid_argument("invalid rank " + std::to_string(rank) +
                                " for family " + to_string(family));
  }
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "D" || text == "d") return Family::D;
  if (text == "E6" || text == "e6") return Family::E6;
  if (text == "E7" || text == "e7") return Family::E7;
  if (text == "E8" || text == "e8") return Family::E8;
  throw std::invalid_argument("unknown family '" + std::string(text) +
                              "' (expected A, D, E6, E7 or E8)");
}

int default_rank(Family family) {
  switch (family) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
  }
}

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
  for (auto [a, b] : dynkin_edges(family, rank)) {
    cartan_[a - 1][b - 1] = -1;
    cartan_[b - 1][a - 1] = -1;
  }
}

int RootSystem::cartan(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_) {
    throw std::out_of_range("simple root index out of range");
  }
  return cartan_[i - 1][j - 1];
}

std::string RootSystem::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    default: return to_string(family_);
  }
}

RootSystem cartan_matrix(Family family, int rank) { return RootSystem(family, rank); }

std::vector<int> minuscule_weights(const RootSystem& system) {
  const int n = system.rank();
  switch (system.family()) {
    case Family::A: {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i + 1;
      return all;
    }
    case Family::D: return {1, n - 1, n};
    case Family::E6: return {1, 6};
    case Family::E7: return {7};
    case Family::E8: return {};
  }
  return {};
}

bool is_minuscule(const RootSystem& system, int weight_index) {
  for (int i : minuscule_weights(system)) {
    if (i == weight_index) return true;
  }
  return false;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

Weight fundamental_weight(const RootSystem& system, int i) {
  if (i < 1 || i > system.rank()) throw std::out_of_range("fundamental weight index out of range");
  Weight w{std::vector<int>(system.rank(), 0)};
  w.coords[i - 1] = 1;
  return w;
}

Weight reflect(const Weight& mu, int i, const RootSystem& system) {
  if (i < 1 || i > system.rank()) throw std::out_of_range("reflection index out of range");
  if (mu.rank() != system.rank()) throw std::invalid_argument("weight rank does not match root system");
  Weight out = mu;
  const int pairing = mu[i];
  if (pairing == 0) return out;
  // alpha_i in fundamental coordinates is column i of the Cartan matrix.
  for (int j = 1; j <= system.rank(); ++j) out.coords[j - 1] -= pairing * system.cartan(j, i);
  return out;
}

int diagram_flip(const RootSystem& system, int node) {
  const int n = system.rank();
  switch (system.family()) {
    case Family::D:
      if (node == n - 1) return n;
      if (node == n) return n - 1;
      return node;
    case Family::E6:
      switch (node) {
        case 1: return 6;
        case 6: return 1;
        case 3: return 5;
        case 5: return 3;
        default: return node;
      }
    default:
      return node;
  }
}

}  // namespace schubert
