#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilharm/rational.hpp"

namespace nilharm {

enum class Family { lattice, heisenberg, unitriangular };

std::string family_name(Family f);

/// Coordinate model of a torsion-free nilpotent group.
///
/// Coordinates are listed in non-decreasing weight order. Supported charts:
///  - lattice(d): Z^d, all weights 1.
///  - heisenberg(n): (x_1..x_n, y_1..y_n, z), the entries of the unipotent
///    matrix [[1, x, z], [0, I, y], [0, 0, 1]]; x and y have weight 1, z weight 2.
///  - unitriangular(n): the strict upper-triangular entries a_ij of an n x n
///    unipotent integer matrix, ordered by weight j - i and then row-major.
///
/// Copies share the same immutable data.
class GroupSchema {
 public:
  static GroupSchema lattice(int d);
  static GroupSchema heisenberg(int n);
  static GroupSchema unitriangular(int n);

  Family family() const { return data_->family; }
  /// d for lattice(d), n for heisenberg(n) and unitriangular(n).
  int parameter() const { return data_->parameter; }
  std::size_t n_coords() const { return data_->weights.size(); }
  /// σ(i) for every coordinate, 0-based.
  const std::vector<int>& weights() const { return data_->weights; }
  int weight(std::size_t i) const { return data_->weights.at(i); }
  /// Torsion-free ranks d_1..d_step of the lower-central-series quotients.
  const std::vector<int>& layer_ranks() const { return data_->layer_ranks; }
  int step() const { return static_cast<int>(data_->layer_ranks.size()); }
  /// d = sum of layer ranks.
  int rank() const;
  /// Homogeneous dimension sum_j j * d_j.
  int homogeneous_dimension() const;
  /// Names used by the polynomial text syntax, one per coordinate.
  const std::vector<std::string>& coordinate_names() const { return data_->names; }
  /// Order in which basis powers multiply back to the coordinate vector:
  /// g = prod_t basis_element(order[t], g[order[t]]).
  const std::vector<std::size_t>& collection_order() const { return data_->collection_order; }
  /// unitriangular only: 0-based (row, col) of coordinate i.
  std::pair<int, int> matrix_entry(std::size_t i) const { return data_->entries.at(i); }
  /// unitriangular only: coordinate index of entry (row, col), row < col.
  std::size_t coordinate_of(int row, int col) const {
    return data_->entry_index.at(static_cast<std::size_t>(row * data_->parameter + col));
  }
  /// "lattice(2)", "heisenberg(1)", ...
  std::string name() const;

  friend bool operator==(const GroupSchema& a, const GroupSchema& b) {
    return a.family() == b.family() && a.parameter() == b.parameter();
  }

 private:
  struct Data {
    Family family;
    int parameter;
    std::vector<int> weights;
    std::vector<int> layer_ranks;
    std::vector<std::string> names;
    std::vector<std::size_t> collection_order;
    // unitriangular: (row, col) of each coordinate, 0-based
    std::vector<std::pair<int, int>> entries;
    std::vector<std::size_t> entry_index;
  };
  explicit GroupSchema(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static void check_invariants(const Data& d);

  std::shared_ptr<const Data> data_;
};

/// Integer coordinate vector of a group element.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  GroupElement(std::initializer_list<long> coords);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_identity() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords_ == b.coords_; }
  /// Lexicographic on coordinates, shorter vectors first.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::vector<Integer> coords_;
};

std::string to_string(const GroupElement& g);

void check_conforms(const GroupSchema& schema, const GroupElement& g);

GroupElement identity(const GroupSchema& schema);
GroupElement mul(const GroupSchema& schema, const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupSchema& schema, const GroupElement& g);
/// e_i^power for the 0-based coordinate index i.
GroupElement basis_element(const GroupSchema& schema, std::size_t i, const Integer& power);
/// g^n by repeated squaring; negative n uses the inverse.
GroupElement power(const GroupSchema& schema, const GroupElement& g, long n);
/// Product of the elements in order, identity for an empty list.
GroupElement product(const GroupSchema& schema, std::span<const GroupElement> factors);

/// Ball element with its word-metric distance from the identity.
struct BallEntry {
  GroupElement element;
  int distance;
};

/// All products of at most `radius` support elements, found by breadth-first
/// search. Entries are sorted by distance, then lexicographically. Throws
/// ValidationError if the support is not closed under inversion.
std::vector<BallEntry> ball_with_distances(const GroupSchema& schema,
                                           std::span<const GroupElement> support, int radius);

/// Elements of ball_with_distances, same order.
std::vector<GroupElement> ball(const GroupSchema& schema, std::span<const GroupElement> support,
                               int radius);

/// {e_i^{±1} : σ(i) = 1}, the standard symmetric generating set.
std::vector<GroupElement> standard_generators(const GroupSchema& schema);

struct CoordinateOrderCheck {
  /// First index where u is non-zero; absent for u = identity.
  std::optional<std::size_t> first_nonzero;
  /// One entry per index 0..first_nonzero, true if the required equality holds.
  std::vector<bool> per_index;
  bool pass = true;
};

/// For the first index j with u_j != 0, checks (g u)_i = g_i for i < j and
/// (g u)_j = g_j + u_j.
CoordinateOrderCheck check_coordinate_order(const GroupSchema& schema, const GroupElement& g,
                                            const GroupElement& u);

}  // namespace nilharm
