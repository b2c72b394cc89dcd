#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/linalg.hpp"
#include "nilharm/polynomial.hpp"
#include "nilharm/rational.hpp"

namespace nilharm {

inline constexpr int kDefaultAdaptedRadius = 4;

/// Radius at which the standard generators reach every e_i^{±1}: 4 up to
/// step 2 (commutators have length 4), doubling with each further step.
int standard_adapted_radius(const GroupSchema& schema);

/// Finitely supported, symmetric, adapted probability measure with exact
/// rational weights. Construction validates all three properties.
class Measure {
 public:
  using Atoms = std::map<GroupElement, Rational>;

  /// Throws ValidationError naming the offending atom when a weight is not
  /// positive, the measure is not symmetric, the total mass is not 1, or the
  /// support does not reach every e_i^{±1} within `adapted_radius` steps.
  static Measure create(const GroupSchema& schema, Atoms atoms, int adapted_radius = kDefaultAdaptedRadius);

  /// Uniform on the given (symmetric) support.
  static Measure uniform(const GroupSchema& schema, std::span<const GroupElement> support,
                         int adapted_radius = kDefaultAdaptedRadius);

  /// Uniform on the standard generators {e_i^{±1} : σ(i) = 1}, validated at
  /// standard_adapted_radius.
  static Measure simple_walk(const GroupSchema& schema);

  /// Uniform on the standard generators together with the identity.
  static Measure lazy_walk(const GroupSchema& schema);

  const GroupSchema& schema() const { return schema_; }
  const Atoms& atoms() const { return atoms_; }
  std::vector<GroupElement> support() const;

 private:
  Measure(GroupSchema schema, Atoms atoms) : schema_(std::move(schema)), atoms_(std::move(atoms)) {}

  GroupSchema schema_;
  Atoms atoms_;
};

/// Δp = p - sum_s μ(s) p(x s). Throws InvariantError if the result does not
/// drop the degree by two.
Polynomial apply_laplacian(const Measure& mu, const Polynomial& p);

/// Δp through the symmetric second difference 1/2 E_s[2p(x) - p(xs) - p(xs^{-1})].
Polynomial apply_laplacian_symmetric(const Measure& mu, const Polynomial& p);

/// Matrix of Δ from pk_basis(k) (columns) to pk_basis(k - 2) (rows).
RationalMatrix laplacian_matrix(const GroupSchema& schema, const Measure& mu, int k);

struct HarmonicBasisReport {
  GroupSchema schema;
  int k = 0;
  std::vector<Polynomial> basis;
  std::size_t dim = 0;
  std::size_t predicted_dim = 0;
};

/// Kernel of Δ on P^k in the canonical free-variable parameterization.
/// Throws InvariantError if the dimension differs from dim_hk.
HarmonicBasisReport harmonic_basis(const GroupSchema& schema, const Measure& mu, int k);

/// dim P^k - dim P^{k-2}
std::size_t dim_hk(const GroupSchema& schema, int k);

/// A p̂ of degree ≤ deg q + 2 with Δp̂ = q. With `prefix` set, only monomials
/// in the first `prefix` coordinates are used for p̂ (q must itself depend
/// only on those coordinates). Throws InconsistencyError when no such p̂ exists.
Polynomial solve_preimage(const GroupSchema& schema, const Measure& mu, const Polynomial& q,
                          std::optional<std::size_t> prefix = std::nullopt);

/// True iff every harmonic basis element of degree ≤ k is fixed by the left
/// action of g.
bool action_is_trivial(const GroupSchema& schema, const Measure& mu, int k, const GroupElement& g);

struct GrowthRow {
  int k = 0;
  std::size_t dim_h = 0;        // nullity of the Laplacian matrix
  std::size_t predicted = 0;    // dim_hk
  std::optional<Rational> ratio;  // dim_h / k^{d-1}, absent for k = 0
};

/// Exact dim H^k for k = 0..k_max with ratios against k^{rank - 1}.
std::vector<GrowthRow> growth_exponent_table(const GroupSchema& schema, const Measure& mu, int k_max);

}  // namespace nilharm
