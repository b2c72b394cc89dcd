#pragma once

// Brute-force oracles. Everything here works by evaluating polynomials at
// explicit group elements; nothing calls the interpolation-based
// translation machinery, so these checks stay independent of it.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/laplacian.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm::verify {

inline constexpr std::size_t kDefaultTupleBudget = 2000;

struct HarmonicCheck {
  bool pass = true;
  std::size_t points_checked = 0;
  std::optional<GroupElement> witness;
  Rational value;  // f(g) at the witness
  Rational mean;   // sum_s μ(s) f(g s) at the witness
};

/// Checks f(g) = sum_s μ(s) f(g s) for every g in the ball of the given
/// radius around the identity (word metric of supp μ).
HarmonicCheck check_harmonic_on_ball(const GroupSchema& schema, const Measure& mu, const Polynomial& f,
                                     int radius);

/// Deterministic sample of (k+1)-tuples from a ball: exhaustive in
/// lexicographic index order when the full set fits in the budget, otherwise
/// drawn from a fixed-seed mt19937_64 stream.
std::vector<std::vector<std::size_t>> sample_tuples(std::size_t ball_size, std::size_t arity,
                                                    std::size_t budget);

/// Iterated left difference ∂_{u_1} ... ∂_{u_m} f at x, by direct evaluation of
/// the 2^m signed terms f(u_{i_r} ... u_{i_1} x).
Rational iterated_left_difference(const GroupSchema& schema, const Polynomial& f,
                                  std::span<const GroupElement> us, const GroupElement& x);

/// Iterated right difference ∂^{u_1} ... ∂^{u_m} f at x: terms f(x u_{i_1} ... u_{i_r}).
Rational iterated_right_difference(const GroupSchema& schema, const Polynomial& f,
                                   std::span<const GroupElement> us, const GroupElement& x);

enum class Side { left, right };

struct VanishingCheck {
  bool pass = true;
  std::size_t tuples_checked = 0;
  std::optional<std::vector<GroupElement>> witness_tuple;
  std::optional<GroupElement> witness_point;
  Rational witness_value;
};

struct VanishingOptions {
  int depth = 2;             // radius of the ball the u_i are drawn from
  int test_radius = 1;       // radius of the ball of evaluation points
  std::size_t budget = kDefaultTupleBudget;
  Side side = Side::left;
};

/// Checks that all (k+1)-fold derivatives of f vanish on the sampled tuples.
VanishingCheck check_derivative_vanishing(const GroupSchema& schema, const Polynomial& f, int k,
                                          std::span<const GroupElement> support,
                                          const VanishingOptions& options = {});

struct LeftRightCheck {
  VanishingCheck left;
  VanishingCheck right;
  bool agree() const { return left.pass == right.pass; }
};

LeftRightCheck check_left_right_agreement(const GroupSchema& schema, const Polynomial& f, int k,
                                          std::span<const GroupElement> support, int depth,
                                          std::size_t budget = kDefaultTupleBudget);

struct GrowthProfileRow {
  int radius = 0;
  Rational sphere_max;             // max |f| over elements at exactly this distance
  Rational ball_max;               // max |f| over the ball of this radius
  std::optional<Rational> ratio;   // ball_max / radius^deg f, for radius ≥ 1
};

struct GrowthProfile {
  std::vector<GrowthProfileRow> rows;
  /// Largest ratio over radius ≥ 1; the soft check is that this stays bounded.
  Rational max_ratio;
};

GrowthProfile growth_profile(const GroupSchema& schema, const Polynomial& f,
                             std::span<const GroupElement> support, int r_max);

}  // namespace nilharm::verify
