#include "nilharm/verifier.hpp"

#include <random>

#include "nilharm/errors.hpp"

namespace nilharm::verify {

HarmonicCheck check_harmonic_on_ball(const GroupSchema& schema, const Measure& mu, const Polynomial& f,
                                     int radius) {
  HarmonicCheck result;
  const auto support = mu.support();
  for (const auto& g : ball(schema, support, radius)) {
    const Rational value = evaluate(f, g);
    Rational mean = 0;
    for (const auto& [s, w] : mu.atoms()) mean += w * evaluate(f, mul(schema, g, s));
    ++result.points_checked;
    if (value != mean) {
      result.pass = false;
      result.witness = g;
      result.value = value;
      result.mean = mean;
      return result;
    }
  }
  return result;
}

std::vector<std::vector<std::size_t>> sample_tuples(std::size_t ball_size, std::size_t arity,
                                                    std::size_t budget) {
  std::vector<std::vector<std::size_t>> out;
  if (ball_size == 0 || budget == 0) return out;

  // Exhaustive when ball_size^arity ≤ budget.
  std::size_t total = 1;
  bool fits = true;
  for (std::size_t i = 0; i < arity; ++i) {
    if (total > budget / ball_size) {
      fits = false;
      break;
    }
    total *= ball_size;
  }
  if (fits && total <= budget) {
    std::vector<std::size_t> idx(arity, 0);
    for (std::size_t t = 0; t < total; ++t) {
      out.push_back(idx);
      for (std::size_t pos = arity; pos-- > 0;) {
        if (++idx[pos] < ball_size) break;
        idx[pos] = 0;
      }
    }
    return out;
  }

  std::mt19937_64 rng(0x5eed2024ULL);
  out.reserve(budget);
  for (std::size_t t = 0; t < budget; ++t) {
    std::vector<std::size_t> idx(arity);
    for (auto& v : idx) v = static_cast<std::size_t>(rng() % ball_size);
    out.push_back(std::move(idx));
  }
  return out;
}

Rational iterated_left_difference(const GroupSchema& schema, const Polynomial& f,
                                  std::span<const GroupElement> us, const GroupElement& x) {
  // ∂_{u_1} ... ∂_{u_m} f (x) = sum_S (-1)^{m-|S|} f(u_{s_r} ... u_{s_1} x), S = {s_1 < ... < s_r}.
  const std::size_t m = us.size();
  Rational total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    GroupElement y = x;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        y = mul(schema, us[i], y);
        ++bits;
      }
    }
    const Rational v = evaluate(f, y);
    if ((m - bits) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

Rational iterated_right_difference(const GroupSchema& schema, const Polynomial& f,
                                   std::span<const GroupElement> us, const GroupElement& x) {
  const std::size_t m = us.size();
  Rational total = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    GroupElement y = x;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) {
        y = mul(schema, y, us[i]);
        ++bits;
      }
    }
    const Rational v = evaluate(f, y);
    if ((m - bits) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total;
}

VanishingCheck check_derivative_vanishing(const GroupSchema& schema, const Polynomial& f, int k,
                                          std::span<const GroupElement> support,
                                          const VanishingOptions& options) {
  VanishingCheck result;
  if (k < -1) throw ValidationError("derivative order must be at least 0");
  const auto pool = ball(schema, support, options.depth);
  const auto points = ball(schema, support, options.test_radius);
  const auto arity = static_cast<std::size_t>(k + 1);
  std::vector<GroupElement> us(arity);
  for (const auto& idx : sample_tuples(pool.size(), arity, options.budget)) {
    for (std::size_t i = 0; i < arity; ++i) us[i] = pool[idx[i]];
    ++result.tuples_checked;
    for (const auto& x : points) {
      const Rational v = options.side == Side::left ? iterated_left_difference(schema, f, us, x)
                                                    : iterated_right_difference(schema, f, us, x);
      if (v != 0) {
        result.pass = false;
        result.witness_tuple = us;
        result.witness_point = x;
        result.witness_value = v;
        return result;
      }
    }
  }
  return result;
}

LeftRightCheck check_left_right_agreement(const GroupSchema& schema, const Polynomial& f, int k,
                                          std::span<const GroupElement> support, int depth,
                                          std::size_t budget) {
  VanishingOptions opts;
  opts.depth = depth;
  opts.budget = budget;
  opts.side = Side::left;
  LeftRightCheck out;
  out.left = check_derivative_vanishing(schema, f, k, support, opts);
  opts.side = Side::right;
  out.right = check_derivative_vanishing(schema, f, k, support, opts);
  return out;
}

GrowthProfile growth_profile(const GroupSchema& schema, const Polynomial& f,
                             std::span<const GroupElement> support, int r_max) {
  GrowthProfile profile;
  profile.max_ratio = 0;
  const int deg = f.degree().value_or(0);
  for (int r = 0; r <= r_max; ++r) profile.rows.push_back({r, Rational(0), Rational(0), std::nullopt});
  for (const auto& [g, dist] : ball_with_distances(schema, support, r_max)) {
    const Rational v = abs(evaluate(f, g));
    auto& row = profile.rows[static_cast<std::size_t>(dist)];
    if (v > row.sphere_max) row.sphere_max = v;
  }
  Rational running = 0;
  for (auto& row : profile.rows) {
    if (row.sphere_max > running) running = row.sphere_max;
    row.ball_max = running;
    if (row.radius == 0) continue;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(row.radius), static_cast<unsigned long>(deg));
    Rational ratio = row.ball_max / Rational(scale);
    row.ratio = ratio;
    if (ratio > profile.max_ratio) profile.max_ratio = ratio;
  }
  return profile;
}

}  // namespace nilharm::verify
