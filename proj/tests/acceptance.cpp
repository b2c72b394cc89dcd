// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilharm/errors.hpp"
#include "nilharm/io.hpp"
#include "nilharm/laplacian.hpp"
#include "nilharm/polynomial.hpp"
#include "nilharm/verifier.hpp"
#include "oracles.hpp"

using namespace nilharm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Config {
  std::string label;
  GroupSchema schema;
  Measure mu;
  int k_max;
  int oracle_radius;
};

struct BasisBatch {
  std::string label;
  Measure mu;
  std::vector<Polynomial> basis;
  int oracle_radius;
};

// Harmonic bases collected by criteria 1-3 for the oracle in criterion 5.
std::vector<BasisBatch> collected;

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Measure heisenberg_six(const GroupSchema& h) {
  auto gens = standard_generators(h);
  gens.push_back({0, 0, 1});
  gens.push_back({0, 0, -1});
  return Measure::uniform(h, gens);
}

std::vector<Config> dimension_configs() {
  std::vector<Config> out;
  for (int d = 1; d <= 3; ++d) {
    const auto s = GroupSchema::lattice(d);
    out.push_back({s.name() + " simple", s, Measure::simple_walk(s), 5, 5});
    out.push_back({s.name() + " lazy", s, Measure::lazy_walk(s), 5, 5});
  }
  const auto h = GroupSchema::heisenberg(1);
  out.push_back({"heisenberg(1) 4-generator", h, Measure::simple_walk(h), 5, 5});
  out.push_back({"heisenberg(1) 6-atom", h, heisenberg_six(h), 5, 5});
  const auto u4 = GroupSchema::unitriangular(4);
  out.push_back({"unitriangular(4) 6-generator", u4, Measure::simple_walk(u4), 4, 3});
  return out;
}

Integer heilbronn(int d, int k) {
  return binomial(d + k, d) - (k >= 2 ? binomial(d + k - 2, d) : Integer(0));
}

Outcome heilbronn_table() {
  std::size_t checked = 0;
  for (int d = 1; d <= 4; ++d) {
    const auto s = GroupSchema::lattice(d);
    const auto mu = Measure::simple_walk(s);
    for (int k = 0; k <= 8; ++k) {
      const auto lap = laplacian_matrix(s, mu, k);
      const auto kernel = kernel_basis(lap);
      if (Integer(static_cast<unsigned long>(kernel.size())) != heilbronn(d, k)) {
        return fail(s.name() + " k=" + std::to_string(k) + ": nullity " + std::to_string(kernel.size()) +
                    ", expected " + heilbronn(d, k).get_str());
      }
      BasisBatch batch{s.name() + " k=" + std::to_string(k), mu, {}, 5};
      const auto domain = pk_basis(s, k);
      for (const auto& v : kernel) batch.basis.push_back(from_coefficients(s, domain, v));
      collected.push_back(std::move(batch));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (d, k) pairs"};
}

RationalMatrix span_rref(const GroupSchema& s, const std::vector<Polynomial>& ps, int k) {
  const auto basis = pk_basis(s, k);
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : ps) rows.push_back(coefficients_in(p, basis));
  return rref(from_rows(rows, basis.size())).reduced;
}

Outcome heisenberg_basis() {
  const auto h = GroupSchema::heisenberg(1);
  const auto mu = Measure::simple_walk(h);
  const auto report = harmonic_basis(h, mu, 2);
  if (report.dim != 6) return fail("dim " + std::to_string(report.dim));
  std::vector<Polynomial> named;
  for (const char* t : {"1", "x", "y", "x^2 - y^2", "x*y", "z"}) named.push_back(io::parse_polynomial(h, t));
  if (!(span_rref(h, report.basis, 2) == span_rref(h, named, 2))) return fail("span differs from the named basis");
  collected.push_back({"heisenberg(1) k=2", mu, report.basis, 5});
  return {true, "dim 6, spans agree"};
}

Outcome dimension_identity() {
  std::size_t checked = 0;
  for (const auto& c : dimension_configs()) {
    for (int k = 0; k <= c.k_max; ++k) {
      const auto lap = laplacian_matrix(c.schema, c.mu, k);
      const auto kernel = kernel_basis(lap);
      const auto want = dim_pk(c.schema, k) - dim_pk(c.schema, k - 2);
      if (kernel.size() != want) {
        return fail(c.label + " k=" + std::to_string(k) + ": nullity " + std::to_string(kernel.size()) +
                    ", expected " + std::to_string(want));
      }
      BasisBatch batch{c.label + " k=" + std::to_string(k), c.mu, {}, c.oracle_radius};
      const auto domain = pk_basis(c.schema, k);
      for (const auto& v : kernel) batch.basis.push_back(from_coefficients(c.schema, domain, v));
      collected.push_back(std::move(batch));
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (config, k) pairs"};
}

Outcome surjectivity() {
  std::size_t solved = 0;
  for (const auto& c : dimension_configs()) {
    for (int k = 2; k <= c.k_max; ++k) {
      const auto lap = laplacian_matrix(c.schema, c.mu, k);
      if (rank(lap) != dim_pk(c.schema, k - 2)) {
        return fail(c.label + " k=" + std::to_string(k) + ": Laplacian matrix is not of full row rank");
      }
    }
    for (const auto& m : pk_basis(c.schema, c.k_max - 2)) {
      const auto q = Polynomial::monomial(c.schema, m);
      const auto p = solve_preimage(c.schema, c.mu, q);
      if (!(apply_laplacian(c.mu, p) == q) || !degree_at_most(p, *q.degree() + 2)) {
        return fail(c.label + ": bad preimage of " + io::format_polynomial(q));
      }
      ++solved;
    }
  }
  return {true, std::to_string(solved) + " codomain monomials solved"};
}

Outcome oracle_harmonicity() {
  std::size_t functions = 0;
  std::size_t points = 0;
  for (const auto& batch : collected) {
    for (const auto& f : batch.basis) {
      const auto r = verify::check_harmonic_on_ball(f.schema(), batch.mu, f, batch.oracle_radius);
      if (!r.pass) {
        return fail(batch.label + ": " + io::format_polynomial(f) + " fails at " + to_string(*r.witness));
      }
      ++functions;
      points += r.points_checked;
    }
  }
  if (functions == 0) return fail("no harmonic bases collected");
  return {true, std::to_string(functions) + " basis elements, " + std::to_string(points) + " ball points"};
}

Outcome degree_reduction() {
  std::size_t checked = 0;
  for (const auto& s : {GroupSchema::lattice(1), GroupSchema::lattice(2), GroupSchema::lattice(3),
                        GroupSchema::lattice(4), GroupSchema::heisenberg(1), GroupSchema::heisenberg(2),
                        GroupSchema::unitriangular(3), GroupSchema::unitriangular(4)}) {
    for (const auto& m : pk_basis(s, 5)) {
      const auto p = Polynomial::monomial(s, m);
      const int deg = weighted_degree(s, m);
      for (std::size_t i = 0; i < s.n_coords(); ++i) {
        for (long sign : {1L, -1L}) {
          if (!degree_at_most(left_derivative(p, basis_element(s, i, sign)), deg - s.weight(i))) {
            return fail(s.name() + ": derivative of " + io::format_polynomial(p) + " along coordinate " +
                        std::to_string(i + 1));
          }
          ++checked;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " (monomial, direction) pairs"};
}

Outcome left_right_and_identities() {
  constexpr std::size_t kSamples = 2000;
  std::size_t lr = 0;
  std::size_t identities = 0;
  for (const auto& s : {GroupSchema::heisenberg(1), GroupSchema::lattice(2)}) {
    const auto gens = standard_generators(s);
    for (const auto& m : pk_basis(s, 3)) {
      const auto f = Polynomial::monomial(s, m);
      const int deg = weighted_degree(s, m);
      for (int k = std::max(0, deg - 1); k <= deg; ++k) {
        const auto c = verify::check_left_right_agreement(s, f, k, gens, 2, kSamples);
        if (!c.agree()) return fail(s.name() + ": left/right disagree on " + io::format_polynomial(f));
        if (c.left.pass != (k >= deg)) return fail(s.name() + ": wrong degree for " + io::format_polynomial(f));
        ++lr;
      }
    }

    const auto b = ball(s, gens, 2);
    const auto pairs = verify::sample_tuples(b.size(), 2, kSamples);
    std::mt19937_64 rng(2024);
    std::vector<Polynomial> fs, hs;
    for (int i = 0; i < 8; ++i) {
      fs.push_back(oracle::random_polynomial(s, 4, rng, 5));
      hs.push_back(oracle::random_polynomial(s, 2, rng, 3));
    }
    for (std::size_t t = 0; t < kSamples; ++t) {
      const auto& pair = pairs[t % pairs.size()];
      const auto& x = b[pair[0]];
      const auto& y = b[pair[1]];
      const auto& f = fs[t % fs.size()];
      const auto& h = hs[(t / fs.size()) % hs.size()];
      const auto cocycle = translate_left(left_derivative(f, x), y) + left_derivative(f, y);
      if (!(left_derivative(f, mul(s, x, y)) == cocycle)) {
        return fail(s.name() + ": cocycle identity fails at x=" + to_string(x) + " y=" + to_string(y));
      }
      const auto fg = oracle::random_polynomial(s, 2, rng, 3);
      const auto product = translate_left(fg, x) * left_derivative(h, x) + left_derivative(fg, x) * h;
      if (!(left_derivative(fg * h, x) == product)) {
        return fail(s.name() + ": product rule fails at x=" + to_string(x));
      }
      identities += 2;
    }
  }
  return {true, std::to_string(lr) + " left/right checks, " + std::to_string(identities) + " identity samples"};
}

Outcome action_kernel() {
  const auto h = GroupSchema::heisenberg(1);
  const auto mu = Measure::simple_walk(h);
  const GroupElement ez{0, 0, 1};
  const bool k1 = action_is_trivial(h, mu, 1, ez);
  const bool k2 = action_is_trivial(h, mu, 2, ez);
  if (!k1 || k2) return fail("k=1 " + std::string(k1 ? "trivial" : "nontrivial") + ", k=2 " +
                             (k2 ? "trivial" : "nontrivial"));
  return {true, "e_z trivial on H^1, nontrivial on H^2"};
}

// Exact extremes of dim H^k / k^2 for k = 2..12 on heisenberg(1).
const Rational kGrowthMin(91, 144);
const Rational kGrowthMax(3, 2);

Outcome growth_bounds() {
  const auto h = GroupSchema::heisenberg(1);
  const auto rows = growth_exponent_table(h, Measure::simple_walk(h), 12);
  Rational lo = kGrowthMax, hi = kGrowthMin;
  for (const auto& r : rows) {
    if (r.dim_h != r.predicted) return fail("k=" + std::to_string(r.k) + ": nullity differs from prediction");
    if (r.k < 2) continue;
    const Rational& q = *r.ratio;
    if (q < kGrowthMin || q > kGrowthMax) {
      return fail("k=" + std::to_string(r.k) + ": ratio " + format_rational(q) + " outside the golden interval");
    }
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  if (lo != kGrowthMin || hi != kGrowthMax) {
    return fail("observed range [" + format_rational(lo) + ", " + format_rational(hi) + "] differs from goldens");
  }
  return {true, "ratios in [" + format_rational(lo) + ", " + format_rational(hi) + "]"};
}

Outcome restriction_bijection() {
  const auto z2 = GroupSchema::lattice(2);
  const std::vector<IntegerMatrix> ms{{2, {2, 0, 0, 1}}, {2, {1, 1, 0, 2}}};
  std::size_t checked = 0;
  for (const auto& m : ms) {
    for (int k = 0; k <= 4; ++k) {
      const auto basis = pk_basis(z2, k);
      std::vector<std::vector<Rational>> rows;
      for (const auto& mono : basis) {
        rows.push_back(coefficients_in(restrict_to_sublattice(Polynomial::monomial(z2, mono), m), basis));
      }
      if (rank(from_rows(rows, basis.size())) != basis.size()) {
        return fail("restriction is singular at k=" + std::to_string(k));
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (M, k) pairs at full rank"};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Heilbronn table, lattice(1..4), k <= 8", 10, heilbronn_table},
      {2, "heisenberg(1) degree-2 harmonic basis", 1, heisenberg_basis},
      {3, "dimension identity", 120, dimension_identity},
      {4, "surjectivity", 120, surjectivity},
      {5, "harmonic oracle on Cayley balls", 120, oracle_harmonicity},
      {6, "degree reduction", 0, degree_reduction},
      {7, "left/right equivalence, cocycle and product rule", 0, left_right_and_identities},
      {8, "action kernel witnesses", 0, action_kernel},
      {9, "growth ratio bounds", 5, growth_bounds},
      {10, "restriction bijection", 0, restriction_bijection},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      std::ostringstream msg;
      msg << "over the " << c.budget_seconds << " s budget; " << outcome.detail;
      outcome = fail(msg.str());
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %2d: %s (%s) [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title,
                outcome.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
