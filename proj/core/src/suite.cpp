#include "nilharm/suite.hpp"

#include <functional>
#include <set>

#include "nilharm/errors.hpp"
#include "nilharm/io.hpp"
#include "nilharm/verifier.hpp"

namespace nilharm {

namespace {

/// Thrown inside a check body to report a failure with a witness.
struct CheckFailed {
  std::string witness;
};

void expect(bool ok, const std::function<std::string()>& witness) {
  if (!ok) throw CheckFailed{witness()};
}

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r{name, true, {}};
  try {
    r.detail = body();
  } catch (const CheckFailed& f) {
    r.pass = false;
    r.detail = f.witness;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const GroupSchema& schema, const Measure& mu,
                                             const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const auto support = mu.support();
  const auto gens = standard_generators(schema);
  const int k_max = options.k_max;

  out.push_back(run_check("group.associativity", [&] {
    const auto b2 = ball(schema, gens, 2);
    const auto tuples = verify::sample_tuples(b2.size(), 3, options.tuple_budget * 10);
    for (const auto& t : tuples) {
      const auto& a = b2[t[0]];
      const auto& b = b2[t[1]];
      const auto& c = b2[t[2]];
      expect(mul(schema, mul(schema, a, b), c) == mul(schema, a, mul(schema, b, c)),
             [&] { return "(ab)c != a(bc) for " + to_string(a) + ", " + to_string(b) + ", " + to_string(c); });
    }
    return std::to_string(tuples.size()) + " triples";
  }));

  out.push_back(run_check("group.identity_inverse", [&] {
    const auto b3 = ball(schema, gens, 3);
    const auto e = identity(schema);
    for (const auto& g : b3) {
      expect(mul(schema, g, e) == g && mul(schema, e, g) == g, [&] { return "identity law fails at " + to_string(g); });
      const auto gi = inv(schema, g);
      expect(mul(schema, g, gi) == e && mul(schema, gi, g) == e, [&] { return "inverse law fails at " + to_string(g); });
    }
    return std::to_string(b3.size()) + " elements";
  }));

  out.push_back(run_check("group.coordinate_order", [&] {
    const auto b2 = ball(schema, gens, 2);
    for (const auto& g : b2) {
      for (const auto& u : b2) {
        expect(check_coordinate_order(schema, g, u).pass,
               [&] { return "g=" + to_string(g) + " u=" + to_string(u); });
      }
    }
    return std::to_string(b2.size() * b2.size()) + " pairs";
  }));

  out.push_back(run_check("group.basis_decomposition", [&] {
    const auto b3 = ball(schema, gens, 3);
    for (const auto& g : b3) {
      std::vector<GroupElement> factors;
      for (std::size_t i : schema.collection_order()) factors.push_back(basis_element(schema, i, g[i]));
      expect(product(schema, factors) == g, [&] { return "collected product differs from " + to_string(g); });
    }
    return std::to_string(b3.size()) + " elements";
  }));

  out.push_back(run_check("group.ball_growth", [&] {
    std::size_t prev = 0;
    Integer bound = 1;
    for (int r = 0; r <= 3; ++r) {
      const auto size = ball(schema, support, r).size();
      expect(size >= prev, [&] { return "ball shrinks at radius " + std::to_string(r); });
      expect(Integer(static_cast<unsigned long>(size)) <= bound + (r == 0 ? 0 : 1),
             [&] { return "ball exceeds |S|^r + 1 at radius " + std::to_string(r); });
      prev = size;
      bound *= static_cast<unsigned long>(support.size());
    }
    return std::string("radius 0..3");
  }));

  out.push_back(run_check("polyspace.dimension_count", [&] {
    for (int k = -1; k <= k_max; ++k) {
      const Integer counted = count_weighted_solutions(schema.layer_ranks(), k);
      expect(Integer(static_cast<unsigned long>(dim_pk(schema, k))) == counted,
             [&] { return "dim P^" + std::to_string(k) + " disagrees with layer-rank count " + counted.get_str(); });
    }
    return "k = -1.." + std::to_string(k_max);
  }));

  out.push_back(run_check("polyspace.interpolation_soundness", [&] {
    const auto points = ball(schema, gens, 2);
    std::size_t n = 0;
    for (const auto& m : pk_basis(schema, std::min(k_max, 3))) {
      const auto p = Polynomial::monomial(schema, m);
      for (const auto& u : support) {
        const auto left = translate_left(p, u);
        const auto right = translate_right(p, u);
        for (const auto& g : points) {
          expect(evaluate(left, g) == evaluate(p, mul(schema, u, g)) &&
                     evaluate(right, g) == evaluate(p, mul(schema, g, u)),
                 [&] { return "translate by " + to_string(u) + " of " + io::format_polynomial(p) + " at " + to_string(g); });
          ++n;
        }
      }
    }
    return std::to_string(n) + " evaluations";
  }));

  out.push_back(run_check("polyspace.degree_reduction", [&] {
    std::size_t n = 0;
    for (const auto& m : pk_basis(schema, k_max)) {
      const auto p = Polynomial::monomial(schema, m);
      const int deg = weighted_degree(schema, m);
      for (std::size_t i = 0; i < schema.n_coords(); ++i) {
        for (long sign : {1L, -1L}) {
          const auto d = left_derivative(p, basis_element(schema, i, sign));
          expect(degree_at_most(d, deg - schema.weight(i)), [&] {
            return "deg of derivative of " + io::format_polynomial(p) + " along e_" + std::to_string(i + 1) + " too large";
          });
          ++n;
        }
      }
    }
    return std::to_string(n) + " derivatives";
  }));

  out.push_back(run_check("polyspace.derivative_oracle", [&] {
    const int top = std::min(k_max, 3);
    std::set<int> failing_classes;
    for (const auto& m : pk_basis(schema, top)) {
      const auto p = Polynomial::monomial(schema, m);
      const int deg = weighted_degree(schema, m);
      verify::VanishingOptions opts;
      opts.budget = options.tuple_budget;
      expect(verify::check_derivative_vanishing(schema, p, deg, gens, opts).pass,
             [&] { return io::format_polynomial(p) + " not killed by order " + std::to_string(deg + 1); });
      if (deg > 0 && !verify::check_derivative_vanishing(schema, p, deg - 1, gens, opts).pass) {
        failing_classes.insert(deg);
      }
    }
    for (int d = 1; d <= top; ++d) {
      expect(failing_classes.contains(d), [&] { return "no monomial of degree " + std::to_string(d) + " detected as exact degree"; });
    }
    return "degrees 0.." + std::to_string(top);
  }));

  for (int k = 0; k <= k_max; ++k) {
    const std::string suffix = "[k=" + std::to_string(k) + "]";
    RationalMatrix lap;
    out.push_back(run_check("laplacian.degree_drop" + suffix, [&] {
      lap = laplacian_matrix(schema, mu, k);
      return std::to_string(lap.rows()) + "x" + std::to_string(lap.cols());
    }));
    out.push_back(run_check("laplacian.surjectivity" + suffix, [&] {
      const auto r = rank(lap);
      expect(r == dim_pk(schema, k - 2), [&] { return "rank " + std::to_string(r) + " < dim P^" + std::to_string(k - 2); });
      return "rank " + std::to_string(r);
    }));
    out.push_back(run_check("laplacian.dimension_identity" + suffix, [&] {
      const auto report = harmonic_basis(schema, mu, k);
      for (const auto& f : report.basis) {
        const auto check = verify::check_harmonic_on_ball(schema, mu, f, options.radius);
        expect(check.pass, [&] {
          return io::format_polynomial(f) + " not harmonic at " + to_string(*check.witness) + ": " +
                 format_rational(check.value) + " vs " + format_rational(check.mean);
        });
      }
      return "dim " + std::to_string(report.dim) + ", oracle radius " + std::to_string(options.radius);
    }));
    if (k >= 2) {
      out.push_back(run_check("laplacian.preimage" + suffix, [&] {
        std::size_t n = 0;
        for (const auto& m : pk_basis(schema, k - 2)) {
          if (weighted_degree(schema, m) != k - 2) continue;
          const auto q = Polynomial::monomial(schema, m);
          const auto p = solve_preimage(schema, mu, q);
          expect(apply_laplacian(mu, p) == q, [&] { return "preimage of " + io::format_polynomial(q) + " fails"; });
          ++n;
        }
        return std::to_string(n) + " monomials";
      }));
    }
  }

  out.push_back(run_check("laplacian.symmetric_form", [&] {
    std::size_t n = 0;
    for (const auto& m : pk_basis(schema, std::min(k_max, 4))) {
      const auto p = Polynomial::monomial(schema, m);
      expect(apply_laplacian(mu, p) == apply_laplacian_symmetric(mu, p),
             [&] { return "forms disagree on " + io::format_polynomial(p); });
      ++n;
    }
    return std::to_string(n) + " monomials";
  }));

  return out;
}

}  // namespace nilharm
