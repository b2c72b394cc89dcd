#include "nilharm/laplacian.hpp"

#include <algorithm>
#include <set>

#include "nilharm/errors.hpp"

namespace nilharm {

Measure Measure::create(const GroupSchema& schema, Atoms atoms, int adapted_radius) {
  if (atoms.empty()) throw ValidationError("measure has no atoms");
  Rational mass = 0;
  for (const auto& [g, w] : atoms) {
    check_conforms(schema, g);
    if (w <= 0) {
      throw ValidationError("atom " + to_string(g) + " has non-positive weight " + format_rational(w));
    }
    const auto it = atoms.find(inv(schema, g));
    if (it == atoms.end() || it->second != w) {
      throw ValidationError("measure is not symmetric: atom " + to_string(g) + " has weight " +
                            format_rational(w) + " but its inverse " + to_string(inv(schema, g)) + " has " +
                            (it == atoms.end() ? std::string("no weight") : format_rational(it->second)));
    }
    mass += w;
  }
  if (mass != 1) throw ValidationError("measure total mass is " + format_rational(mass) + ", expected 1");

  // Adaptedness: the support must reach every e_i^{±1} within the radius.
  std::vector<GroupElement> support;
  for (const auto& [g, w] : atoms) support.push_back(g);
  const auto reach = ball(schema, support, adapted_radius);
  const std::set<GroupElement> reached(reach.begin(), reach.end());
  for (std::size_t i = 0; i < schema.n_coords(); ++i) {
    for (long sign : {1L, -1L}) {
      const auto e = basis_element(schema, i, sign);
      if (!reached.contains(e)) {
        throw ValidationError("measure is not adapted: " + to_string(e) + " is not reached within radius " +
                              std::to_string(adapted_radius));
      }
    }
  }
  return Measure(schema, std::move(atoms));
}

Measure Measure::uniform(const GroupSchema& schema, std::span<const GroupElement> support, int adapted_radius) {
  const std::set<GroupElement> distinct(support.begin(), support.end());
  if (distinct.empty()) throw ValidationError("uniform measure needs a non-empty support");
  const Rational w(1, static_cast<unsigned long>(distinct.size()));
  Atoms atoms;
  for (const auto& g : distinct) atoms.emplace(g, w);
  return create(schema, std::move(atoms), adapted_radius);
}

int standard_adapted_radius(const GroupSchema& schema) {
  return schema.step() <= 2 ? kDefaultAdaptedRadius : 1 << schema.step();
}

Measure Measure::simple_walk(const GroupSchema& schema) {
  const auto gens = standard_generators(schema);
  return uniform(schema, gens, standard_adapted_radius(schema));
}

Measure Measure::lazy_walk(const GroupSchema& schema) {
  auto gens = standard_generators(schema);
  gens.push_back(identity(schema));
  return uniform(schema, gens, standard_adapted_radius(schema));
}

std::vector<GroupElement> Measure::support() const {
  std::vector<GroupElement> out;
  for (const auto& [g, w] : atoms_) out.push_back(g);
  return out;
}

namespace {

void check_schema(const Measure& mu, const GroupSchema& schema) {
  if (!(mu.schema() == schema)) {
    throw DimensionError("measure lives on " + mu.schema().name() + ", expected " + schema.name());
  }
}

Polynomial checked_drop(Polynomial result, int input_degree) {
  if (!degree_at_most(result, input_degree - 2)) {
    throw InvariantError("Laplacian did not lower the degree by two on " + result.schema().name());
  }
  return result;
}

/// Powers y_i^a for a ≤ max_exp[i].
struct PowerTable {
  std::vector<std::vector<Integer>> pows;

  PowerTable(const GroupElement& y, const std::vector<int>& max_exp) : pows(y.size()) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      pows[i].resize(static_cast<std::size_t>(max_exp[i]) + 1);
      pows[i][0] = 1;
      for (std::size_t a = 1; a < pows[i].size(); ++a) pows[i][a] = pows[i][a - 1] * y[i];
    }
  }

  void monomial(const Monomial& m, Integer& out) const {
    out = 1;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i]) out *= pows[i][static_cast<std::size_t>(m.exponents[i])];
    }
  }
};

/// Columns Δm for each monomial m in `domain`, interpolated with bound k.
std::vector<Polynomial> laplacian_of_monomials(const GroupSchema& schema, const Measure& mu,
                                               std::span<const Monomial> domain, int k) {
  std::vector<int> max_exp(schema.n_coords(), 0);
  for (const auto& m : domain) {
    for (std::size_t i = 0; i < max_exp.size(); ++i) max_exp[i] = std::max(max_exp[i], m.exponents[i]);
  }
  std::vector<std::pair<GroupElement, Rational>> atoms(mu.atoms().begin(), mu.atoms().end());

  return interpolate(schema, k, domain.size(), [&](const GroupElement& x, std::span<Rational> out) {
    const PowerTable at_x(x, max_exp);
    std::vector<PowerTable> shifted;
    shifted.reserve(atoms.size());
    for (const auto& [s, w] : atoms) shifted.emplace_back(mul(schema, x, s), max_exp);
    Integer v;
    for (std::size_t f = 0; f < domain.size(); ++f) {
      at_x.monomial(domain[f], v);
      Rational total(v);
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        shifted[a].monomial(domain[f], v);
        if (v != 0) total -= atoms[a].second * v;
      }
      out[f] = total;
    }
  });
}

}  // namespace

Polynomial apply_laplacian(const Measure& mu, const Polynomial& p) {
  check_schema(mu, p.schema());
  const auto deg = p.degree();
  if (!deg) return p;
  const auto& schema = p.schema();
  Polynomial result = interpolate(schema, *deg, [&](const GroupElement& x) {
    Rational v = evaluate(p, x);
    for (const auto& [s, w] : mu.atoms()) v -= w * evaluate(p, mul(schema, x, s));
    return v;
  });
  return checked_drop(std::move(result), *deg);
}

Polynomial apply_laplacian_symmetric(const Measure& mu, const Polynomial& p) {
  check_schema(mu, p.schema());
  const auto deg = p.degree();
  if (!deg) return Polynomial(p.schema());
  const auto& schema = p.schema();
  Polynomial result = interpolate(schema, *deg, [&](const GroupElement& x) {
    const Rational px = evaluate(p, x);
    Rational v = 0;
    for (const auto& [s, w] : mu.atoms()) {
      v += w * (2 * px - evaluate(p, mul(schema, x, s)) - evaluate(p, mul(schema, x, inv(schema, s))));
    }
    return Rational(v / 2);
  });
  return checked_drop(std::move(result), *deg);
}

RationalMatrix laplacian_matrix(const GroupSchema& schema, const Measure& mu, int k) {
  check_schema(mu, schema);
  if (k < 0) throw ValidationError("laplacian_matrix needs k >= 0");
  const auto domain = pk_basis(schema, k);
  const auto codomain = pk_basis(schema, k - 2);
  const auto columns = laplacian_of_monomials(schema, mu, domain, k);

  std::map<Monomial, std::size_t> row_of;
  for (std::size_t r = 0; r < codomain.size(); ++r) row_of.emplace(codomain[r], r);

  RationalMatrix m(codomain.size(), domain.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [mono, coeff] : columns[c].terms()) {
      const auto it = row_of.find(mono);
      if (it == row_of.end()) {
        throw InvariantError("Laplacian image leaves P^" + std::to_string(k - 2) + " on " + schema.name());
      }
      m(it->second, c) = coeff;
    }
  }
  return m;
}

std::size_t dim_hk(const GroupSchema& schema, int k) { return dim_pk(schema, k) - dim_pk(schema, k - 2); }

HarmonicBasisReport harmonic_basis(const GroupSchema& schema, const Measure& mu, int k) {
  if (k < 0) throw ValidationError("harmonic_basis needs k >= 0");
  const auto domain = pk_basis(schema, k);
  const auto kernel = kernel_basis(laplacian_matrix(schema, mu, k));

  HarmonicBasisReport report{schema, k, {}, kernel.size(), dim_hk(schema, k)};
  for (const auto& v : kernel) report.basis.push_back(from_coefficients(schema, domain, v));
  if (report.dim != report.predicted_dim) {
    throw InvariantError("dim H^" + std::to_string(k) + " on " + schema.name() + " is " +
                         std::to_string(report.dim) + ", expected " + std::to_string(report.predicted_dim));
  }
  return report;
}

Polynomial solve_preimage(const GroupSchema& schema, const Measure& mu, const Polynomial& q,
                          std::optional<std::size_t> prefix) {
  check_schema(mu, schema);
  if (!(q.schema() == schema)) throw DimensionError("polynomial and schema disagree");
  const auto deg = q.degree();
  if (!deg) return Polynomial(schema);

  auto in_prefix = [&](const Monomial& m) {
    if (!prefix) return true;
    for (std::size_t i = *prefix; i < m.exponents.size(); ++i) {
      if (m.exponents[i] != 0) return false;
    }
    return true;
  };
  for (const auto& [m, c] : q.terms()) {
    if (!in_prefix(m)) throw ValidationError("polynomial depends on coordinates outside the requested prefix");
  }

  const int k = *deg + 2;
  const auto domain = pk_basis(schema, k);
  const auto codomain = pk_basis(schema, k - 2);
  RationalMatrix lap = laplacian_matrix(schema, mu, k);

  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < domain.size(); ++c) {
    if (in_prefix(domain[c])) cols.push_back(c);
  }
  if (prefix) lap = lap.select_columns(cols);

  const auto rhs = coefficients_in(q, codomain);
  const auto sol = solve(lap, rhs);
  if (!sol.consistent()) {
    throw InconsistencyError("no preimage of degree <= " + std::to_string(k) + " on " + schema.name() +
                             " (inconsistent row " + std::to_string(*sol.inconsistent_row) + ")");
  }
  Polynomial out(schema);
  for (std::size_t j = 0; j < cols.size(); ++j) out.add_term(domain[cols[j]], (*sol.solution)[j]);
  return out;
}

bool action_is_trivial(const GroupSchema& schema, const Measure& mu, int k, const GroupElement& g) {
  check_conforms(schema, g);
  const auto report = harmonic_basis(schema, mu, k);
  const GroupElement g_inv = inv(schema, g);
  return std::all_of(report.basis.begin(), report.basis.end(),
                     [&](const Polynomial& f) { return translate_left(f, g_inv) == f; });
}

std::vector<GrowthRow> growth_exponent_table(const GroupSchema& schema, const Measure& mu, int k_max) {
  if (k_max < 2) throw ValidationError("growth table needs k_max >= 2");
  std::vector<GrowthRow> rows;
  const int d = schema.rank();
  for (int k = 0; k <= k_max; ++k) {
    const auto lap = laplacian_matrix(schema, mu, k);
    GrowthRow row{k, lap.cols() - rank(lap), dim_hk(schema, k), std::nullopt};
    if (k > 0) {
      Integer denom;
      mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(d - 1));
      Rational ratio(Integer(static_cast<unsigned long>(row.dim_h)), denom);
      ratio.canonicalize();
      row.ratio = ratio;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nilharm
