#include "nilharm/polynomial.hpp"

#include <algorithm>

#include "nilharm/errors.hpp"

namespace nilharm {

int weighted_degree(const GroupSchema& schema, const Monomial& m) {
  if (m.exponents.size() != schema.n_coords()) {
    throw DimensionError("monomial arity does not match " + schema.name());
  }
  int deg = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) deg += schema.weight(i) * m.exponents[i];
  return deg;
}

bool graded_less(const GroupSchema& schema, const Monomial& a, const Monomial& b) {
  const int da = weighted_degree(schema, a);
  const int db = weighted_degree(schema, b);
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

Polynomial Polynomial::constant(const GroupSchema& schema, const Rational& c) {
  return monomial(schema, Monomial{std::vector<int>(schema.n_coords(), 0)}, c);
}

Polynomial Polynomial::monomial(const GroupSchema& schema, Monomial m, const Rational& c) {
  if (m.exponents.size() != schema.n_coords()) {
    throw DimensionError("monomial arity does not match " + schema.name());
  }
  for (int a : m.exponents) {
    if (a < 0) throw ValidationError("monomial exponents must be non-negative");
  }
  Polynomial p(schema);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::coordinate(const GroupSchema& schema, std::size_t i) {
  if (i >= schema.n_coords()) throw DimensionError("coordinate index out of range");
  Monomial m{std::vector<int>(schema.n_coords(), 0)};
  m.exponents[i] = 1;
  return monomial(schema, std::move(m));
}

std::optional<int> Polynomial::degree() const {
  std::optional<int> deg;
  for (const auto& [m, c] : terms_) {
    const int d = weighted_degree(schema_, m);
    if (!deg || d > *deg) deg = d;
  }
  return deg;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [this](const auto& a, const auto& b) { return graded_less(schema_, a.first, b.first); });
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::check_same_schema(const Polynomial& other) const {
  if (!(schema_ == other.schema_)) {
    throw DimensionError("polynomials live on different groups: " + schema_.name() + " vs " +
                         other.schema_.name());
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_schema(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_schema(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_schema(b);
  Polynomial out(a.schema());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool degree_at_most(const Polynomial& p, int k) {
  const auto d = p.degree();
  return !d || *d <= k;
}

namespace {

void enumerate_monomials(const GroupSchema& schema, std::size_t i, int budget, std::vector<int>& exps,
                         std::vector<Monomial>& out) {
  if (i == schema.n_coords()) {
    out.push_back(Monomial{exps});
    return;
  }
  const int w = schema.weight(i);
  for (int a = 0; a * w <= budget; ++a) {
    exps[i] = a;
    enumerate_monomials(schema, i + 1, budget - a * w, exps, out);
  }
  exps[i] = 0;
}

}  // namespace

std::vector<Monomial> pk_basis(const GroupSchema& schema, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  std::vector<int> exps(schema.n_coords(), 0);
  enumerate_monomials(schema, 0, k, exps, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return graded_less(schema, a, b); });
  return out;
}

std::size_t dim_pk(const GroupSchema& schema, int k) { return pk_basis(schema, k).size(); }

Integer count_weighted_solutions(std::span<const int> layer_ranks, int k) {
  if (k < 0) return 0;
  // ways[s] = number of assignments to the variables seen so far with weighted sum s
  std::vector<Integer> ways(static_cast<std::size_t>(k) + 1, Integer(0));
  ways[0] = 1;
  for (std::size_t j = 0; j < layer_ranks.size(); ++j) {
    const auto weight = static_cast<std::size_t>(j + 1);
    for (int t = 0; t < layer_ranks[j]; ++t) {
      for (std::size_t s = weight; s < ways.size(); ++s) ways[s] += ways[s - weight];
    }
  }
  Integer total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

Integer dim_pk_two_step(int d1, int d2, int k) {
  if (k < 0) return 0;
  if (d2 == 0) return binomial(d1 + k, d1);
  Integer total = 0;
  for (int y = 0; y <= k / 2; ++y) total += binomial(d2 - 1 + y, d2 - 1) * binomial(d1 + k - 2 * y, d1);
  return total;
}

Rational evaluate(const Polynomial& p, const GroupElement& g) {
  check_conforms(p.schema(), g);
  Rational total = 0;
  Integer term;
  Integer pw;
  for (const auto& [m, c] : p.terms()) {
    term = 1;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), g[i].get_mpz_t(), static_cast<unsigned long>(m.exponents[i]));
      term *= pw;
    }
    total += c * Rational(term);
  }
  return total;
}

std::vector<Rational> coefficients_in(const Polynomial& p, std::span<const Monomial> basis) {
  std::vector<Rational> out(basis.size(), Rational(0));
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& [m, c] : p.terms()) {
    const auto it = index.find(m);
    if (it == index.end()) {
      throw DimensionError("polynomial has a term outside the requested monomial basis");
    }
    out[it->second] = c;
  }
  return out;
}

Polynomial from_coefficients(const GroupSchema& schema, std::span<const Monomial> basis,
                             std::span<const Rational> coeffs) {
  if (basis.size() != coeffs.size()) throw DimensionError("coefficient count does not match basis");
  Polynomial p(schema);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

Polynomial translate_left(const Polynomial& p, const GroupElement& u) {
  check_conforms(p.schema(), u);
  const auto deg = p.degree();
  if (!deg) return p;
  const auto& schema = p.schema();
  return interpolate(schema, *deg, [&](const GroupElement& x) { return evaluate(p, mul(schema, u, x)); });
}

Polynomial translate_right(const Polynomial& p, const GroupElement& u) {
  check_conforms(p.schema(), u);
  const auto deg = p.degree();
  if (!deg) return p;
  const auto& schema = p.schema();
  return interpolate(schema, *deg, [&](const GroupElement& x) { return evaluate(p, mul(schema, x, u)); });
}

Polynomial left_derivative(const Polynomial& p, const GroupElement& u) { return translate_left(p, u) - p; }

Polynomial right_derivative(const Polynomial& p, const GroupElement& u) { return translate_right(p, u) - p; }

Integer determinant(const IntegerMatrix& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.n;
  if (m.entries.size() != n * n) throw DimensionError("matrix is not square");
  if (n == 0) return 1;
  std::vector<Integer> a = m.entries;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j));
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

Polynomial restrict_to_sublattice(const Polynomial& p, const IntegerMatrix& m) {
  const auto& schema = p.schema();
  if (schema.family() != Family::lattice) {
    throw ValidationError("restriction to a sublattice is only defined on lattice groups");
  }
  if (m.n != schema.n_coords() || m.entries.size() != m.n * m.n) {
    throw DimensionError("sublattice matrix must be " + std::to_string(schema.n_coords()) + "x" +
                         std::to_string(schema.n_coords()));
  }
  if (determinant(m) == 0) throw ValidationError("sublattice matrix is singular");
  const auto deg = p.degree();
  if (!deg) return p;
  return interpolate(schema, *deg, [&](const GroupElement& u) {
    std::vector<Integer> image(m.n, Integer(0));
    for (std::size_t i = 0; i < m.n; ++i) {
      for (std::size_t j = 0; j < m.n; ++j) image[i] += m(i, j) * u[j];
    }
    return evaluate(p, GroupElement(std::move(image)));
  });
}

}  // namespace nilharm
