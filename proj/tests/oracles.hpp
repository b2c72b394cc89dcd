#pragma once

// Test-only reference implementations. None of these go through the
// interpolation path in core; they rebuild results from first principles.

#include <random>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm::oracle {

/// Unipotent integer matrix of an element in the matrix-entry charts
/// (heisenberg and unitriangular); (n+2)x(n+2) for heisenberg(n).
inline std::vector<std::vector<Integer>> to_matrix(const GroupSchema& s, const GroupElement& g) {
  if (s.family() == Family::heisenberg) {
    const auto n = static_cast<std::size_t>(s.parameter());
    std::vector<std::vector<Integer>> m(n + 2, std::vector<Integer>(n + 2, Integer(0)));
    for (std::size_t i = 0; i < n + 2; ++i) m[i][i] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      m[0][1 + i] = g[i];
      m[1 + i][n + 1] = g[n + i];
    }
    m[0][n + 1] = g[2 * n];
    return m;
  }
  const auto n = static_cast<std::size_t>(s.parameter());
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t c = 0; c < s.n_coords(); ++c) {
    const auto [i, j] = s.matrix_entry(c);
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g[c];
  }
  return m;
}

inline GroupElement from_matrix(const GroupSchema& s, const std::vector<std::vector<Integer>>& m) {
  std::vector<Integer> c(s.n_coords());
  if (s.family() == Family::heisenberg) {
    const auto n = static_cast<std::size_t>(s.parameter());
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = m[0][1 + i];
      c[n + i] = m[1 + i][n + 1];
    }
    c[2 * n] = m[0][n + 1];
  } else {
    for (std::size_t k = 0; k < s.n_coords(); ++k) {
      const auto [i, j] = s.matrix_entry(k);
      c[k] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return GroupElement(std::move(c));
}

/// Group product by explicit matrix multiplication (componentwise sum for lattices).
inline GroupElement matrix_mul(const GroupSchema& s, const GroupElement& a, const GroupElement& b) {
  if (s.family() == Family::lattice) {
    std::vector<Integer> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return GroupElement(std::move(c));
  }
  const auto A = to_matrix(s, a);
  const auto B = to_matrix(s, b);
  const std::size_t n = A.size();
  std::vector<std::vector<Integer>> C(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
  return from_matrix(s, C);
}

/// Coordinates of u·x (left) or x·u (right) as polynomials in x, read off
/// from the closed-form product.
inline std::vector<Polynomial> product_coordinates(const GroupSchema& s, const GroupElement& u, bool left) {
  std::vector<Polynomial> out;
  const std::size_t n = s.n_coords();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Polynomial::coordinate(s, i) + Polynomial::constant(s, Rational(u[i])));
  }
  if (s.family() == Family::heisenberg) {
    const auto m = static_cast<std::size_t>(s.parameter());
    for (std::size_t i = 0; i < m; ++i) {
      // z gains (first factor x) . (second factor y)
      if (left) {
        out[2 * m] += Rational(u[i]) * Polynomial::coordinate(s, m + i);
      } else {
        out[2 * m] += Rational(u[m + i]) * Polynomial::coordinate(s, i);
      }
    }
  } else if (s.family() == Family::unitriangular) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto [i, j] = s.matrix_entry(c);
      for (int k = i + 1; k < j; ++k) {
        if (left) {
          out[c] += Rational(u[s.coordinate_of(i, k)]) * Polynomial::coordinate(s, s.coordinate_of(k, j));
        } else {
          out[c] += Rational(u[s.coordinate_of(k, j)]) * Polynomial::coordinate(s, s.coordinate_of(i, k));
        }
      }
    }
  }
  return out;
}

/// p composed with the product map, by symbolic substitution.
inline Polynomial compose_translate(const Polynomial& p, const GroupElement& u, bool left) {
  const auto& s = p.schema();
  const auto coords = product_coordinates(s, u, left);
  Polynomial out(s);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(s, c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      for (int e = 0; e < m.exponents[i]; ++e) term = term * coords[i];
    }
    out += term;
  }
  return out;
}

/// Number of monomials of weighted degree ≤ k by brute-force enumeration of
/// every exponent box.
inline std::size_t brute_force_dim(const GroupSchema& s, int k) {
  if (k < 0) return 0;
  const std::size_t n = s.n_coords();
  std::vector<int> a(n, 0);
  std::size_t count = 0;
  for (;;) {
    int deg = 0;
    for (std::size_t i = 0; i < n; ++i) deg += s.weight(i) * a[i];
    if (deg <= k) ++count;
    std::size_t pos = 0;
    while (pos < n && ++a[pos] > k) a[pos++] = 0;
    if (pos == n) break;
  }
  return count;
}

/// Random polynomial of weighted degree ≤ k with small integer/half coefficients.
inline Polynomial random_polynomial(const GroupSchema& s, int k, std::mt19937_64& rng, std::size_t terms = 4) {
  const auto basis = pk_basis(s, k);
  Polynomial p(s);
  for (std::size_t t = 0; t < terms; ++t) {
    const auto& m = basis[rng() % basis.size()];
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = 1 + static_cast<long>(rng() % 2);
    Rational c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

}  // namespace nilharm::oracle
