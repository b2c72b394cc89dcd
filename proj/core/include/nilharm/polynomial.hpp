#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "nilharm/group.hpp"
#include "nilharm/rational.hpp"

namespace nilharm {

/// Exponent vector of a coordinate monomial x_1^{a_1} ... x_n^{a_n}.
struct Monomial {
  std::vector<int> exponents;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// sum_i σ(i) a_i
int weighted_degree(const GroupSchema& schema, const Monomial& m);

/// Graded order: weighted degree ascending, ties broken by descending
/// exponent-vector lexicographic order (so x precedes y, x^2 precedes xy).
bool graded_less(const GroupSchema& schema, const Monomial& a, const Monomial& b);

/// Exact-rational coordinate polynomial on a group. Zero coefficients are
/// never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(GroupSchema schema) : schema_(std::move(schema)) {}

  static Polynomial constant(const GroupSchema& schema, const Rational& c);
  static Polynomial monomial(const GroupSchema& schema, Monomial m, const Rational& c = 1);
  /// The coordinate function x ↦ x_i (0-based i).
  static Polynomial coordinate(const GroupSchema& schema, std::size_t i);

  const GroupSchema& schema() const { return schema_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Weighted degree; empty for the zero polynomial.
  std::optional<int> degree() const;
  /// Coefficient of m, zero if absent.
  Rational coefficient(const Monomial& m) const;
  /// Terms in graded order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  /// Adds c * m; drops the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  /// Pointwise product.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.schema_ == b.schema_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_schema(const Polynomial& other) const;

  GroupSchema schema_;
  Terms terms_;
};

bool degree_at_most(const Polynomial& p, int k);

/// All monomials of weighted degree ≤ k in graded order; empty for k < 0.
std::vector<Monomial> pk_basis(const GroupSchema& schema, int k);

/// Number of monomials of weighted degree ≤ k.
std::size_t dim_pk(const GroupSchema& schema, int k);

/// Counts non-negative integer solutions of sum_j j * (x_{j,1} + ... + x_{j,d_j}) ≤ k
/// from the layer ranks alone, without enumerating monomials.
Integer count_weighted_solutions(std::span<const int> layer_ranks, int k);

/// Closed form for a 2-step group with layer ranks (d1, d2):
/// sum_{y=0}^{⌊k/2⌋} C(d2-1+y, d2-1) C(d1+k-2y, d1).
Integer dim_pk_two_step(int d1, int d2, int k);

Rational evaluate(const Polynomial& p, const GroupElement& g);

/// Coefficient vector of p over `basis`. Throws DimensionError if p has a
/// term outside the basis.
std::vector<Rational> coefficients_in(const Polynomial& p, std::span<const Monomial> basis);
Polynomial from_coefficients(const GroupSchema& schema, std::span<const Monomial> basis,
                             std::span<const Rational> coeffs);

/// Evaluates `count` functions at one point, writing into the output span.
using MultiEvaluator = std::function<void(const GroupElement&, std::span<Rational>)>;

/// Recovers the unique polynomials of weighted degree ≤ degree_bound that agree
/// with the given functions, by Newton forward differences over the staircase
/// {a : sum σ(i) a_i ≤ degree_bound + 1} of non-negative integer coordinate
/// vectors. Throws InterpolationError if a function needs the extra layer,
/// i.e. is not a polynomial of the claimed degree.
std::vector<Polynomial> interpolate(const GroupSchema& schema, int degree_bound, std::size_t count,
                                    const MultiEvaluator& eval);

Polynomial interpolate(const GroupSchema& schema, int degree_bound,
                       const std::function<Rational(const GroupElement&)>& f);

/// x ↦ p(u x)
Polynomial translate_left(const Polynomial& p, const GroupElement& u);
/// x ↦ p(x u)
Polynomial translate_right(const Polynomial& p, const GroupElement& u);
/// ∂_u p = x ↦ p(u x) - p(x)
Polynomial left_derivative(const Polynomial& p, const GroupElement& u);
/// ∂^u p = x ↦ p(x u) - p(x)
Polynomial right_derivative(const Polynomial& p, const GroupElement& u);

/// Integer square matrix stored row-major.
struct IntegerMatrix {
  std::size_t n = 0;
  std::vector<Integer> entries;

  const Integer& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

Integer determinant(const IntegerMatrix& m);

/// For p on lattice(d) and a non-singular integer matrix M, the polynomial
/// u ↦ p(M u) in the coordinates of the sublattice M Z^d. Throws
/// ValidationError for singular M or non-lattice schemas.
Polynomial restrict_to_sublattice(const Polynomial& p, const IntegerMatrix& m);

}  // namespace nilharm
