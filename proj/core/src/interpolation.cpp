#include <algorithm>
#include <limits>

#include "nilharm/errors.hpp"
#include "nilharm/polynomial.hpp"

namespace nilharm {

namespace {

constexpr std::size_t kMaxGridCells = std::size_t{1} << 26;
constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

/// Non-negative integer vectors a with sum σ(i) a_i ≤ bound, plus a dense
/// mixed-radix lookup from a to its position.
struct Staircase {
  std::vector<std::vector<int>> points;
  std::vector<int> extent;         // max exponent per axis
  std::vector<std::size_t> stride;  // mixed-radix strides
  std::vector<std::size_t> lookup;  // cell -> point index or kAbsent

  std::size_t cell(const std::vector<int>& a) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += stride[i] * static_cast<std::size_t>(a[i]);
    return c;
  }
};

void collect(const GroupSchema& schema, std::size_t i, int budget, std::vector<int>& a, Staircase& s) {
  if (i == schema.n_coords()) {
    s.lookup[s.cell(a)] = s.points.size();
    s.points.push_back(a);
    return;
  }
  for (int v = 0; v * schema.weight(i) <= budget; ++v) {
    a[i] = v;
    collect(schema, i + 1, budget - v * schema.weight(i), a, s);
  }
  a[i] = 0;
}

Staircase make_staircase(const GroupSchema& schema, int bound) {
  Staircase s;
  const std::size_t n = schema.n_coords();
  s.extent.resize(n);
  s.stride.resize(n);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s.extent[i] = bound / schema.weight(i);
    s.stride[i] = cells;
    cells *= static_cast<std::size_t>(s.extent[i]) + 1;
    if (cells > kMaxGridCells) throw ValidationError("interpolation grid too large for degree " + std::to_string(bound));
  }
  s.lookup.assign(cells, kAbsent);
  std::vector<int> a(n, 0);
  collect(schema, 0, bound, a, s);
  return s;
}

/// w[j][t] = s(j, t) / j!, the coefficient of x^t in binomial(x, j).
std::vector<std::vector<Rational>> binomial_to_power(int max_degree) {
  const auto size = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::vector<Integer>> stirling(size, std::vector<Integer>(size, Integer(0)));
  stirling[0][0] = 1;
  for (std::size_t j = 0; j + 1 < size; ++j) {
    for (std::size_t t = 0; t <= j + 1; ++t) {
      Integer v = -Integer(static_cast<unsigned long>(j)) * stirling[j][t];
      if (t > 0) v += stirling[j][t - 1];
      stirling[j + 1][t] = v;
    }
  }
  std::vector<std::vector<Rational>> w(size, std::vector<Rational>(size, Rational(0)));
  Integer factorial = 1;
  for (std::size_t j = 0; j < size; ++j) {
    if (j > 0) factorial *= static_cast<unsigned long>(j);
    for (std::size_t t = 0; t <= j; ++t) {
      w[j][t] = Rational(stirling[j][t], factorial);
      w[j][t].canonicalize();
    }
  }
  return w;
}

}  // namespace

std::vector<Polynomial> interpolate(const GroupSchema& schema, int degree_bound, std::size_t count,
                                    const MultiEvaluator& eval) {
  std::vector<Polynomial> out(count, Polynomial(schema));
  if (degree_bound < 0 || count == 0) {
    // Only the zero function has degree below zero; verify at the origin.
    if (count > 0) {
      std::vector<Rational> v(count);
      eval(identity(schema), v);
      for (const auto& x : v) {
        if (x != 0) throw InterpolationError("function is non-zero but claimed degree is negative");
      }
    }
    return out;
  }

  const int bound = degree_bound + 1;
  const Staircase grid = make_staircase(schema, bound);
  const std::size_t n = schema.n_coords();
  const std::size_t npts = grid.points.size();

  std::vector<Rational> values(npts * count);
  for (std::size_t p = 0; p < npts; ++p) {
    std::vector<Integer> coords(grid.points[p].begin(), grid.points[p].end());
    eval(GroupElement(std::move(coords)), std::span<Rational>(values.data() + p * count, count));
  }

  const int max_extent = *std::max_element(grid.extent.begin(), grid.extent.end());
  const auto w = binomial_to_power(max_extent);

  std::vector<std::size_t> line;
  auto for_each_line = [&](std::size_t axis, auto&& body) {
    for (std::size_t p = 0; p < npts; ++p) {
      if (grid.points[p][axis] != 0) continue;
      line.clear();
      std::vector<int> a = grid.points[p];
      while (a[axis] <= grid.extent[axis]) {
        const std::size_t idx = grid.lookup[grid.cell(a)];
        if (idx == kAbsent) break;
        line.push_back(idx);
        ++a[axis];
      }
      body();
    }
  };

  // Newton forward differences along every axis: values become the
  // coefficients of prod_i binomial(x_i, a_i).
  for (std::size_t axis = 0; axis < n; ++axis) {
    for_each_line(axis, [&] {
      const std::size_t len = line.size();
      for (std::size_t t = 1; t < len; ++t) {
        for (std::size_t j = len - 1; j >= t; --j) {
          for (std::size_t f = 0; f < count; ++f) {
            values[line[j] * count + f] -= values[line[j - 1] * count + f];
          }
        }
      }
    });
  }

  // Change of basis binomial(x, j) -> x^t along every axis.
  Rational acc;
  for (std::size_t axis = 0; axis < n; ++axis) {
    for_each_line(axis, [&] {
      const std::size_t len = line.size();
      for (std::size_t t = 0; t < len; ++t) {
        for (std::size_t f = 0; f < count; ++f) {
          acc = 0;
          for (std::size_t j = t; j < len; ++j) {
            if (w[j][t] != 0) acc += w[j][t] * values[line[j] * count + f];
          }
          values[line[t] * count + f] = acc;
        }
      }
    });
  }

  for (std::size_t p = 0; p < npts; ++p) {
    Monomial m{grid.points[p]};
    const bool top = weighted_degree(schema, m) > degree_bound;
    for (std::size_t f = 0; f < count; ++f) {
      const Rational& c = values[p * count + f];
      if (c == 0) continue;
      if (top) {
        throw InterpolationError("interpolated function exceeds degree " + std::to_string(degree_bound) +
                                 " on " + schema.name());
      }
      out[f].add_term(m, c);
    }
  }
  return out;
}

Polynomial interpolate(const GroupSchema& schema, int degree_bound,
                       const std::function<Rational(const GroupElement&)>& f) {
  auto polys = interpolate(schema, degree_bound, 1, [&](const GroupElement& x, std::span<Rational> out) {
    out[0] = f(x);
  });
  return std::move(polys.front());
}

}  // namespace nilharm
