#include "nilharm/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nilharm/errors.hpp"

namespace nilharm {

std::string family_name(Family f) {
  switch (f) {
    case Family::lattice: return "lattice";
    case Family::heisenberg: return "heisenberg";
    case Family::unitriangular: return "unitriangular";
  }
  return "unknown";
}

GroupSchema GroupSchema::lattice(int d) {
  if (d < 1) throw ValidationError("lattice dimension must be positive, got " + std::to_string(d));
  Data data{Family::lattice, d, {}, {d}, {}, {}, {}, {}};
  for (int i = 0; i < d; ++i) {
    data.weights.push_back(1);
    data.names.push_back("x" + std::to_string(i + 1));
    data.collection_order.push_back(static_cast<std::size_t>(i));
  }
  check_invariants(data);
  return GroupSchema(std::make_shared<const Data>(std::move(data)));
}

GroupSchema GroupSchema::heisenberg(int n) {
  if (n < 1) throw ValidationError("heisenberg parameter must be positive, got " + std::to_string(n));
  Data data{Family::heisenberg, n, {}, {2 * n, 1}, {}, {}, {}, {}};
  for (int i = 0; i < 2 * n; ++i) data.weights.push_back(1);
  data.weights.push_back(2);
  if (n == 1) {
    data.names = {"x", "y", "z"};
  } else {
    for (int i = 0; i < n; ++i) data.names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) data.names.push_back("y" + std::to_string(i + 1));
    data.names.push_back("z");
  }
  // y-block first: a product e_y^b e_x^a never produces a z term.
  for (int i = 0; i < n; ++i) data.collection_order.push_back(static_cast<std::size_t>(n + i));
  for (int i = 0; i < n; ++i) data.collection_order.push_back(static_cast<std::size_t>(i));
  data.collection_order.push_back(static_cast<std::size_t>(2 * n));
  check_invariants(data);
  return GroupSchema(std::make_shared<const Data>(std::move(data)));
}

GroupSchema GroupSchema::unitriangular(int n) {
  if (n < 2) throw ValidationError("unitriangular size must be at least 2, got " + std::to_string(n));
  Data data{Family::unitriangular, n, {}, {}, {}, {}, {}, {}};
  data.entry_index.assign(static_cast<std::size_t>(n * n), static_cast<std::size_t>(-1));
  for (int w = 1; w < n; ++w) {
    data.layer_ranks.push_back(n - w);
    for (int i = 0; i + w < n; ++i) {
      const int j = i + w;
      data.entry_index[static_cast<std::size_t>(i * n + j)] = data.weights.size();
      data.weights.push_back(w);
      data.entries.emplace_back(i, j);
      data.names.push_back(n <= 9 ? "a_" + std::to_string(i + 1) + std::to_string(j + 1)
                                  : "a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  }
  // Rows from the bottom up: (I + A)(I + B) has no cross term when A sits
  // in rows below every row of B.
  for (int i = n - 2; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      data.collection_order.push_back(data.entry_index[static_cast<std::size_t>(i * n + j)]);
    }
  }
  check_invariants(data);
  return GroupSchema(std::make_shared<const Data>(std::move(data)));
}

void GroupSchema::check_invariants(const Data& d) {
  if (d.weights.empty() || d.weights.front() != 1) {
    throw InvariantError("schema must start with a weight-1 coordinate");
  }
  if (!std::is_sorted(d.weights.begin(), d.weights.end())) {
    throw InvariantError("schema weights must be non-decreasing");
  }
  const int step = static_cast<int>(d.layer_ranks.size());
  std::size_t total = 0;
  for (int j = 1; j <= step; ++j) {
    const auto count = std::count(d.weights.begin(), d.weights.end(), j);
    if (count != d.layer_ranks[static_cast<std::size_t>(j - 1)]) {
      throw InvariantError("layer rank mismatch at weight " + std::to_string(j));
    }
    total += static_cast<std::size_t>(count);
  }
  if (total != d.weights.size() || d.weights.back() > step) {
    throw InvariantError("layer ranks do not cover the coordinates");
  }
}

int GroupSchema::rank() const {
  int r = 0;
  for (int d : layer_ranks()) r += d;
  return r;
}

int GroupSchema::homogeneous_dimension() const {
  int D = 0;
  for (std::size_t j = 0; j < layer_ranks().size(); ++j) D += static_cast<int>(j + 1) * layer_ranks()[j];
  return D;
}

std::string GroupSchema::name() const {
  return family_name(family()) + "(" + std::to_string(parameter()) + ")";
}

GroupElement::GroupElement(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool GroupElement::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const GroupElement& g) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i].get_str();
  out << ')';
  return out.str();
}

void check_conforms(const GroupSchema& schema, const GroupElement& g) {
  if (g.size() != schema.n_coords()) {
    throw DimensionError("element " + to_string(g) + " has " + std::to_string(g.size()) +
                         " coordinates; " + schema.name() + " needs " +
                         std::to_string(schema.n_coords()));
  }
}

GroupElement identity(const GroupSchema& schema) {
  return GroupElement(std::vector<Integer>(schema.n_coords(), Integer(0)));
}

GroupElement mul(const GroupSchema& schema, const GroupElement& g, const GroupElement& h) {
  check_conforms(schema, g);
  check_conforms(schema, h);
  const std::size_t n = schema.n_coords();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = g[i] + h[i];
  switch (schema.family()) {
    case Family::lattice:
      break;
    case Family::heisenberg: {
      const auto m = static_cast<std::size_t>(schema.parameter());
      for (std::size_t i = 0; i < m; ++i) out[2 * m] += g[i] * h[m + i];
      break;
    }
    case Family::unitriangular: {
      // (gh)_ij = g_ij + h_ij + sum_{i<k<j} g_ik h_kj
      for (std::size_t c = 0; c < n; ++c) {
        const auto [i, j] = schema.matrix_entry(c);
        for (int k = i + 1; k < j; ++k) {
          out[c] += g[schema.coordinate_of(i, k)] * h[schema.coordinate_of(k, j)];
        }
      }
      break;
    }
  }
  return GroupElement(std::move(out));
}

GroupElement inv(const GroupSchema& schema, const GroupElement& g) {
  check_conforms(schema, g);
  const std::size_t n = schema.n_coords();
  std::vector<Integer> out(n);
  switch (schema.family()) {
    case Family::lattice:
      for (std::size_t i = 0; i < n; ++i) out[i] = -g[i];
      break;
    case Family::heisenberg: {
      const auto m = static_cast<std::size_t>(schema.parameter());
      for (std::size_t i = 0; i < 2 * m; ++i) out[i] = -g[i];
      out[2 * m] = -g[2 * m];
      for (std::size_t i = 0; i < m; ++i) out[2 * m] += g[i] * g[m + i];
      break;
    }
    case Family::unitriangular:
      // Solve (g h)_ij = 0 in weight order; h_kj with k > i is already known.
      for (std::size_t c = 0; c < n; ++c) {
        const auto [i, j] = schema.matrix_entry(c);
        out[c] = -g[c];
        for (int k = i + 1; k < j; ++k) {
          out[c] -= g[schema.coordinate_of(i, k)] * out[schema.coordinate_of(k, j)];
        }
      }
      break;
  }
  return GroupElement(std::move(out));
}

GroupElement basis_element(const GroupSchema& schema, std::size_t i, const Integer& power) {
  if (i >= schema.n_coords()) {
    throw DimensionError("basis index " + std::to_string(i + 1) + " out of range 1.." +
                         std::to_string(schema.n_coords()));
  }
  GroupElement e = identity(schema);
  e[i] = power;
  return e;
}

GroupElement power(const GroupSchema& schema, const GroupElement& g, long n) {
  GroupElement base = n < 0 ? inv(schema, g) : g;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  GroupElement acc = identity(schema);
  while (e) {
    if (e & 1UL) acc = mul(schema, acc, base);
    e >>= 1;
    if (e) base = mul(schema, base, base);
  }
  return acc;
}

GroupElement product(const GroupSchema& schema, std::span<const GroupElement> factors) {
  GroupElement acc = identity(schema);
  for (const auto& f : factors) acc = mul(schema, acc, f);
  return acc;
}

std::vector<BallEntry> ball_with_distances(const GroupSchema& schema,
                                           std::span<const GroupElement> support, int radius) {
  if (radius < 0) throw ValidationError("ball radius must be non-negative");
  const std::set<GroupElement> support_set(support.begin(), support.end());
  for (const auto& s : support_set) {
    check_conforms(schema, s);
    if (!support_set.contains(inv(schema, s))) {
      throw ValidationError("support is not symmetric: inverse of " + to_string(s) + " missing");
    }
  }

  std::vector<BallEntry> out{{identity(schema), 0}};
  std::set<GroupElement> seen{out.front().element};
  std::vector<GroupElement> frontier{out.front().element};
  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    std::set<GroupElement> shell;
    for (const auto& x : frontier) {
      for (const auto& s : support_set) {
        GroupElement y = mul(schema, x, s);
        if (!seen.contains(y)) shell.insert(std::move(y));
      }
    }
    frontier.assign(shell.begin(), shell.end());
    for (const auto& y : frontier) {
      seen.insert(y);
      out.push_back({y, r});
    }
  }
  return out;
}

std::vector<GroupElement> ball(const GroupSchema& schema, std::span<const GroupElement> support,
                               int radius) {
  std::vector<GroupElement> out;
  for (auto& e : ball_with_distances(schema, support, radius)) out.push_back(std::move(e.element));
  return out;
}

std::vector<GroupElement> standard_generators(const GroupSchema& schema) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < schema.n_coords(); ++i) {
    if (schema.weight(i) != 1) continue;
    out.push_back(basis_element(schema, i, 1));
    out.push_back(basis_element(schema, i, -1));
  }
  return out;
}

CoordinateOrderCheck check_coordinate_order(const GroupSchema& schema, const GroupElement& g,
                                            const GroupElement& u) {
  CoordinateOrderCheck result;
  check_conforms(schema, g);
  check_conforms(schema, u);
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] != 0) {
      result.first_nonzero = j;
      break;
    }
  }
  if (!result.first_nonzero) return result;
  const std::size_t j = *result.first_nonzero;
  const GroupElement gu = mul(schema, g, u);
  for (std::size_t i = 0; i < j; ++i) result.per_index.push_back(gu[i] == g[i]);
  result.per_index.push_back(gu[j] == g[j] + u[j]);
  result.pass = std::all_of(result.per_index.begin(), result.per_index.end(), [](bool b) { return b; });
  return result;
}

}  // namespace nilharm
