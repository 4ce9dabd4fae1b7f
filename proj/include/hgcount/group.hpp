#pragma once

// Finite groups stored as dense multiplication tables.
//
// Elements are the indices 0..order-1 and the identity is always index 0.
// Every FiniteGroup is validated on construction: identity row and column,
// Latin-square rows/columns, two-sided inverses and associativity (full scan up
// to order 60, 10^5 sampled triples beyond that).

#include "hgcount/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hgcount {

inline constexpr int kFullAssociativityScanLimit = 60;
inline constexpr int kSampledAssociativityTriples = 100000;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds and validates a group from a row-major table (`table[x * order + y] = x*y`).
  static FiniteGroup from_table(std::string name, int order, std::vector<int> table) {
    FiniteGroup group;
    group.name_ = std::move(name);
    group.order_ = order;
    group.table_ = std::move(table);
    group.validate();
    return group;
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] static constexpr int identity() { return 0; }

  [[nodiscard]] int mul(int x, int y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  [[nodiscard]] int inv(int x) const { return inverse_[x]; }
  [[nodiscard]] const std::vector<int>& table() const { return table_; }

  [[nodiscard]] int power(int x, long long k) const {
    if (k < 0) {
      x = inv(x);
      k = -k;
    }
    int result = identity();
    int base = x;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  [[nodiscard]] int element_order(int x) const {
    int k = 1;
    for (int y = x; y != identity(); y = mul(y, x)) ++k;
    return k;
  }

  [[nodiscard]] int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

  [[nodiscard]] bool commute(int x, int y) const { return mul(x, y) == mul(y, x); }

  [[nodiscard]] bool is_abelian() const {
    for (int x = 0; x < order_; ++x)
      for (int y = x + 1; y < order_; ++y)
        if (!commute(x, y)) return false;
    return true;
  }

 private:
  void validate() {
    if (order_ <= 0) throw InputError("group order must be positive");
    const auto m = static_cast<std::size_t>(order_);
    if (table_.size() != m * m)
      throw InputError("table has " + std::to_string(table_.size()) + " entries, expected " +
                       std::to_string(m * m));
    for (int v : table_)
      if (v < 0 || v >= order_)
        throw InputError("table entry " + std::to_string(v) + " out of range");
    for (int x = 0; x < order_; ++x) {
      if (mul(0, x) != x || mul(x, 0) != x)
        throw InputError("identity axiom violated: index 0 is not the identity at x=" +
                         std::to_string(x));
    }
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(m);
    for (int x = 0; x < order_; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int y = 0; y < order_; ++y) {
        int v = mul(x, y);
        if (seen[v]) throw InputError("inverse axiom violated: row " + std::to_string(x) +
                                      " repeats element " + std::to_string(v));
        seen[v] = 1;
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (int y = 0; y < order_; ++y) {
        int v = mul(y, x);
        if (seen[v]) throw InputError("inverse axiom violated: column " + std::to_string(x) +
                                      " repeats element " + std::to_string(v));
        seen[v] = 1;
      }
    }
    inverse_.assign(m, -1);
    for (int x = 0; x < order_; ++x) {
      for (int y = 0; y < order_; ++y) {
        if (mul(x, y) == 0) {
          if (mul(y, x) != 0)
            throw InputError("inverse axiom violated: x=" + std::to_string(x) +
                             " has no two-sided inverse");
          inverse_[x] = y;
          break;
        }
      }
    }
    auto check = [&](int x, int y, int z) {
      if (mul(mul(x, y), z) != mul(x, mul(y, z)))
        throw InputError("associativity violated at (x,y,z)=(" + std::to_string(x) + "," +
                         std::to_string(y) + "," + std::to_string(z) + ")");
    };
    if (order_ <= kFullAssociativityScanLimit) {
      for (int x = 0; x < order_; ++x)
        for (int y = 0; y < order_; ++y)
          for (int z = 0; z < order_; ++z) check(x, y, z);
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<int> pick(0, order_ - 1);
      for (int t = 0; t < kSampledAssociativityTriples; ++t) check(pick(rng), pick(rng), pick(rng));
    }
  }

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// ---------------------------------------------------------------------------
// Subgroups and generation

/// Closure of `generators` under a binary operation with the given identity.
/// Returns the generated elements sorted ascending.
template <class Elem, class Mul>
std::vector<Elem> generate_closure(const Elem& identity, const std::vector<Elem>& generators,
                                   Mul mul) {
  std::vector<Elem> elements{identity};
  std::vector<Elem> sorted{identity};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Elem next = mul(elements[head], g);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), next);
      if (it == sorted.end() || *it != next) {
        sorted.insert(it, next);
        elements.push_back(next);
      }
    }
  }
  return sorted;
}

inline std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  return generate_closure<int>(0, gens, [&](int x, int y) { return g.mul(x, y); });
}

/// Greedy generating sequence: repeatedly add the lowest-index element that
/// enlarges the generated subgroup.
inline std::vector<int> generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<char> in_subgroup(g.order(), 0);
  in_subgroup[0] = 1;
  int covered = 1;
  for (int x = 1; x < g.order() && covered < g.order(); ++x) {
    if (in_subgroup[x]) continue;
    gens.push_back(x);
    auto sub = generated_subgroup(g, gens);
    for (int y : sub) in_subgroup[y] = 1;
    covered = static_cast<int>(sub.size());
  }
  return gens;
}

inline std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.push_back(x);
  }
  return z;
}

/// Smallest normal subgroup containing `elements`.
inline std::vector<int> normal_closure(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> conjugates;
  for (int x : elements)
    for (int h = 0; h < g.order(); ++h) conjugates.push_back(g.conjugate(h, x));
  std::sort(conjugates.begin(), conjugates.end());
  conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
  return generated_subgroup(g, conjugates);
}

/// Brute-force simplicity: every non-identity element has normal closure G.
inline bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (int x = 1; x < g.order(); ++x)
    if (static_cast<int>(normal_closure(g, {x}).size()) != g.order()) return false;
  return true;
}

/// Subgroup generated by all commutators of elements of `subset` (a subgroup).
inline std::vector<int> commutator_subgroup(const FiniteGroup& g, const std::vector<int>& subset) {
  std::vector<int> commutators;
  for (int x : subset)
    for (int y : subset) commutators.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return generated_subgroup(g, commutators);
}

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

using Perm = std::vector<int>;

inline Perm compose_perm(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline FiniteGroup group_from_permutations(std::string name, const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  auto elements = generate_closure<Perm>(id, gens, compose_perm);
  // Sorted lexicographically, so the identity permutation lands at index 0.
  const int m = static_cast<int>(elements.size());
  std::map<Perm, int> index;
  for (int i = 0; i < m; ++i) index.emplace(elements[i], i);
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) table[static_cast<std::size_t>(x) * m + y] =
        index.at(compose_perm(elements[x], elements[y]));
  return FiniteGroup::from_table(std::move(name), m, std::move(table));
}

inline Perm cycle_perm(int degree, const std::vector<int>& cycle) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

inline FiniteGroup quaternion_group() {
  // Element 2*u + s encodes (-1)^s * unit[u] with units 1, i, j, k.
  static constexpr int kUnitProduct[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kUnitSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ux = x / 2, sx = x % 2, uy = y / 2, sy = y % 2;
      int sign = (sx + sy + kUnitSign[ux][uy]) % 2;
      table[x * 8 + y] = 2 * kUnitProduct[ux][uy] + sign;
    }
  return FiniteGroup::from_table("q8", 8, std::move(table));
}

}  // namespace detail

inline FiniteGroup cyclic_group(int m) {
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) table[static_cast<std::size_t>(x) * m + y] = (x + y) % m;
  return FiniteGroup::from_table("c" + std::to_string(m), m, std::move(table));
}

inline FiniteGroup symmetric_group(int degree) {
  using detail::cycle_perm;
  std::vector<detail::Perm> gens{cycle_perm(degree, {0, 1})};
  std::vector<int> full(degree);
  std::iota(full.begin(), full.end(), 0);
  gens.push_back(cycle_perm(degree, full));
  return detail::group_from_permutations("s" + std::to_string(degree), gens);
}

inline FiniteGroup alternating_group(int degree) {
  using detail::cycle_perm;
  std::vector<detail::Perm> gens;
  for (int k = 2; k < degree; ++k) gens.push_back(cycle_perm(degree, {0, 1, k}));
  return detail::group_from_permutations("a" + std::to_string(degree), gens);
}

inline FiniteGroup dihedral_group(int polygon) {
  using detail::cycle_perm;
  std::vector<int> rotation(polygon);
  std::iota(rotation.begin(), rotation.end(), 0);
  detail::Perm reflection(polygon);
  for (int i = 0; i < polygon; ++i) reflection[i] = (polygon - i) % polygon;
  return detail::group_from_permutations("d" + std::to_string(polygon),
                                         {cycle_perm(polygon, rotation), reflection});
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int m = 2; m <= 12; ++m) names.push_back("c" + std::to_string(m));
  for (const char* n : {"s3", "s4", "s5", "d4", "d5", "q8", "a4", "a5"}) names.emplace_back(n);
  return names;
}

/// Group from the built-in catalog; throws InputError for unknown names.
inline FiniteGroup catalog_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'c') {
    try {
      std::size_t used = 0;
      int m = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && m >= 2 && m <= 12) return cyclic_group(m);
    } catch (const std::exception&) {
    }
  }
  if (name == "s3") return symmetric_group(3);
  if (name == "s4") return symmetric_group(4);
  if (name == "s5") return symmetric_group(5);
  if (name == "d4") return dihedral_group(4);
  if (name == "d5") return dihedral_group(5);
  if (name == "q8") return detail::quaternion_group();
  if (name == "a4") return alternating_group(4);
  if (name == "a5") return alternating_group(5);
  throw InputError("unknown catalog group '" + name + "'");
}

// ---------------------------------------------------------------------------
// Cayley-table text format: line 1 = order m, then m rows of m indices.

inline FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  long long order = 0;
  if (!(in >> order) || order <= 0 || order > 4096)
    throw InputError("malformed table file: first line must be the group order");
  const auto m = static_cast<std::size_t>(order);
  std::vector<int> table;
  table.reserve(m * m);
  std::string line;
  std::getline(in, line);
  for (std::size_t row = 0; row < m; ++row) {
    if (!std::getline(in, line))
      throw InputError("malformed table file: missing row " + std::to_string(row));
    std::istringstream fields(line);
    std::vector<int> values;
    std::string token;
    while (fields >> token) {
      try {
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        values.push_back(v);
      } catch (const std::exception&) {
        throw InputError("malformed table file: bad entry '" + token + "' in row " +
                         std::to_string(row));
      }
    }
    if (values.size() != m)
      throw InputError("malformed table file: row " + std::to_string(row) + " has " +
                       std::to_string(values.size()) + " entries, expected " + std::to_string(m));
    table.insert(table.end(), values.begin(), values.end());
  }
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw InputError("malformed table file: trailing content after row " + std::to_string(m - 1));
  return FiniteGroup::from_table(std::move(name), static_cast<int>(order), std::move(table));
}

inline void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.mul(x, y);
    out << '\n';
  }
}

/// Catalog name, or else a path to a Cayley-table file.
inline FiniteGroup load_group(const std::string& source) {
  for (const auto& name : catalog_names())
    if (name == source) return catalog_group(source);
  std::ifstream file(source);
  if (!file) throw InputError("'" + source + "' is neither a catalog group nor a readable file");
  return read_cayley_table(file, source);
}

// ---------------------------------------------------------------------------
// Direct powers

/// Mixed-radix index of a coordinate vector; coordinate 0 is the least significant digit.
inline std::size_t encode_power(int base, const std::vector<int>& coords) {
  std::size_t code = 0;
  for (std::size_t i = coords.size(); i-- > 0;) code = code * base + coords[i];
  return code;
}

inline std::vector<int> decode_power(int base, int n, std::size_t code) {
  std::vector<int> coords(n);
  for (int i = 0; i < n; ++i) {
    coords[i] = static_cast<int>(code % base);
    code /= base;
  }
  return coords;
}

inline constexpr std::size_t kDirectPowerTableLimit = 4096;

/// T^n as a table group, elements indexed by encode_power.
inline FiniteGroup direct_power(const FiniteGroup& t, int n) {
  if (n < 1) throw PreconditionError("direct power needs n >= 1");
  std::size_t m = 1;
  for (int i = 0; i < n; ++i) {
    m *= t.order();
    if (m > kDirectPowerTableLimit)
      throw BudgetExceeded("direct power table of order > " +
                           std::to_string(kDirectPowerTableLimit));
  }
  std::vector<int> table(m * m);
  std::vector<int> prod(n);
  for (std::size_t x = 0; x < m; ++x) {
    auto cx = decode_power(t.order(), n, x);
    for (std::size_t y = 0; y < m; ++y) {
      auto cy = decode_power(t.order(), n, y);
      for (int i = 0; i < n; ++i) prod[i] = t.mul(cx[i], cy[i]);
      table[x * m + y] = static_cast<int>(encode_power(t.order(), prod));
    }
  }
  return FiniteGroup::from_table(t.name() + "^" + std::to_string(n), static_cast<int>(m),
                                 std::move(table));
}

}  // namespace hgcount
