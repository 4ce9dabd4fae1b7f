#pragma once

// Pair-graphs of endomorphism pairs and labelled-tree enumeration.
//
// The undirected multigraph on vertices {0..n} has one edge e_i joining u_i and
// v_i per coordinate i. For a pair (f, g) of structured endomorphisms the
// directed multigraph carries an arrow a_i: θ_f(i) -> θ_g(i) when φ_{g,i} is
// bijective and an arrow b_i: θ_g(i) -> θ_f(i) when φ_{f,i} is bijective.
// Arrow a_i realizes γ = φ_{g,i}^-1 ∘ φ_{f,i}, arrow b_i realizes φ_{f,i}^-1 ∘ φ_{g,i}.

#include "hgcount/bigint.hpp"
#include "hgcount/error.hpp"
#include "hgcount/structured_endo.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hgcount {

struct UndirectedPairGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // edges[i-1] = e_i

  [[nodiscard]] int vertex_count() const { return n + 1; }
  bool operator==(const UndirectedPairGraph&) const = default;
};

enum class ArrowKind { a, b };

struct Arrow {
  int label = 0;  // coordinate i in 1..n
  ArrowKind kind = ArrowKind::a;
  int tail = 0;
  int head = 0;

  auto operator<=>(const Arrow&) const = default;
};

inline std::string to_string(const Arrow& arrow) {
  return (arrow.kind == ArrowKind::a ? "a" : "b") + std::to_string(arrow.label);
}

struct DirectedPairGraph {
  int n = 0;
  std::vector<Arrow> arrows;  // sorted by (label, kind)

  bool operator==(const DirectedPairGraph&) const = default;
};

inline UndirectedPairGraph build_undirected(std::span<const int> mu, std::span<const int> nu) {
  if (mu.size() != nu.size()) throw InputError("tuples must have the same length");
  const int n = static_cast<int>(mu.size());
  UndirectedPairGraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    if (mu[i] < 0 || mu[i] > n || nu[i] < 0 || nu[i] > n)
      throw InputError("tuple entry at position " + std::to_string(i + 1) + " outside 0.." +
                       std::to_string(n));
    g.edges.emplace_back(mu[i], nu[i]);
  }
  return g;
}

inline UndirectedPairGraph build_undirected(const StructuredEndo& f, const StructuredEndo& g) {
  return build_undirected(f.theta, g.theta);
}

/// Loops at 0 vanish, an edge {0, i} becomes 0 -> i, an edge {i, j} (i, j ≠ 0) becomes i <-> j.
inline DirectedPairGraph orient(const UndirectedPairGraph& g) {
  DirectedPairGraph d{g.n, {}};
  for (int i = 1; i <= g.n; ++i) {
    auto [u, v] = g.edges[i - 1];
    if (v != 0) d.arrows.push_back(Arrow{i, ArrowKind::a, u, v});
    if (u != 0) d.arrows.push_back(Arrow{i, ArrowKind::b, v, u});
  }
  return d;
}

inline DirectedPairGraph build_directed(const StructuredEndo& f, const StructuredEndo& g) {
  const int n = f.rank();
  DirectedPairGraph d{n, {}};
  for (int i = 1; i <= n; ++i) {
    int tf = f.theta[i - 1];
    int tg = g.theta[i - 1];
    if (g.phi[i - 1] != kTrivialPhi) d.arrows.push_back(Arrow{i, ArrowKind::a, tf, tg});
    if (f.phi[i - 1] != kTrivialPhi) d.arrows.push_back(Arrow{i, ArrowKind::b, tg, tf});
  }
  return d;
}

inline void dump(std::ostream& out, const UndirectedPairGraph& g) {
  for (int i = 1; i <= g.n; ++i)
    out << 'e' << i << '\t' << g.edges[i - 1].first << '\t' << g.edges[i - 1].second << '\n';
}

inline void dump(std::ostream& out, const DirectedPairGraph& d) {
  for (const auto& a : d.arrows) out << to_string(a) << '\t' << a.tail << '\t' << a.head << '\n';
}

// ---------------------------------------------------------------------------
// Components and trees

struct Component {
  std::vector<int> vertices;     // ascending
  std::vector<int> edge_labels;  // ascending

  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices.size()); }
  [[nodiscard]] int edge_count() const { return static_cast<int>(edge_labels.size()); }
  [[nodiscard]] bool contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  [[nodiscard]] bool is_tree() const { return edge_count() == vertex_count() - 1; }
  [[nodiscard]] bool is_unicyclic() const { return edge_count() == vertex_count(); }
};

/// Connected components ordered by lowest vertex (so the 0-component is first).
inline std::vector<Component> components(const UndirectedPairGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::vector<int> slot(g.vertex_count(), -1);
  std::vector<Component> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(v);
  }
  for (int i = 1; i <= g.n; ++i) out[slot[find(g.edges[i - 1].first)]].edge_labels.push_back(i);
  return out;
}

inline int graph_degree(const UndirectedPairGraph& g, int vertex) {
  int d = 0;
  for (auto [u, v] : g.edges) d += (u == vertex) + (v == vertex);
  return d;
}

/// Some simple cycle exists (loops and parallel edges count as cycles).
inline bool has_cycle(const UndirectedPairGraph& g) {
  for (const auto& c : components(g))
    if (c.edge_count() >= c.vertex_count()) return true;
  return false;
}

/// Γ with n+1 vertices and n edges is a tree iff it is connected.
inline bool is_tree(const UndirectedPairGraph& g) {
  bool connected = components(g).size() == 1;
  if (connected == has_cycle(g))
    throw std::logic_error("tree test disagreement: connectivity vs cycle check");
  return connected;
}

/// d(μ,ν) = #{i : u_i = 0} + #{i : v_i = 0}.
inline int degree_of_vertex0(std::span<const int> mu, std::span<const int> nu) {
  int d = static_cast<int>(std::count(mu.begin(), mu.end(), 0) + std::count(nu.begin(), nu.end(), 0));
  int graph = graph_degree(build_undirected(mu, nu), 0);
  if (d != graph) throw std::logic_error("vertex-0 degree formula disagrees with graph degree");
  return d;
}

// ---------------------------------------------------------------------------
// Directed paths and γ maps

/// Composed map of a directed path, as a table T^(source) -> T^(target).
struct PathMap {
  std::vector<Arrow> path;  // in traversal order: path[0] is applied first
  int source = 0;
  int target = 0;
  std::vector<int> table;

  [[nodiscard]] int operator()(int x) const { return table[x]; }
};

/// Table of γ for one arrow of Γ_(f,g).
inline std::vector<int> arrow_map(const PowerContext& ctx, const StructuredEndo& f,
                                  const StructuredEndo& g, const Arrow& arrow) {
  const auto& auts = ctx.auts();
  const int t = ctx.factor().order();
  const int i = arrow.label - 1;
  int from_phi = arrow.kind == ArrowKind::a ? f.phi[i] : g.phi[i];
  int to_phi = arrow.kind == ArrowKind::a ? g.phi[i] : f.phi[i];
  if (to_phi == kTrivialPhi) throw PreconditionError("arrow " + to_string(arrow) + " is absent");
  std::vector<int> table(t, 0);
  if (from_phi == kTrivialPhi) return table;  // source is T^(0)
  int gamma = auts.compose(auts.inverse(to_phi), from_phi);
  for (int x = 0; x < t; ++x) table[x] = auts.apply(gamma, x);
  return table;
}

/// Checks that `arrow` is present in Γ_(f,g).
inline bool has_arrow(const StructuredEndo& f, const StructuredEndo& g, const Arrow& arrow) {
  if (arrow.label < 1 || arrow.label > f.rank()) return false;
  const int i = arrow.label - 1;
  if (arrow.kind == ArrowKind::a)
    return g.phi[i] != kTrivialPhi && arrow.tail == f.theta[i] && arrow.head == g.theta[i];
  return f.phi[i] != kTrivialPhi && arrow.tail == g.theta[i] && arrow.head == f.theta[i];
}

/// γ of a directed path; an empty path at `start` is the identity on T^(start).
inline PathMap gamma_of_path(const PowerContext& ctx, const StructuredEndo& f,
                             const StructuredEndo& g, std::span<const Arrow> path, int start) {
  const int t = ctx.factor().order();
  PathMap pm{{path.begin(), path.end()}, start, start, std::vector<int>(t)};
  std::iota(pm.table.begin(), pm.table.end(), 0);
  if (start == 0) std::fill(pm.table.begin(), pm.table.end(), 0);
  int at = start;
  for (const auto& arrow : path) {
    if (!has_arrow(f, g, arrow))
      throw PreconditionError("arrow " + to_string(arrow) + " is not in the directed pair-graph");
    if (arrow.tail != at)
      throw PreconditionError("path is not composable at arrow " + to_string(arrow));
    auto step = arrow_map(ctx, f, g, arrow);
    for (auto& v : pm.table) v = step[v];
    at = arrow.head;
  }
  pm.target = at;
  return pm;
}

inline PathMap gamma_of_path(const PowerContext& ctx, const StructuredEndo& f,
                             const StructuredEndo& g, std::span<const Arrow> path) {
  if (path.empty()) throw PreconditionError("empty path needs an explicit start vertex");
  return gamma_of_path(ctx, f, g, path, path.front().tail);
}

/// Shortest directed path from `from` to `to` (BFS, arrows tried in (label, kind) order).
inline std::vector<Arrow> find_directed_path(const DirectedPairGraph& d, int from, int to) {
  const int vcount = d.n + 1;
  std::vector<int> via(vcount, -1);
  std::vector<char> seen(vcount, 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (std::size_t k = 0; k < d.arrows.size(); ++k) {
      const auto& a = d.arrows[k];
      if (a.tail != v || seen[a.head]) continue;
      seen[a.head] = 1;
      via[a.head] = static_cast<int>(k);
      queue.push_back(a.head);
    }
  }
  if (!seen[to])
    throw PreconditionError("vertex " + std::to_string(to) + " unreachable from " +
                            std::to_string(from));
  std::vector<Arrow> path;
  for (int v = to; v != from; v = d.arrows[via[v]].tail) path.push_back(d.arrows[via[v]]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// The two orientations q, q^-1 of the unique simple cycle of a unicyclic component.
struct SimpleCycle {
  int base = 0;
  std::vector<Arrow> forward;   // q, traversal order
  std::vector<Arrow> backward;  // q^-1, traversal order
};

/// Arrow traversing edge `label` from `from` (a_i when from = θ_f(i), else b_i).
inline Arrow traverse(const UndirectedPairGraph& g, int label, int from, bool prefer_a = true) {
  auto [u, v] = g.edges[label - 1];
  if (u == v) return Arrow{label, prefer_a ? ArrowKind::a : ArrowKind::b, u, u};
  if (u == from) return Arrow{label, ArrowKind::a, u, v};
  return Arrow{label, ArrowKind::b, v, u};
}

/// Extracts the simple cycle of a unicyclic component, based at its lowest
/// cycle vertex; the forward orientation leaves the base along the
/// lower-labelled cycle edge.
inline SimpleCycle find_simple_cycle(const UndirectedPairGraph& g, const Component& c) {
  if (!c.is_unicyclic())
    throw PreconditionError("component is not unicyclic (" + std::to_string(c.vertex_count()) +
                            " vertices, " + std::to_string(c.edge_count()) + " edges)");
  if (c.contains(0)) throw PreconditionError("cycle extraction needs a component without vertex 0");
  // Strip leaves until only the cycle remains.
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<char> alive_edge(g.n + 1, 0);
  for (int label : c.edge_labels) {
    alive_edge[label] = 1;
    auto [u, v] = g.edges[label - 1];
    ++degree[u];
    ++degree[v];
  }
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int label : c.edge_labels) {
      if (!alive_edge[label]) continue;
      auto [u, v] = g.edges[label - 1];
      if (u != v && (degree[u] == 1 || degree[v] == 1)) {
        alive_edge[label] = 0;
        --degree[u];
        --degree[v];
        stripped = true;
      }
    }
  }
  std::vector<int> cycle_edges;
  for (int label : c.edge_labels)
    if (alive_edge[label]) cycle_edges.push_back(label);
  int base = g.vertex_count();
  for (int label : cycle_edges) base = std::min({base, g.edges[label - 1].first, g.edges[label - 1].second});

  SimpleCycle cyc{base, {}, {}};
  if (cycle_edges.size() == 1) {
    cyc.forward.push_back(traverse(g, cycle_edges[0], base, true));
    cyc.backward.push_back(traverse(g, cycle_edges[0], base, false));
    return cyc;
  }
  std::vector<char> used(g.n + 1, 0);
  int at = base;
  for (std::size_t step = 0; step < cycle_edges.size(); ++step) {
    int next_label = -1;
    for (int label : cycle_edges) {
      if (used[label]) continue;
      auto [u, v] = g.edges[label - 1];
      if (u == at || v == at) {
        next_label = label;
        break;
      }
    }
    used[next_label] = 1;
    Arrow arrow = traverse(g, next_label, at);
    cyc.forward.push_back(arrow);
    at = arrow.head;
  }
  for (auto it = cyc.forward.rbegin(); it != cyc.forward.rend(); ++it)
    cyc.backward.push_back(Arrow{it->label, it->kind == ArrowKind::a ? ArrowKind::b : ArrowKind::a,
                                 it->head, it->tail});
  return cyc;
}

// ---------------------------------------------------------------------------
// Labelled trees on {0..n} via Prüfer sequences (remove smallest leaf, record neighbor).

inline UndirectedPairGraph prufer_decode(int n, std::span<const int> seq) {
  const int m = n + 1;
  if (static_cast<int>(seq.size()) != std::max(0, m - 2))
    throw InputError("Prüfer sequence for " + std::to_string(m) + " vertices must have length " +
                     std::to_string(m - 2));
  std::vector<int> degree(m, 1);
  for (int s : seq) {
    if (s < 0 || s >= m) throw InputError("Prüfer symbol out of range");
    ++degree[s];
  }
  UndirectedPairGraph tree{n, {}};
  for (int s : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    tree.edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    --degree[leaf];
    --degree[s];
  }
  std::vector<int> rest;
  for (int v = 0; v < m; ++v)
    if (degree[v] == 1) rest.push_back(v);
  if (m >= 2) tree.edges.emplace_back(rest[0], rest[1]);
  return tree;
}

inline std::vector<int> prufer_encode(const UndirectedPairGraph& tree) {
  const int m = tree.vertex_count();
  std::vector<std::vector<int>> adj(m);
  for (auto [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> degree(m);
  for (int v = 0; v < m; ++v) degree[v] = static_cast<int>(adj[v].size());
  std::vector<char> removed(m, 0);
  std::vector<int> seq;
  for (int step = 0; step + 2 < m; ++step) {
    int leaf = 0;
    while (removed[leaf] || degree[leaf] != 1) ++leaf;
    removed[leaf] = 1;
    for (int w : adj[leaf])
      if (!removed[w]) {
        seq.push_back(w);
        --degree[w];
      }
  }
  return seq;
}

/// Streams every labelled tree on {0..n}; `visit(tree, prufer)` returns false to stop.
template <class Visit>
void for_each_labelled_tree(int n, Visit visit) {
  if (n < 1) throw PreconditionError("tree enumeration needs n >= 1");
  std::vector<int> seq(n - 1, 0);
  std::vector<int> radix(n - 1, n + 1);
  do {
    if (!visit(prufer_decode(n, seq), std::as_const(seq))) return;
  } while (detail::next_lex(seq, radix));
}

inline std::vector<UndirectedPairGraph> enumerate_labelled_trees(int n) {
  std::vector<UndirectedPairGraph> trees;
  for_each_labelled_tree(n, [&](const UndirectedPairGraph& t, const std::vector<int>&) {
    trees.push_back(t);
    return true;
  });
  return trees;
}

/// T_n(d) = C(n-1, d-1) · n^(n-d): labelled trees on {0..n} with deg(0) = d.
inline BigInt count_trees_root_degree(int n, int d) {
  if (n < 1 || d < 1 || d > n) return 0;
  return binomial(n - 1, d - 1) * big_pow(BigInt(n), static_cast<unsigned>(n - d));
}

inline constexpr int kTreeEnumerationLimit = 8;

/// T_n(d) for d = 0..n by Prüfer enumeration (deg(0) = occurrences of 0 + 1).
inline std::vector<BigInt> tree_root_degree_histogram(int n) {
  if (n > kTreeEnumerationLimit)
    throw BudgetExceeded("tree enumeration is limited to n <= " +
                         std::to_string(kTreeEnumerationLimit));
  std::vector<long long> counts(n + 1, 0);
  std::vector<int> seq(n - 1, 0);
  std::vector<int> radix(n - 1, n + 1);
  do {
    counts[std::count(seq.begin(), seq.end(), 0) + 1]++;
  } while (detail::next_lex(seq, radix));
  return {counts.begin(), counts.end()};
}

}  // namespace hgcount
