#pragma once

// Fixed-point-freeness of pairs (f, g) in End⁰(T^n): a pair is fixed point free
// when f(σ) = g(σ) only for σ = 1.

#include "hgcount/error.hpp"
#include "hgcount/pair_graph.hpp"
#include "hgcount/structured_endo.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgcount {

enum class FpfMethod { bruteforce, tree_criterion };

inline std::string to_string(FpfMethod m) {
  return m == FpfMethod::bruteforce ? "bruteforce" : "tree-criterion";
}

struct FpfVerdict {
  bool is_fpf = false;
  FpfMethod method = FpfMethod::bruteforce;
  std::optional<PowerElement> witness;  // σ ≠ 1 with f(σ) = g(σ)
};

inline bool agree_at(const PowerContext& ctx, const StructuredEndo& f, const StructuredEndo& g,
                     const PowerElement& sigma) {
  for (int i = 1; i <= ctx.rank(); ++i)
    if (apply_coordinate(ctx, f, i, sigma) != apply_coordinate(ctx, g, i, sigma)) return false;
  return true;
}

inline void assert_witness(const PowerContext& ctx, const StructuredEndo& f,
                           const StructuredEndo& g, const PowerElement& sigma) {
  if (sigma.is_identity() || !agree_at(ctx, f, g, sigma))
    throw std::logic_error("constructed witness " + to_string(sigma) + " is not a fixed point");
}

inline constexpr std::size_t kBruteforceElementBudget = 10'000'000;

/// Scans every σ in T^n; the witness is the first non-identity fixed point.
inline FpfVerdict is_fpf_bruteforce(const PowerContext& ctx, const StructuredEndo& f,
                                    const StructuredEndo& g,
                                    std::size_t budget = kBruteforceElementBudget) {
  const std::size_t m = ctx.element_count();
  if (m == 0 || m > budget)
    throw BudgetExceeded("brute-force fpf scan over |T|^n elements exceeds budget " +
                         std::to_string(budget));
  PowerElement sigma = ctx.identity();
  std::vector<int> radix(ctx.rank(), ctx.factor().order());
  while (detail::next_lex(sigma.coords, radix)) {
    if (agree_at(ctx, f, g, sigma)) return FpfVerdict{false, FpfMethod::bruteforce, sigma};
  }
  return FpfVerdict{true, FpfMethod::bruteforce, std::nullopt};
}

namespace detail {

/// σ^(i) = γ_{p_i}(seed) for every vertex i of `comp`, paths found by BFS from i0.
inline void propagate_seed(const PowerContext& ctx, const StructuredEndo& f,
                           const StructuredEndo& g, const DirectedPairGraph& d,
                           const Component& comp, int i0, int seed, PowerElement& sigma) {
  for (int v : comp.vertices) {
    if (v == i0) {
      sigma.coords[v - 1] = seed;
      continue;
    }
    auto path = find_directed_path(d, i0, v);
    sigma.coords[v - 1] = gamma_of_path(ctx, f, g, path, i0)(seed);
  }
}

}  // namespace detail

/// Builds σ ≠ 1 with f(σ) = g(σ) from a non-0 component of Γ_{f,g} that is a
/// tree or unicyclic. Tree: seed the lowest vertex with the lowest non-identity
/// element. Unicyclic: seed the lowest cycle vertex with the lowest non-identity
/// fixed point of γ_q. Coordinates outside the component are 1.
inline PowerElement construct_witness(const PowerContext& ctx, const StructuredEndo& f,
                                      const StructuredEndo& g) {
  auto ug = build_undirected(f, g);
  auto dg = build_directed(f, g);
  for (const auto& comp : components(ug)) {
    if (comp.contains(0)) continue;
    PowerElement sigma = ctx.identity();
    if (comp.is_tree()) {
      detail::propagate_seed(ctx, f, g, dg, comp, comp.vertices.front(), 1, sigma);
    } else if (comp.is_unicyclic()) {
      auto cycle = find_simple_cycle(ug, comp);
      auto gq = gamma_of_path(ctx, f, g, cycle.forward, cycle.base);
      int seed = -1;
      for (int x = 1; x < ctx.factor().order() && seed < 0; ++x)
        if (gq(x) == x) seed = x;
      if (seed < 0) continue;
      detail::propagate_seed(ctx, f, g, dg, comp, cycle.base, seed, sigma);
    } else {
      continue;
    }
    assert_witness(ctx, f, g, sigma);
    return sigma;
  }
  throw PreconditionError("no non-0 component is a tree or a unicyclic component with a "
                          "non-trivial cycle fixed point");
}

/// Tree criterion: valid both ways when T has no fixed point free automorphism.
/// Non-tree verdicts carry a constructed witness.
inline FpfVerdict is_fpf_by_tree(const PowerContext& ctx, const StructuredEndo& f,
                                 const StructuredEndo& g) {
  if (ctx.factor_has_fpf_automorphism())
    throw PreconditionError(ctx.factor().name() +
                            " admits a fixed point free automorphism; use the brute-force test");
  if (is_tree(build_undirected(f, g))) return FpfVerdict{true, FpfMethod::tree_criterion, std::nullopt};
  return FpfVerdict{false, FpfMethod::tree_criterion, construct_witness(ctx, f, g)};
}

/// Checks σ^(h(p)) = γ_p(σ^(t(p))) over a reduced path family: every single
/// arrow, BFS paths from each component root, and both orientations of the
/// cycle in unicyclic non-0 components. The result is cross-checked against
/// the direct comparison f(σ) = g(σ).
inline bool check_path_conditions(const PowerContext& ctx, const StructuredEndo& f,
                                  const StructuredEndo& g, const PowerElement& sigma) {
  ctx.check(sigma);
  auto ug = build_undirected(f, g);
  auto dg = build_directed(f, g);
  bool holds = true;
  auto check_path = [&](const std::vector<Arrow>& path, int start) {
    auto pm = gamma_of_path(ctx, f, g, path, start);
    if (sigma.at(pm.target) != pm(sigma.at(pm.source))) holds = false;
  };
  for (const auto& arrow : dg.arrows) check_path({arrow}, arrow.tail);
  for (const auto& comp : components(ug)) {
    int root = comp.vertices.front();
    for (int v : comp.vertices) {
      if (v == root) continue;
      check_path(find_directed_path(dg, root, v), root);
    }
    if (!comp.contains(0) && comp.is_unicyclic()) {
      auto cycle = find_simple_cycle(ug, comp);
      check_path(cycle.forward, cycle.base);
      check_path(cycle.backward, cycle.base);
    }
  }
  if (holds != agree_at(ctx, f, g, sigma))
    throw std::logic_error("path conditions disagree with f(σ) = g(σ) at σ = " + to_string(sigma));
  return holds;
}

}  // namespace hgcount
