#pragma once

// Closed-form and brute-force counts of tree pairs #F(G,G) and #E'_inn(G,G)
// for G = T^n.

#include "hgcount/bigint.hpp"
#include "hgcount/error.hpp"
#include "hgcount/fpf.hpp"
#include "hgcount/pair_graph.hpp"
#include "hgcount/power.hpp"
#include "hgcount/structured_endo.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgcount {

/// 2^n · n! · A^n · (nA+1)^(n-1)
inline BigInt formula_F(const BigInt& aut_order, int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  const auto un = static_cast<unsigned>(n);
  return big_pow(2, un) * factorial(un) * big_pow(aut_order, un) *
         big_pow(aut_order * n + 1, un - 1);
}

/// 2^n · (nA+1)^(n-1), checked against formula_F / (A^n · n!).
inline BigInt formula_Einn(const BigInt& aut_order, int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  const auto un = static_cast<unsigned>(n);
  BigInt value = big_pow(2, un) * big_pow(aut_order * n + 1, un - 1);
  BigInt denominator = big_pow(aut_order, un) * factorial(un);
  BigInt f = formula_F(aut_order, n);
  if (f % denominator != 0 || f / denominator != value)
    throw std::logic_error("formula_Einn disagrees with formula_F / (A^n n!)");
  return value;
}

/// Σ_d T_n(d) · 2^n · n! · A^(2n-d), with T_n(d) from Prüfer enumeration when
/// n <= kTreeEnumerationLimit and from the closed form otherwise.
inline BigInt tree_weighted_F(const BigInt& aut_order, int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  const auto un = static_cast<unsigned>(n);
  std::vector<BigInt> hist;
  if (n <= kTreeEnumerationLimit) {
    hist = tree_root_degree_histogram(n);
  } else {
    hist.assign(n + 1, 0);
    for (int d = 1; d <= n; ++d) hist[d] = count_trees_root_degree(n, d);
  }
  BigInt total = 0;
  for (int d = 1; d <= n; ++d)
    total += hist[d] * big_pow(aut_order, 2 * un - static_cast<unsigned>(d));
  return total * big_pow(2, un) * factorial(un);
}

enum class CensusMode { tree, fpf };

inline std::string to_string(CensusMode m) { return m == CensusMode::tree ? "tree" : "fpf"; }

inline constexpr std::size_t kPairCensusBudget = 200'000'000;
inline constexpr std::size_t kFpfCensusBudget = 2'000'000'000;

namespace detail {

inline int theta_code(const StructuredEndo& e, int n) {
  int code = 0;
  for (int v : e.theta) code = code * (n + 1) + v;
  return code;
}

}  // namespace detail

/// Exact #pairs (f, g) ∈ End⁰ × End⁰ that are trees (mode tree) or fixed
/// point free by a full scan of T^n (mode fpf). Streams every pair.
inline BigInt brute_F(const PowerContext& ctx, CensusMode mode,
                      std::size_t pair_budget = kPairCensusBudget) {
  const int n = ctx.rank();
  BigInt end0 = count_end0(ctx.aut_order(), n);
  require_budget(end0 * end0, pair_budget, "pair census");
  BigInt count = 0;
  if (mode == CensusMode::tree) {
    std::vector<int> codes;
    std::vector<std::vector<int>> thetas;
    for_each_end0(ctx, [&](const StructuredEndo& e) {
      codes.push_back(detail::theta_code(e, n));
      if (thetas.empty() || thetas.back() != e.theta) thetas.push_back(e.theta);
      return true;
    });
    // Tree-ness depends only on (θ_f, θ_g).
    const std::size_t theta_count = thetas.size();
    std::vector<char> tree(theta_count * theta_count);
    for (std::size_t a = 0; a < theta_count; ++a)
      for (std::size_t b = 0; b < theta_count; ++b)
        tree[a * theta_count + b] = is_tree(build_undirected(thetas[a], thetas[b]));
    unsigned long long hits = 0;
    for (int cf : codes)
      for (int cg : codes) hits += tree[static_cast<std::size_t>(cf) * theta_count + cg];
    return BigInt(hits);
  }
  const std::size_t m = ctx.element_count();
  require_budget(end0 * end0 * m, kFpfCensusBudget, "fpf pair census");
  std::vector<std::vector<int>> tables;
  for_each_end0(ctx, [&](const StructuredEndo& e) {
    tables.push_back(to_table(ctx, e));
    return true;
  });
  unsigned long long hits = 0;
  for (const auto& tf : tables)
    for (const auto& tg : tables) {
      bool fpf = true;
      for (std::size_t x = 1; x < m && fpf; ++x) fpf = tf[x] != tg[x];
      hits += fpf;
    }
  count = hits;
  return count;
}

struct CensusReport {
  std::string label;
  std::string T_name;
  int n = 0;
  BigInt formula_F;
  std::optional<BigInt> brute_F;
  BigInt tree_weighted_F;
  std::optional<BigInt> formula_Einn;
  std::optional<BigInt> fpf_count;
  std::optional<BigInt> enumerated_Einn;
  bool match = true;
};

/// Recomputes `match` from every populated comparison.
inline void reconcile(CensusReport& r) {
  r.match = r.formula_F == r.tree_weighted_F;
  if (r.brute_F) r.match = r.match && *r.brute_F == r.formula_F;
  if (r.fpf_count) r.match = r.match && *r.fpf_count == r.formula_F;
  if (r.formula_Einn && r.enumerated_Einn) r.match = r.match && *r.formula_Einn == *r.enumerated_Einn;
}

/// TSV `key<TAB>value` lines.
inline std::vector<std::pair<std::string, std::string>> report_rows(const CensusReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  const std::string p = r.label.empty() ? "" : r.label + ".";
  rows.emplace_back(p + "group", r.T_name);
  rows.emplace_back(p + "n", std::to_string(r.n));
  rows.emplace_back(p + "formula_F", to_string(r.formula_F));
  rows.emplace_back(p + "tree_weighted_F", to_string(r.tree_weighted_F));
  if (r.brute_F) rows.emplace_back(p + "brute_F", to_string(*r.brute_F));
  if (r.fpf_count) rows.emplace_back(p + "fpf_count", to_string(*r.fpf_count));
  if (r.formula_Einn) rows.emplace_back(p + "formula_Einn", to_string(*r.formula_Einn));
  if (r.enumerated_Einn) rows.emplace_back(p + "enumerated_Einn", to_string(*r.enumerated_Einn));
  rows.emplace_back(p + "match", r.match ? "true" : "false");
  return rows;
}

}  // namespace hgcount
