#pragma once

// Instance checks of the orbit/rank toolkit over every (𝔣, 𝔤) pair of Hol(T^n).

#include "hgcount/holomorph.hpp"
#include "hgcount/orbit.hpp"
#include "hgcount/verification.hpp"

#include <map>
#include <string>
#include <vector>

namespace hgcount {

struct LemmaSuiteStats {
  std::size_t f_maps = 0;
  std::size_t pairs = 0;
  std::size_t regular_pairs = 0;
  std::size_t relation_instances = 0;
  std::size_t relation_failures = 0;
  std::size_t decompositions = 0;
  std::size_t rank_failures = 0;
  std::size_t bound_hypotheses_met = 0;
  std::size_t bound_failures = 0;
  std::size_t transporter_search_failures = 0;
  std::size_t perfect_kernels = 0;
  std::size_t perfect_kernel_failures = 0;
  std::size_t prime_audits_applicable = 0;
  std::size_t prime_audit_failures = 0;
};

/// Runs the relations identity, orbit rank relations, the kernel-image bound
/// and the perfect-kernel and prime audits over all (𝔣, 𝔤) for N = G = T^n,
/// for every prime p dividing |T| and up to two choices of P^(i).
inline LemmaSuiteStats run_lemma_suite(const FiniteGroup& t, int n) {
  PowerContext ctx(t, n);
  auto g = direct_power(t, n);
  Holomorph hol(g);
  auto aut_group = hol.auts().as_group();

  std::vector<PrimeSubgroupChoice> choices;
  for (int p = 2; p <= t.order(); ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (!prime || t.order() % p != 0) continue;
    int available = static_cast<int>(prime_subgroup_representatives(t, p).size());
    for (int c = 0; c < std::min(available, 2); ++c) choices.push_back(choose_prime_subgroups(t, n, p, c));
  }

  LemmaSuiteStats s;
  for_each_homomorphism(g, aut_group, [&](const std::vector<int>& f_map) {
    ++s.f_maps;
    StructuredFGPair f_only = to_structured_pair(ctx, hol, FGPair{f_map, std::vector<int>(g.order(), 0)});
    auto kernel = permutation_kernel(f_only);
    bool kernel_perfect = is_perfect_subgroup(ctx, kernel);
    if (kernel_perfect) {
      ++s.perfect_kernels;
      bool inner = std::all_of(kernel.begin(), kernel.end(),
                               [&](int k) { return is_inner(ctx, f_only.f[k]); });
      if (!inner) ++s.perfect_kernel_failures;
    }
    std::vector<OrbitDecomposition> decomps;
    for (const auto& choice : choices) {
      decomps.push_back(orbit_decompose(ctx, f_only, choice));
      ++s.decompositions;
      auto rb = check_rank_bounds(n, decomps.back());
      if (!rb.orbit_sizes_are_p_powers || !rb.moved_points_identity || !rb.rank_inequality)
        ++s.rank_failures;
    }
    for_each_crossed_homomorphism(hol, g, f_map, [&](const std::vector<int>& g_map) {
      ++s.pairs;
      StructuredFGPair pair{f_only.f, g_map};
      bool regular = is_bijective(g_map);
      s.regular_pairs += regular;
      for (int tau : kernel)
        for (int sigma = 0; sigma < g.order(); ++sigma) {
          if (g.mul(sigma, tau) != g.mul(tau, sigma)) continue;
          ++s.relation_instances;
          if (!check_relations_lemma(ctx, pair, sigma, tau)) ++s.relation_failures;
        }
      for (const auto& d : decomps) {
        auto bound = check_g_bound(ctx, pair, d);
        bool hypotheses = bound.transporters_commute;
        if (!hypotheses && d.r() > 0) ++s.transporter_search_failures;
        if (hypotheses) {
          ++s.bound_hypotheses_met;
          if (!bound.containment || (bound.kernel_image_inner && !bound.inequality_holds))
            ++s.bound_failures;
        }
        auto audit = audit_prime_bound(ctx, pair, d, bound);
        s.prime_audits_applicable += audit.applicable;
        if (!audit.consistent()) ++s.prime_audit_failures;
      }
      return true;
    });
    return true;
  });
  return s;
}

/// Perfect-kernel audit for n = 1: every homomorphism 𝔣: T -> Aut(T) with T
/// perfect must land in Inn(T) when Out(T) is solvable. Returns the number of
/// homomorphisms checked and the number of violations.
inline std::pair<std::size_t, std::size_t> audit_perfect_kernel_n1(const FiniteGroup& t) {
  PowerContext ctx(t, 1);
  std::vector<int> all(t.order());
  std::iota(all.begin(), all.end(), 0);
  if (!is_perfect_subgroup(ctx, all)) throw PreconditionError(t.name() + " is not perfect");
  auto aut_group = ctx.auts().as_group();
  std::size_t checked = 0, violations = 0;
  for_each_homomorphism(t, aut_group, [&](const std::vector<int>& f_map) {
    ++checked;
    for (int id : f_map)
      if (!ctx.auts().is_inner(id)) {
        ++violations;
        break;
      }
    return true;
  });
  return {checked, violations};
}

}  // namespace hgcount
