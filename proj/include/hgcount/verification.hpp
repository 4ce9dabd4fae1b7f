#pragma once

// End-to-end cross-checks of the closed formulas against enumeration.

#include "hgcount/census.hpp"
#include "hgcount/holomorph.hpp"

#include <set>
#include <string>
#include <vector>

namespace hgcount {

enum class VerificationLevel { quick, full };

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationResult {
  std::vector<CensusReport> reports;
  std::vector<NamedCheck> checks;

  [[nodiscard]] bool all_match() const {
    for (const auto& r : reports)
      if (!r.match) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Distinct subgroups of Hol(T) arising from fixed point free pairs in
/// End⁰(T) × End⁰(T) (n = 1), together with the number of such pairs.
struct FpfSubgroupCensus {
  BigInt fpf_pairs;
  std::vector<HolSubgroup> subgroups;
};

inline FpfSubgroupCensus fpf_subgroup_census(const PowerContext& ctx, const Holomorph& hol) {
  if (ctx.rank() != 1) throw PreconditionError("subgroup census is implemented for n = 1");
  std::vector<std::vector<int>> tables;
  for_each_end0(ctx, [&](const StructuredEndo& e) {
    tables.push_back(to_table(ctx, e));
    return true;
  });
  FpfSubgroupCensus c;
  std::set<HolSubgroup> distinct;
  const std::size_t m = ctx.element_count();
  for (const auto& tf : tables)
    for (const auto& tg : tables) {
      bool fpf = true;
      for (std::size_t x = 1; x < m && fpf; ++x) fpf = tf[x] != tg[x];
      if (!fpf) continue;
      ++c.fpf_pairs;
      distinct.insert(fpf_pair_to_subgroup(hol, tf, tg));
    }
  c.subgroups.assign(distinct.begin(), distinct.end());
  return c;
}

inline CensusReport census_report(const std::string& label, const FiniteGroup& t, int n,
                                  bool brute_tree, bool brute_fpf) {
  PowerContext ctx(t, n);
  CensusReport r;
  r.label = label;
  r.T_name = t.name();
  r.n = n;
  r.formula_F = formula_F(ctx.aut_order(), n);
  r.tree_weighted_F = tree_weighted_F(ctx.aut_order(), n);
  r.formula_Einn = formula_Einn(ctx.aut_order(), n);
  if (brute_tree) r.brute_F = brute_F(ctx, CensusMode::tree);
  if (brute_fpf) r.fpf_count = brute_F(ctx, CensusMode::fpf);
  reconcile(r);
  return r;
}

inline VerificationResult run_verification(VerificationLevel level) {
  VerificationResult out;
  const auto s3 = catalog_group("s3");
  out.checks.push_back({"s3.no_fpf_automorphism", !has_fpf_automorphism(s3), ""});
  out.reports.push_back(census_report("s3.n1", s3, 1, true, true));
  out.reports.push_back(census_report("s3.n2", s3, 2, true, true));

  bool identities = true;
  for (int a = 1; a <= 60 && identities; ++a)
    for (int n = 1; n <= 8 && identities; ++n) {
      BigInt f = formula_F(a, n);
      identities = f == tree_weighted_F(a, n) &&
                   f % (big_pow(BigInt(a), static_cast<unsigned>(n)) * factorial(n)) == 0;
    }
  out.checks.push_back({"formula_identities.A<=60.n<=8", identities, ""});

  if (level == VerificationLevel::full) {
    out.reports.push_back(census_report("s3.n3", s3, 3, true, false));

    const auto a5 = catalog_group("a5");
    PowerContext ctx(a5, 1);
    Holomorph hol(a5);
    auto report = census_report("a5.n1", a5, 1, true, false);
    auto fpf = fpf_subgroup_census(ctx, hol);
    report.fpf_count = fpf.fpf_pairs;
    report.enumerated_Einn = BigInt(fpf.subgroups.size());
    reconcile(report);
    out.reports.push_back(report);

    auto lambda = hol.lambda_image();
    auto rho = hol.rho_image();
    auto regulars = enumerate_regular_subgroups(hol, a5);
    bool all_inn = true;
    for (const auto& s : regulars) all_inn = all_inn && classify_inn_out(hol, s) == HolType::inn;
    bool lambda_rho = std::set<HolSubgroup>(regulars.begin(), regulars.end()) ==
                      std::set<HolSubgroup>{lambda, rho};
    out.checks.push_back({"a5.hol_regular_count", regulars.size() == 2,
                          std::to_string(regulars.size())});
    out.checks.push_back({"a5.hol_regular_all_inn", all_inn, ""});
    out.checks.push_back({"a5.hol_regular_are_lambda_rho", lambda_rho, ""});
  }
  return out;
}

}  // namespace hgcount
