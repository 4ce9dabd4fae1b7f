#include "hgcount/holomorph.hpp"
#include "hgcount/structured_endo.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace hgcount;

namespace {

std::vector<int> identity_table(int m) {
  std::vector<int> t(m);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

std::vector<std::string> permutation_words(const Holomorph& hol, const HolSubgroup& s) {
  std::vector<std::string> words;
  for (const auto& x : s) {
    oracle::Perm p(hol.base().order());
    for (int v = 0; v < hol.base().order(); ++v) p[v] = hol.act(x, v);
    words.push_back(oracle::perm_word(p));
  }
  std::sort(words.begin(), words.end());
  return words;
}

std::set<std::vector<std::string>> read_golden(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in) << path;
  std::set<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream fields(line);
    std::vector<std::string> words;
    std::string w;
    while (std::getline(fields, w, '\t')) words.push_back(w);
    out.insert(words);
  }
  return out;
}

}  // namespace

TEST(Holomorph, RhoAndLambdaAreRightAndLeftTranslations) {
  Holomorph hol(catalog_group("s3"));
  const auto& n = hol.base();
  EXPECT_EQ(hol.order(), 36u);
  for (int s = 0; s < 6; ++s)
    for (int x = 0; x < 6; ++x) {
      EXPECT_EQ(hol.act(hol.rho(s), x), n.mul(x, n.inv(s)));
      EXPECT_EQ(hol.act(hol.lambda(s), x), n.mul(s, x));
    }
}

TEST(Holomorph, CompositionIsAnAssociativeActionWithInverses) {
  Holomorph hol(catalog_group("d4"));
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = hol.element(rng() % hol.order());
    auto y = hol.element(rng() % hol.order());
    auto z = hol.element(rng() % hol.order());
    ASSERT_EQ(hol.compose(hol.compose(x, y), z), hol.compose(x, hol.compose(y, z)));
    ASSERT_EQ(hol.compose(x, hol.inverse(x)), Holomorph::identity());
    ASSERT_EQ(hol.element(hol.index(x)), x);
    for (int p = 0; p < 8; ++p) ASSERT_EQ(hol.act(hol.compose(x, y), p), hol.act(x, hol.act(y, p)));
  }
}

TEST(Holomorph, LambdaAndRhoAreHomomorphicImages) {
  Holomorph hol(catalog_group("s3"));
  const auto& n = hol.base();
  for (int s = 0; s < 6; ++s)
    for (int t = 0; t < 6; ++t) {
      EXPECT_EQ(hol.compose(hol.lambda(s), hol.lambda(t)), hol.lambda(n.mul(s, t)));
      EXPECT_EQ(hol.compose(hol.rho(s), hol.rho(t)), hol.rho(n.mul(s, t)));
    }
  EXPECT_NE(hol.lambda_image(), hol.rho_image());
  EXPECT_TRUE(is_regular(hol, hol.lambda_image()));
  EXPECT_TRUE(is_regular(hol, hol.rho_image()));
}

TEST(Holomorph, AbelianBaseHasLambdaEqualRho) {
  Holomorph hol(catalog_group("c4"));
  EXPECT_EQ(hol.lambda_image(), hol.rho_image());
  EXPECT_TRUE(hol.contains(hol.rho_image(), hol.rho(3)));
  EXPECT_EQ(classify_inn_out(hol, hol.rho_image()), HolType::inn);
}

TEST(Regularity, NonRegularSubgroupsAreRejectedByBothTests) {
  Holomorph hol(catalog_group("s3"));
  HolSubgroup inner;
  for (int id : hol.auts().inner_ids()) inner.push_back({0, id});
  std::sort(inner.begin(), inner.end());
  auto r = regularity(hol, inner);
  EXPECT_FALSE(r.xi_bijective);
  EXPECT_FALSE(r.transitive_free);
  auto three = hol.generate({hol.rho(1)});
  EXPECT_FALSE(is_regular(hol, three));
  EXPECT_THROW(regularity(hol, HolSubgroup{{1, 0}}), PreconditionError);
}

TEST(Regularity, OutTypeIsDetected) {
  Holomorph hol(catalog_group("c3"));
  HolSubgroup s = hol.generate({HolElement{0, 1}});
  EXPECT_EQ(classify_inn_out(hol, s), HolType::out);
}

TEST(FGPairs, TrivialFWithIdentityGIsRho) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  FGPair p{std::vector<int>(6, 0), identity_table(6)};
  EXPECT_EQ(subgroup_from_fg_pair(hol, s3, p), hol.rho_image());
}

TEST(FGPairs, ConjugationWithInversionIsLambda) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  FGPair p;
  for (int s = 0; s < 6; ++s) {
    p.f_map.push_back(hol.auts().conjugation_id(s));
    p.g_map.push_back(s3.inv(s));
  }
  auto s = subgroup_from_fg_pair(hol, s3, p);
  auto lambda = hol.lambda_image();
  EXPECT_EQ(std::set<HolElement>(s.begin(), s.end()), std::set<HolElement>(lambda.begin(), lambda.end()));
}

TEST(FGPairs, TrivialCrossedHomGivesNonRegularInn) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  FGPair p{{}, std::vector<int>(6, 0)};
  for (int s = 0; s < 6; ++s) p.f_map.push_back(hol.auts().conjugation_id(s));
  auto s = subgroup_from_fg_pair(hol, s3, p);
  EXPECT_FALSE(is_regular(hol, s));
  EXPECT_EQ(classify_inn_out(hol, s), HolType::inn);
}

TEST(FGPairs, InvalidPairsAreRejected) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  FGPair not_crossed{std::vector<int>(6, 0), std::vector<int>(6, 1)};
  not_crossed.g_map[0] = 0;
  EXPECT_THROW(validate(hol, s3, not_crossed), InputError);
  FGPair bad_one{std::vector<int>(6, 0), identity_table(6)};
  bad_one.g_map[0] = 1;
  EXPECT_THROW(validate(hol, s3, bad_one), InputError);
  FGPair short_pair{{0}, {0}};
  EXPECT_THROW(validate(hol, s3, short_pair), InputError);
}

TEST(FGPairs, CrossedHomomorphismsMatchBruteForce) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  for (bool conjugation : {false, true}) {
    auto f_map = std::vector<int>(6, 0);
    if (conjugation)
      for (int s = 0; s < 6; ++s) f_map[s] = hol.auts().conjugation_id(s);
    std::set<std::vector<int>> enumerated;
    for_each_crossed_homomorphism(hol, s3, f_map, [&](const std::vector<int>& g) {
      enumerated.insert(g);
      return true;
    });
    std::set<std::vector<int>> brute;
    std::vector<int> g(6, 0);
    std::vector<int> radix(6, 6);
    radix[0] = 1;
    do {
      bool ok = true;
      for (int s = 0; s < 6 && ok; ++s)
        for (int t = 0; t < 6 && ok; ++t)
          ok = g[s3.mul(s, t)] == s3.mul(g[s], hol.auts().apply(f_map[s], g[t]));
      if (ok) brute.insert(g);
    } while (detail::next_lex(g, radix));
    EXPECT_EQ(enumerated, brute);
  }
}

TEST(FpfPairs, IdentityAndTrivialGiveLambdaAndRho) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  std::vector<int> id = identity_table(6), trivial(6, 0);
  EXPECT_EQ(fpf_pair_to_subgroup(hol, id, trivial), hol.lambda_image());
  EXPECT_EQ(fpf_pair_to_subgroup(hol, trivial, id), hol.rho_image());
  EXPECT_THROW(fpf_pair_to_subgroup(hol, id, id), PreconditionError);
}

TEST(RegularSubgroups, S3MatchesPermutationOracleAndGoldenFile) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  auto perms = oracle::holomorph_permutations(s3);
  ASSERT_EQ(perms.size(), 36u);
  std::set<std::vector<std::string>> oracle_regular;
  for (const auto& sub : oracle::subgroups_of_order(perms, 6)) {
    if (!oracle::transitive_and_free(sub, 6) || oracle::is_abelian(sub)) continue;
    std::vector<std::string> words;
    for (const auto& p : sub) words.push_back(oracle::perm_word(p));
    std::sort(words.begin(), words.end());
    oracle_regular.insert(words);
  }
  auto golden = read_golden(std::string(HGCOUNT_TEST_DATA_DIR) + "/hol_s3_regular_s3.tsv");
  EXPECT_EQ(oracle_regular, golden);

  std::set<std::vector<std::string>> enumerated;
  for (const auto& s : enumerate_regular_subgroups(hol, s3)) enumerated.insert(permutation_words(hol, s));
  EXPECT_EQ(enumerated, golden);
  EXPECT_TRUE(enumerated.count(permutation_words(hol, hol.lambda_image())));
  EXPECT_TRUE(enumerated.count(permutation_words(hol, hol.rho_image())));
}

TEST(RegularSubgroups, CyclicTypeInHolS3) {
  auto s3 = catalog_group("s3");
  Holomorph hol(s3);
  auto c6 = enumerate_regular_subgroups(hol, catalog_group("c6"));
  auto perms = oracle::holomorph_permutations(s3);
  std::size_t expected = 0;
  for (const auto& sub : oracle::subgroups_of_order(perms, 6))
    expected += oracle::transitive_and_free(sub, 6) && oracle::is_abelian(sub);
  EXPECT_EQ(c6.size(), expected);
  EXPECT_THROW(enumerate_regular_subgroups(hol, catalog_group("c4")), PreconditionError);
}

TEST(Translation, RegularCountFormula) {
  EXPECT_EQ(translate_regular_count(3, 24, 6), 12);
  EXPECT_EQ(translate_regular_count(2, 120, 120), 2);
  EXPECT_THROW(translate_regular_count(1, 2, 3), InputError);
  EXPECT_THROW(translate_regular_count(1, 2, 0), InputError);
}
