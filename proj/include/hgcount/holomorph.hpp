#pragma once

// The holomorph Hol(N) = ρ(N) ⋊ Aut(N) and its regular subgroups.
//
// Elements are pairs (a, φ) acting on N by x ↦ φ(x)·a^-1, composed by
// (a, φ)(b, ψ) = (a·φ(b), φ∘ψ). ρ(σ) = (σ, id) and λ(σ) = (σ^-1, conj_σ).

#include "hgcount/automorphism.hpp"
#include "hgcount/bigint.hpp"
#include "hgcount/error.hpp"
#include "hgcount/group.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hgcount {

struct HolElement {
  int trans = 0;
  int aut = 0;

  auto operator<=>(const HolElement&) const = default;
};

/// A subgroup of Hol(N), sorted by (trans, aut).
using HolSubgroup = std::vector<HolElement>;

inline constexpr std::size_t kHolomorphOrderLimit = 200'000;

class Holomorph {
 public:
  explicit Holomorph(FiniteGroup base) : auts_(std::move(base)) {
    if (order() > kHolomorphOrderLimit)
      throw BudgetExceeded("|Hol(" + auts_.group().name() + ")| = " + std::to_string(order()) +
                           " exceeds " + std::to_string(kHolomorphOrderLimit));
  }

  [[nodiscard]] const FiniteGroup& base() const { return auts_.group(); }
  [[nodiscard]] const AutomorphismGroup& auts() const { return auts_; }
  [[nodiscard]] std::size_t order() const {
    return static_cast<std::size_t>(base().order()) * auts_.size();
  }

  [[nodiscard]] static HolElement identity() { return {}; }

  [[nodiscard]] HolElement compose(const HolElement& x, const HolElement& y) const {
    return {base().mul(x.trans, auts_.apply(x.aut, y.trans)), auts_.compose(x.aut, y.aut)};
  }

  [[nodiscard]] HolElement inverse(const HolElement& x) const {
    int ainv = auts_.inverse(x.aut);
    return {auts_.apply(ainv, base().inv(x.trans)), ainv};
  }

  [[nodiscard]] int act(const HolElement& x, int point) const {
    return base().mul(auts_.apply(x.aut, point), base().inv(x.trans));
  }

  [[nodiscard]] HolElement rho(int sigma) const { return {sigma, AutomorphismGroup::identity_id()}; }
  [[nodiscard]] HolElement lambda(int sigma) const {
    return {base().inv(sigma), auts_.conjugation_id(sigma)};
  }

  [[nodiscard]] std::size_t index(const HolElement& x) const {
    return static_cast<std::size_t>(x.trans) * auts_.size() + x.aut;
  }
  [[nodiscard]] HolElement element(std::size_t idx) const {
    return {static_cast<int>(idx / auts_.size()), static_cast<int>(idx % auts_.size())};
  }

  [[nodiscard]] HolSubgroup generate(const std::vector<HolElement>& gens) const {
    return generate_closure<HolElement>(identity(), gens, [this](const HolElement& a, const HolElement& b) {
      return compose(a, b);
    });
  }

  [[nodiscard]] HolSubgroup lambda_image() const {
    HolSubgroup s;
    for (int x = 0; x < base().order(); ++x) s.push_back(lambda(x));
    std::sort(s.begin(), s.end());
    return s;
  }
  [[nodiscard]] HolSubgroup rho_image() const {
    HolSubgroup s;
    for (int x = 0; x < base().order(); ++x) s.push_back(rho(x));
    std::sort(s.begin(), s.end());
    return s;
  }

  [[nodiscard]] bool contains(const HolSubgroup& s, const HolElement& x) const {
    return std::binary_search(s.begin(), s.end(), x);
  }

  [[nodiscard]] bool is_closed(const HolSubgroup& s) const {
    if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
    if (!contains(s, identity())) return false;
    for (const auto& x : s)
      for (const auto& y : s)
        if (!contains(s, compose(x, y))) return false;
    return true;
  }

  /// The subgroup as an abstract table group (elements in sorted order).
  [[nodiscard]] FiniteGroup as_group(const HolSubgroup& s, std::string name = "N") const {
    const int m = static_cast<int>(s.size());
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        auto it = std::lower_bound(s.begin(), s.end(), compose(s[i], s[j]));
        table[static_cast<std::size_t>(i) * m + j] = static_cast<int>(it - s.begin());
      }
    return FiniteGroup::from_table(std::move(name), m, std::move(table));
  }

 private:
  AutomorphismGroup auts_;
};

// ---------------------------------------------------------------------------
// Regularity

struct RegularityReport {
  bool xi_bijective = false;     // η ↦ η(1) is a bijection S -> N
  bool transitive_free = false;  // orbit of 1 is N and all point stabilizers are trivial
};

inline RegularityReport regularity(const Holomorph& hol, const HolSubgroup& s) {
  if (!hol.is_closed(s)) throw PreconditionError("element set is not a subgroup of Hol(N)");
  const int m = hol.base().order();
  RegularityReport r;
  std::vector<char> hit(m, 0);
  bool injective = true;
  for (const auto& eta : s) {
    int image = hol.act(eta, 0);
    if (hit[image]) injective = false;
    hit[image] = 1;
  }
  r.xi_bijective = injective && static_cast<int>(s.size()) == m;

  std::fill(hit.begin(), hit.end(), 0);
  for (const auto& eta : s) hit[hol.act(eta, 0)] = 1;
  bool transitive = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  bool free_action = true;
  for (const auto& eta : s) {
    if (eta == Holomorph::identity()) continue;
    for (int x = 0; x < m && free_action; ++x)
      if (hol.act(eta, x) == x) free_action = false;
  }
  r.transitive_free = transitive && free_action;
  return r;
}

/// Regular iff ξ is bijective; the transitive+free test must agree.
inline bool is_regular(const Holomorph& hol, const HolSubgroup& s) {
  auto r = regularity(hol, s);
  if (r.xi_bijective != r.transitive_free)
    throw std::logic_error("regularity tests disagree");
  return r.xi_bijective;
}

enum class HolType { inn, out };

inline std::string to_string(HolType t) { return t == HolType::inn ? "inn" : "out"; }

inline HolType classify_inn_out(const Holomorph& hol, const HolSubgroup& s) {
  for (const auto& x : s)
    if (!hol.auts().is_inner(x.aut)) return HolType::out;
  return HolType::inn;
}

// ---------------------------------------------------------------------------
// (𝔣, 𝔤) parametrization: N = {ρ(𝔤(σ))·𝔣(σ) : σ ∈ G}

struct FGPair {
  std::vector<int> f_map;  // σ ↦ automorphism id of N
  std::vector<int> g_map;  // σ ↦ element of N
};

/// 𝔣 a homomorphism G -> Aut(N), 𝔤(1) = 1 and 𝔤(στ) = 𝔤(σ)·𝔣(σ)(𝔤(τ)).
inline void validate(const Holomorph& hol, const FiniteGroup& source, const FGPair& p) {
  const int m = source.order();
  if (static_cast<int>(p.f_map.size()) != m || static_cast<int>(p.g_map.size()) != m)
    throw InputError("(f, g) tables must be indexed by the source group");
  const auto& auts = hol.auts();
  const auto& n = hol.base();
  for (int s = 0; s < m; ++s) {
    if (p.f_map[s] < 0 || p.f_map[s] >= auts.size() || p.g_map[s] < 0 || p.g_map[s] >= n.order())
      throw InputError("(f, g) table entry out of range");
  }
  if (p.g_map[0] != 0) throw InputError("crossed homomorphism must send 1 to 1");
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int st = source.mul(s, t);
      if (p.f_map[st] != auts.compose(p.f_map[s], p.f_map[t]))
        throw InputError("f is not a homomorphism at (" + std::to_string(s) + "," +
                         std::to_string(t) + ")");
      if (p.g_map[st] != n.mul(p.g_map[s], auts.apply(p.f_map[s], p.g_map[t])))
        throw InputError("g violates the crossed-homomorphism law at (" + std::to_string(s) +
                         "," + std::to_string(t) + ")");
    }
}

inline HolSubgroup subgroup_from_fg_pair(const Holomorph& hol, const FiniteGroup& source,
                                         const FGPair& p) {
  validate(hol, source, p);
  HolSubgroup s;
  for (int x = 0; x < source.order(); ++x) s.push_back({p.g_map[x], p.f_map[x]});
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  bool regular = is_regular(hol, s);
  if (regular != is_bijective(p.g_map))
    throw std::logic_error("regularity disagrees with bijectivity of g");
  return s;
}

/// {x ↦ f(σ)·x·g(σ)^-1 : σ ∈ N} for a fixed-point-free pair of endomorphism tables.
inline HolSubgroup fpf_pair_to_subgroup(const Holomorph& hol, const std::vector<int>& f,
                                        const std::vector<int>& g) {
  const auto& n = hol.base();
  if (static_cast<int>(f.size()) != n.order() || static_cast<int>(g.size()) != n.order())
    throw InputError("endomorphism tables must be indexed by N");
  HolSubgroup s;
  for (int sigma = 0; sigma < n.order(); ++sigma) {
    int fs = f[sigma];
    int gs = g[sigma];
    if (sigma != 0 && fs == gs)
      throw PreconditionError("pair is not fixed point free at " + std::to_string(sigma));
    s.push_back({n.mul(gs, n.inv(fs)), hol.auts().conjugation_id(fs)});
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::logic_error("fpf pair gave a non-injective map into Hol(N)");
  if (!is_regular(hol, s)) throw std::logic_error("fpf pair produced a non-regular subgroup");
  if (classify_inn_out(hol, s) != HolType::inn)
    throw std::logic_error("fpf pair produced a subgroup with non-inner projection");
  return s;
}

/// Visits every crossed homomorphism 𝔤: source -> N relative to 𝔣 (as an Aut(N)-id table).
template <class Visit>
void for_each_crossed_homomorphism(const Holomorph& hol, const FiniteGroup& source,
                                   const std::vector<int>& f_map, Visit visit) {
  const auto& n = hol.base();
  const auto& auts = hol.auts();
  auto gens = generating_sequence(source);
  std::vector<int> all(n.order());
  std::iota(all.begin(), all.end(), 0);
  extend_generator_images(
      source, gens, 0, [&](int) -> const std::vector<int>& { return all; },
      [&](int gx, int x, int, int img) { return n.mul(gx, auts.apply(f_map[x], img)); }, visit);
}

/// ℰ′(G, N): regular subgroups of Hol(N) isomorphic to `iso`, found through
/// every homomorphism 𝔣: iso -> Aut(N) and every bijective crossed hom 𝔤.
/// Sorted and deduplicated.
inline std::vector<HolSubgroup> enumerate_regular_subgroups(const Holomorph& hol,
                                                            const FiniteGroup& iso) {
  if (iso.order() != hol.base().order())
    throw PreconditionError("isomorphism type must have order |N|");
  auto aut_group = hol.auts().as_group();
  std::set<HolSubgroup> found;
  for_each_homomorphism(iso, aut_group, [&](const std::vector<int>& f_map) {
    for_each_crossed_homomorphism(hol, iso, f_map, [&](const std::vector<int>& g_map) {
      if (!is_bijective(g_map)) return true;
      HolSubgroup s;
      for (int x = 0; x < iso.order(); ++x) s.push_back({g_map[x], f_map[x]});
      std::sort(s.begin(), s.end());
      found.insert(std::move(s));
      return true;
    });
    return true;
  });
  std::vector<HolSubgroup> out(found.begin(), found.end());
  for (const auto& s : out) {
    if (!is_regular(hol, s)) throw std::logic_error("enumerated subgroup is not regular");
    if (!is_isomorphic(hol.as_group(s), iso))
      throw std::logic_error("enumerated subgroup has the wrong isomorphism type");
  }
  return out;
}

/// #ℰ(G,N) = |Aut(G)| / |Aut(N)| · #ℰ′(G,N).
inline BigInt translate_regular_count(const BigInt& count_e_prime, const BigInt& aut_g_order,
                                         const BigInt& aut_n_order) {
  if (aut_n_order == 0) throw InputError("|Aut(N)| must be positive");
  BigInt numerator = aut_g_order * count_e_prime;
  if (numerator % aut_n_order != 0)
    throw InputError("non-integral count " + to_string(numerator) + "/" + to_string(aut_n_order));
  return numerator / aut_n_order;
}

}  // namespace hgcount
