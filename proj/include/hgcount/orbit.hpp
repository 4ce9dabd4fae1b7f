#pragma once

// Verification toolkit for subgroups {ρ(𝔤(σ))·𝔣(σ)} of Hol(T^n) whose
// automorphism part lands in Aut⁰(T^n): orbit decomposition of {1..n} under
// 𝔣_{S_n}(H) for H = P^(1)×…×P^(n), rank relations, the commuting-pair
// relation on 𝔤, and the bound on #𝔤(ker 𝔣_{S_n}).

#include "hgcount/bigint.hpp"
#include "hgcount/error.hpp"
#include "hgcount/group.hpp"
#include "hgcount/holomorph.hpp"
#include "hgcount/power.hpp"
#include "hgcount/structured_endo.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hgcount {

/// (𝔣, 𝔤) over G = T^n with 𝔣 valued in Aut⁰; both tables indexed by encoded σ.
struct StructuredFGPair {
  std::vector<StructuredEndo> f;
  std::vector<int> g;  // encoded element of T^n
};

/// Converts a holomorph pair over N = direct_power(T, n); throws InputError
/// when some 𝔣(σ) is not of Aut⁰ shape.
inline StructuredFGPair to_structured_pair(const PowerContext& ctx, const Holomorph& hol,
                                           const FGPair& p) {
  StructuredFGPair out;
  out.g = p.g_map;
  std::vector<std::optional<StructuredEndo>> cache(hol.auts().size());
  std::vector<char> done(hol.auts().size(), 0);
  for (int id : p.f_map) {
    if (!done[id]) {
      cache[id] = to_structured(ctx, hol.auts()[id].images);
      done[id] = 1;
    }
    if (!cache[id] || !is_automorphism(*cache[id]))
      throw InputError("f has an image outside Aut0(G)");
    out.f.push_back(*cache[id]);
  }
  return out;
}

inline StructuredEndo coordinate_permutation(const std::vector<int>& theta) {
  StructuredEndo e{theta, std::vector<int>(theta.size(), AutomorphismGroup::identity_id())};
  if (!is_automorphism(e)) throw InputError("theta is not a permutation");
  return e;
}

/// x ↦ d x d^-1 with d = (t, …, t).
inline StructuredEndo diagonal_conjugation(const PowerContext& ctx, int t) {
  StructuredEndo e = identity_endo(ctx.rank());
  std::fill(e.phi.begin(), e.phi.end(), ctx.auts().conjugation_id(t));
  return e;
}

inline bool is_identity_permutation(const std::vector<int>& theta) {
  for (std::size_t i = 0; i < theta.size(); ++i)
    if (theta[i] != static_cast<int>(i) + 1) return false;
  return true;
}

/// ker(𝔣_{S_n}) as ascending encoded elements.
inline std::vector<int> permutation_kernel(const StructuredFGPair& p) {
  std::vector<int> ker;
  for (std::size_t s = 0; s < p.f.size(); ++s)
    if (is_identity_permutation(p.f[s].theta)) ker.push_back(static_cast<int>(s));
  return ker;
}

/// Elements of H = P^(1)×…×P^(n), encoded, identity first.
inline std::vector<int> prime_subgroup_elements(const PowerContext& ctx,
                                                const PrimeSubgroupChoice& choice) {
  const auto& t = ctx.factor();
  std::vector<std::vector<int>> cyclic;
  for (int gen : choice.generators) cyclic.push_back(generated_subgroup(t, {gen}));
  std::vector<int> digits(ctx.rank(), 0);
  std::vector<int> radix;
  for (const auto& c : cyclic) radix.push_back(static_cast<int>(c.size()));
  std::vector<int> out;
  do {
    PowerElement x = ctx.identity();
    for (int i = 0; i < ctx.rank(); ++i) x.coords[i] = cyclic[i][digits[i]];
    out.push_back(static_cast<int>(ctx.encode(x)));
  } while (detail::next_lex(digits, radix));
  return out;
}

struct OrbitDecomposition {
  int p = 0;
  std::vector<int> fixed;                  // X_0
  std::vector<std::vector<int>> orbits;    // X_1..X_r, each ascending
  std::vector<int> representatives;        // i_k = min X_k
  std::vector<int> transporter;            // transporter[i-1] = σ_i ∈ H (encoded), -1 on X_0
  std::vector<char> transporter_commutes;  // σ_i commutes with all of ker(𝔣_{S_n})
  int m = 0;                               // rank of 𝔣_{S_n}(H)
  std::vector<int> orbit_ranks;            // m_k with #X_k = p^m_k, or -1 if not a p-power
  std::size_t image_order = 0;             // |𝔣_{S_n}(H)|

  [[nodiscard]] int r() const { return static_cast<int>(orbits.size()); }
};

namespace detail {

inline int log_exact(std::size_t value, int p) {
  int k = 0;
  while (value > 1 && value % p == 0) {
    value /= p;
    ++k;
  }
  return value == 1 ? k : -1;
}

}  // namespace detail

inline OrbitDecomposition orbit_decompose(const PowerContext& ctx, const StructuredFGPair& pair,
                                          const PrimeSubgroupChoice& choice) {
  const int n = ctx.rank();
  const std::size_t m = ctx.element_count();
  if (pair.f.size() != m || pair.g.size() != m)
    throw InputError("(f, g) tables must be indexed by T^n");
  for (const auto& e : pair.f)
    if (!is_automorphism(e)) throw InputError("f has an image outside Aut0(G)");

  const auto& t = ctx.factor();
  auto h_elements = prime_subgroup_elements(ctx, choice);
  auto kernel = permutation_kernel(pair);

  std::set<std::vector<int>> image;
  for (int h : h_elements) image.insert(pair.f[h].theta);

  OrbitDecomposition d;
  d.p = choice.p;
  d.image_order = image.size();
  d.m = detail::log_exact(image.size(), choice.p);
  if (d.m < 0) throw std::logic_error("f_Sn(H) is not a p-group");

  std::vector<int> orbit_of(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit{i};
    orbit_of[i] = i;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& theta : image) {
        int j = theta[orbit[head] - 1];
        if (orbit_of[j] < 0) {
          orbit_of[j] = i;
          orbit.push_back(j);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) {
      d.fixed.push_back(i);
    } else {
      d.orbits.push_back(orbit);
      d.representatives.push_back(orbit.front());
      d.orbit_ranks.push_back(detail::log_exact(orbit.size(), choice.p));
    }
  }

  auto commutes_with_kernel = [&](int s) {
    auto x = ctx.decode(s);
    for (int k : kernel) {
      auto y = ctx.decode(k);
      for (int i = 0; i < n; ++i)
        if (!t.commute(x.coords[i], y.coords[i])) return false;
    }
    return true;
  };
  d.transporter.assign(n, -1);
  d.transporter_commutes.assign(n, 0);
  for (int k = 0; k < d.r(); ++k) {
    int rep = d.representatives[k];
    for (int i : d.orbits[k]) {
      int first = -1;
      for (int h : h_elements) {
        if (pair.f[h].theta[rep - 1] != i) continue;
        if (first < 0) first = h;
        if (commutes_with_kernel(h)) {
          d.transporter[i - 1] = h;
          d.transporter_commutes[i - 1] = 1;
          break;
        }
      }
      if (d.transporter[i - 1] < 0) d.transporter[i - 1] = first;
    }
  }
  return d;
}

struct RankBoundsReport {
  bool orbit_sizes_are_p_powers = false;  // #X_k = p^m_k with m_k >= 1
  bool moved_points_identity = false;     // n - #X_0 = Σ p^m_k
  bool rank_inequality = false;           // m <= Σ m_k
};

inline RankBoundsReport check_rank_bounds(int n, const OrbitDecomposition& d) {
  RankBoundsReport r;
  r.orbit_sizes_are_p_powers =
      std::all_of(d.orbit_ranks.begin(), d.orbit_ranks.end(), [](int mk) { return mk >= 1; });
  if (!r.orbit_sizes_are_p_powers) return r;
  long long moved = 0;
  int rank_sum = 0;
  for (int mk : d.orbit_ranks) {
    moved += static_cast<long long>(big_pow(BigInt(d.p), static_cast<unsigned>(mk)));
    rank_sum += mk;
  }
  r.moved_points_identity = n - static_cast<long long>(d.fixed.size()) == moved;
  r.rank_inequality = d.m <= rank_sum;
  return r;
}

/// For στ = τσ with τ ∈ ker(𝔣_{S_n}) and every coordinate i:
///   φ_{σ,i}(a_τ^(θ_σ(i))) = (a_σ^(i))^-1 · a_τ^(i) · φ_{τ,i}(a_σ^(i)).
inline bool check_relations_lemma(const PowerContext& ctx, const StructuredFGPair& p, int sigma,
                                  int tau) {
  const auto& t = ctx.factor();
  const auto& auts = ctx.auts();
  auto s = ctx.decode(sigma);
  auto u = ctx.decode(tau);
  if (ctx.mul(s, u) != ctx.mul(u, s)) throw PreconditionError("σ and τ do not commute");
  if (!is_identity_permutation(p.f[tau].theta)) throw PreconditionError("τ is not in ker(f_Sn)");
  auto a_sigma = ctx.decode(p.g[sigma]);
  auto a_tau = ctx.decode(p.g[tau]);
  const auto& fs = p.f[sigma];
  const auto& ft = p.f[tau];
  for (int i = 1; i <= ctx.rank(); ++i) {
    int lhs = auts.apply(fs.phi[i - 1], a_tau.at(fs.theta[i - 1]));
    int asi = a_sigma.at(i);
    int rhs = t.mul(t.mul(t.inv(asi), a_tau.at(i)), auts.apply(ft.phi[i - 1], asi));
    if (lhs != rhs) return false;
  }
  return true;
}

/// Subgroup of T^n generated by commutators of `subset`, compared to `subset`.
inline bool is_perfect_subgroup(const PowerContext& ctx, const std::vector<int>& subset) {
  std::vector<int> commutators;
  for (int x : subset) {
    auto a = ctx.decode(x);
    for (int y : subset) {
      auto b = ctx.decode(y);
      auto c = ctx.mul(ctx.mul(ctx.inv(a), ctx.inv(b)), ctx.mul(a, b));
      commutators.push_back(static_cast<int>(ctx.encode(c)));
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  auto derived = generate_closure<int>(0, commutators, [&](int x, int y) {
    return static_cast<int>(ctx.encode(ctx.mul(ctx.decode(x), ctx.decode(y))));
  });
  return derived == subset;
}

/// Whether e lies in Inn(T^n) = Inn(T)^n.
inline bool is_inner(const PowerContext& ctx, const StructuredEndo& e) {
  if (!is_identity_permutation(e.theta)) return false;
  return std::all_of(e.phi.begin(), e.phi.end(), [&](int id) { return ctx.auts().is_inner(id); });
}

struct GBoundReport {
  bool transporters_commute = false;  // hypothesis: every σ_i commutes with ker(𝔣_{S_n})
  bool containment = false;           // 𝔤(ker) lies in the product set built from the σ_i
  bool kernel_image_inner = false;    // 𝔣(ker 𝔣_{S_n}) ⊆ Inn(G)
  std::size_t image_size = 0;         // #𝔤(ker 𝔣_{S_n})
  BigInt fine_bound;                  // |T|^#X_0 · (|T|·|Inn T|)^r
  BigInt coarse_bound;                // |T|^(#X_0 + 2r)
  bool inequality_holds = false;      // image_size <= fine_bound <= coarse_bound
};

inline GBoundReport check_g_bound(const PowerContext& ctx, const StructuredFGPair& p,
                                  const OrbitDecomposition& d) {
  const auto& t = ctx.factor();
  const auto& auts = ctx.auts();
  auto kernel = permutation_kernel(p);
  GBoundReport r;
  r.transporters_commute = true;
  for (const auto& orbit : d.orbits)
    for (int i : orbit)
      if (!d.transporter_commutes[i - 1]) r.transporters_commute = false;
  r.kernel_image_inner = std::all_of(kernel.begin(), kernel.end(),
                                     [&](int k) { return is_inner(ctx, p.f[k]); });

  std::set<int> image;
  for (int k : kernel) image.insert(p.g[k]);
  r.image_size = image.size();

  // a_τ^(i) = φ_{σ_i,i_k}^-1((a_{σ_i}^(i_k))^-1 · a · φ(a_{σ_i}^(i_k))) with
  // a = a_τ^(i_k), φ = φ_{τ,i_k} (inner when 𝔣(ker) ⊆ Inn).
  r.containment = r.transporters_commute;
  for (int k = 0; k < d.r() && r.containment; ++k) {
    int rep = d.representatives[k];
    for (int tau : kernel) {
      auto a_tau = ctx.decode(p.g[tau]);
      int phi = p.f[tau].phi[rep - 1];
      if (r.kernel_image_inner && !auts.is_inner(phi)) r.containment = false;
      for (int i : d.orbits[k]) {
        int s = d.transporter[i - 1];
        int a_s = ctx.decode(p.g[s]).at(rep);
        int inner = t.mul(t.mul(t.inv(a_s), a_tau.at(rep)), auts.apply(phi, a_s));
        int expected = auts.apply(auts.inverse(p.f[s].phi[rep - 1]), inner);
        if (a_tau.at(i) != expected) r.containment = false;
      }
    }
  }

  const BigInt order = t.order();
  const BigInt inner_order = static_cast<int>(auts.inner_ids().size());
  const auto x0 = static_cast<unsigned>(d.fixed.size());
  const auto rr = static_cast<unsigned>(d.r());
  r.fine_bound = big_pow(order, x0) * big_pow(order * inner_order, rr);
  r.coarse_bound = big_pow(order, x0 + 2 * rr);
  r.inequality_holds = BigInt(r.image_size) <= r.fine_bound && r.fine_bound <= r.coarse_bound;
  return r;
}

/// Instance audit of the prime bound: when 𝔣_{S_n}(H) ≠ 1, |𝔣_{S_n}(G)| = |T|^m,
/// 𝔤 is bijective and the kernel-image bound holds, the orbit data must satisfy
/// Σ(p^m_k - 2) <= Σ m_k, which forces p <= 3.
struct PrimeBoundAudit {
  bool applicable = false;
  bool derived_inequality = false;
  bool p_at_most_3 = false;

  [[nodiscard]] bool consistent() const { return !applicable || (derived_inequality && p_at_most_3); }
};

inline PrimeBoundAudit audit_prime_bound(const PowerContext& ctx, const StructuredFGPair& p,
                                         const OrbitDecomposition& d, const GBoundReport& bound) {
  PrimeBoundAudit a;
  std::set<std::vector<int>> full_image;
  for (const auto& e : p.f) full_image.insert(e.theta);
  bool full_image_order = BigInt(full_image.size()) ==
                          big_pow(BigInt(ctx.factor().order()), static_cast<unsigned>(d.m));
  a.applicable = d.image_order > 1 && full_image_order && is_bijective(p.g) &&
                 bound.kernel_image_inner && bound.inequality_holds;
  long long lhs = 0, rhs = 0;
  for (int mk : d.orbit_ranks) {
    lhs += static_cast<long long>(big_pow(BigInt(d.p), static_cast<unsigned>(mk))) - 2;
    rhs += mk;
  }
  a.derived_inequality = lhs <= rhs;
  a.p_at_most_3 = d.p <= 3;
  return a;
}

}  // namespace hgcount
