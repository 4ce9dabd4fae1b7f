#pragma once

// Structured endomorphisms of G = T^n:
//   (x^(1),…,x^(n)) ↦ (φ_1(x^(θ(1))),…,φ_n(x^(θ(n))))
// with θ: {1..n} -> {0..n} and φ_i trivial exactly when θ(i) = 0, otherwise
// an automorphism of T (stored by canonical id, reindexing implicit).

#include "hgcount/bigint.hpp"
#include "hgcount/error.hpp"
#include "hgcount/power.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hgcount {

inline constexpr int kTrivialPhi = -1;

/// Default cap on the number of items an exhaustive enumeration may visit.
inline constexpr std::size_t kDefaultEnumerationBudget = 100'000'000;

struct StructuredEndo {
  std::vector<int> theta;  // theta[i-1] = θ(i) in 0..n
  std::vector<int> phi;    // phi[i-1] = automorphism id, or kTrivialPhi iff θ(i) = 0

  [[nodiscard]] int rank() const { return static_cast<int>(theta.size()); }
  auto operator<=>(const StructuredEndo&) const = default;
};

inline void validate(const PowerContext& ctx, const StructuredEndo& e) {
  const int n = ctx.rank();
  if (e.rank() != n || static_cast<int>(e.phi.size()) != n)
    throw InputError("structured endomorphism has rank " + std::to_string(e.rank()) +
                     ", expected " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (e.theta[i] < 0 || e.theta[i] > n)
      throw InputError("theta(" + std::to_string(i + 1) + ") = " + std::to_string(e.theta[i]) +
                       " outside 0.." + std::to_string(n));
    if ((e.theta[i] == 0) != (e.phi[i] == kTrivialPhi))
      throw InputError("phi(" + std::to_string(i + 1) + ") must be trivial exactly when theta = 0");
    if (e.phi[i] != kTrivialPhi && (e.phi[i] < 0 || e.phi[i] >= ctx.aut_order()))
      throw InputError("automorphism id " + std::to_string(e.phi[i]) + " out of range");
  }
}

inline StructuredEndo identity_endo(int n) {
  StructuredEndo e{std::vector<int>(n), std::vector<int>(n, AutomorphismGroup::identity_id())};
  for (int i = 0; i < n; ++i) e.theta[i] = i + 1;
  return e;
}

inline StructuredEndo trivial_endo(int n) {
  return StructuredEndo{std::vector<int>(n, 0), std::vector<int>(n, kTrivialPhi)};
}

inline int apply_coordinate(const PowerContext& ctx, const StructuredEndo& e, int i,
                            const PowerElement& x) {
  int source = e.theta[i - 1];
  return source == 0 ? 0 : ctx.auts().apply(e.phi[i - 1], x.coords[source - 1]);
}

inline PowerElement apply(const PowerContext& ctx, const StructuredEndo& e, const PowerElement& x) {
  PowerElement y{std::vector<int>(ctx.rank())};
  for (int i = 1; i <= ctx.rank(); ++i) y.coords[i - 1] = apply_coordinate(ctx, e, i, x);
  return y;
}

/// θ restricted to {1..n} is a permutation.
inline bool is_automorphism(const StructuredEndo& e) {
  std::vector<char> hit(e.rank() + 1, 0);
  for (int t : e.theta) {
    if (t == 0 || hit[t]) return false;
    hit[t] = 1;
  }
  return true;
}

/// e1∘e2 (apply e2 first).
inline StructuredEndo compose(const PowerContext& ctx, const StructuredEndo& e1,
                              const StructuredEndo& e2) {
  const int n = ctx.rank();
  StructuredEndo r = trivial_endo(n);
  for (int i = 0; i < n; ++i) {
    int mid = e1.theta[i];
    if (mid == 0) continue;
    int src = e2.theta[mid - 1];
    if (src == 0) continue;
    r.theta[i] = src;
    r.phi[i] = ctx.auts().compose(e1.phi[i], e2.phi[mid - 1]);
  }
  return r;
}

inline StructuredEndo inverse(const PowerContext& ctx, const StructuredEndo& e) {
  if (!is_automorphism(e)) throw PreconditionError("structured endomorphism is not invertible");
  const int n = ctx.rank();
  StructuredEndo r = trivial_endo(n);
  for (int i = 1; i <= n; ++i) {
    int j = e.theta[i - 1];
    r.theta[j - 1] = i;
    r.phi[j - 1] = ctx.auts().inverse(e.phi[i - 1]);
  }
  return r;
}

inline BigInt count_end0(int aut_order, int n) {
  return big_pow(BigInt(1) + BigInt(n) * aut_order, static_cast<unsigned>(n));
}

inline BigInt count_aut0(int aut_order, int n) {
  return big_pow(BigInt(aut_order), static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n));
}

inline void require_budget(const BigInt& size, std::size_t budget, const std::string& what) {
  if (size > budget)
    throw BudgetExceeded(what + " needs " + to_string(size) + " steps, budget is " +
                         std::to_string(budget));
}

namespace detail {

// Lexicographic odometer step (last digit fastest); false on wrap-around.
inline bool next_lex(std::vector<int>& digits, const std::vector<int>& radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix[i]) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace detail

/// Streams End⁰(T^n): θ lexicographic, then φ ids lexicographic.
/// `visit(const StructuredEndo&)` returns false to stop.
template <class Visit>
void for_each_end0(const PowerContext& ctx, Visit visit,
                   std::size_t budget = kDefaultEnumerationBudget) {
  const int n = ctx.rank();
  require_budget(count_end0(ctx.aut_order(), n), budget, "End0 enumeration");
  StructuredEndo e = trivial_endo(n);
  std::vector<int> theta_radix(n, n + 1);
  do {
    std::vector<int> slots;
    for (int i = 0; i < n; ++i)
      if (e.theta[i] != 0) slots.push_back(i);
    std::vector<int> digits(slots.size(), 0);
    std::vector<int> radix(slots.size(), ctx.aut_order());
    for (int i = 0; i < n; ++i) e.phi[i] = kTrivialPhi;
    do {
      for (std::size_t s = 0; s < slots.size(); ++s) e.phi[slots[s]] = digits[s];
      if (!visit(std::as_const(e))) return;
    } while (detail::next_lex(digits, radix));
  } while (detail::next_lex(e.theta, theta_radix));
}

/// Streams Aut⁰(T^n) = Aut(T) wr S_n in the same order as for_each_end0.
template <class Visit>
void for_each_aut0(const PowerContext& ctx, Visit visit,
                   std::size_t budget = kDefaultEnumerationBudget) {
  const int n = ctx.rank();
  require_budget(count_aut0(ctx.aut_order(), n), budget, "Aut0 enumeration");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    StructuredEndo e{perm, std::vector<int>(n, 0)};
    std::vector<int> radix(n, ctx.aut_order());
    do {
      if (!visit(std::as_const(e))) return;
    } while (detail::next_lex(e.phi, radix));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<StructuredEndo> enumerate_end0(const PowerContext& ctx,
                                                  std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<StructuredEndo> out;
  for_each_end0(ctx, [&](const StructuredEndo& e) {
    out.push_back(e);
    return true;
  }, budget);
  return out;
}

inline std::vector<StructuredEndo> enumerate_aut0(const PowerContext& ctx,
                                                  std::size_t budget = kDefaultEnumerationBudget) {
  std::vector<StructuredEndo> out;
  for_each_aut0(ctx, [&](const StructuredEndo& e) {
    out.push_back(e);
    return true;
  }, budget);
  return out;
}

/// Endomorphism as a table over encoded elements of T^n.
inline std::vector<int> to_table(const PowerContext& ctx, const StructuredEndo& e) {
  const std::size_t m = ctx.element_count();
  if (m == 0 || m > kDirectPowerTableLimit) throw BudgetExceeded("T^n too large for a table");
  std::vector<int> table(m);
  for (std::size_t code = 0; code < m; ++code)
    table[code] = static_cast<int>(ctx.encode(apply(ctx, e, ctx.decode(code))));
  return table;
}

/// Recognizes an endomorphism table of T^n (over encoded elements) as an
/// element of End⁰; nullopt if it does not have the structured shape.
inline std::optional<StructuredEndo> to_structured(const PowerContext& ctx,
                                                   const std::vector<int>& table) {
  const int n = ctx.rank();
  const int t = ctx.factor().order();
  StructuredEndo e = trivial_endo(n);
  // Determine, for each output coordinate i, which input coordinate it reads.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::vector<int> restricted(t);
      bool nontrivial = false;
      for (int x = 0; x < t; ++x) {
        PowerElement in = ctx.identity();
        in.coords[j - 1] = x;
        int out = ctx.decode(table[ctx.encode(in)]).coords[i - 1];
        restricted[x] = out;
        nontrivial = nontrivial || out != 0;
      }
      if (!nontrivial) continue;
      if (e.theta[i - 1] != 0) return std::nullopt;
      int id = ctx.auts().id_of(restricted);
      if (id < 0) return std::nullopt;
      e.theta[i - 1] = j;
      e.phi[i - 1] = id;
    }
  }
  for (std::size_t code = 0; code < table.size(); ++code)
    if (static_cast<std::size_t>(table[code]) != ctx.encode(apply(ctx, e, ctx.decode(code))))
      return std::nullopt;
  return e;
}

inline std::string to_string(const StructuredEndo& e) {
  std::string s = "theta=";
  for (std::size_t i = 0; i < e.theta.size(); ++i) s += (i ? "," : "") + std::to_string(e.theta[i]);
  s += " phi=";
  for (std::size_t i = 0; i < e.phi.size(); ++i)
    s += (i ? "," : "") + (e.phi[i] == kTrivialPhi ? std::string("-") : std::to_string(e.phi[i]));
  return s;
}

}  // namespace hgcount
