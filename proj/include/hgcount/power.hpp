#pragma once

// G = T^n: coordinate vectors over a factor group T, and the Aut(T) data the
// structured-endomorphism machinery needs.

#include "hgcount/automorphism.hpp"
#include "hgcount/error.hpp"
#include "hgcount/group.hpp"

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace hgcount {

/// σ = (σ^(1),…,σ^(n)); coords[i-1] holds coordinate i.
struct PowerElement {
  std::vector<int> coords;

  [[nodiscard]] int size() const { return static_cast<int>(coords.size()); }
  [[nodiscard]] bool is_identity() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
  }
  /// Coordinate i in 1..n; coordinate 0 is the identity by convention.
  [[nodiscard]] int at(int i) const { return i == 0 ? 0 : coords[i - 1]; }

  auto operator<=>(const PowerElement&) const = default;
};

inline std::string to_string(const PowerElement& x) {
  std::string s;
  for (std::size_t i = 0; i < x.coords.size(); ++i) s += (i ? "," : "") + std::to_string(x.coords[i]);
  return s;
}

class PowerContext {
 public:
  PowerContext(FiniteGroup factor, int n) : auts_(std::move(factor)), n_(n) {
    if (n < 1) throw PreconditionError("power rank n must be >= 1");
    has_fpf_ = auts_.has_fixed_point_free();
  }

  [[nodiscard]] const FiniteGroup& factor() const { return auts_.group(); }
  [[nodiscard]] const AutomorphismGroup& auts() const { return auts_; }
  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] int aut_order() const { return auts_.size(); }
  [[nodiscard]] bool factor_has_fpf_automorphism() const { return has_fpf_; }

  /// |T|^n, or 0 if it does not fit in size_t.
  [[nodiscard]] std::size_t element_count() const {
    std::size_t m = 1;
    for (int i = 0; i < n_; ++i) {
      if (m > static_cast<std::size_t>(-1) / factor().order()) return 0;
      m *= factor().order();
    }
    return m;
  }

  [[nodiscard]] PowerElement identity() const { return PowerElement{std::vector<int>(n_, 0)}; }

  [[nodiscard]] PowerElement mul(const PowerElement& x, const PowerElement& y) const {
    check(x);
    check(y);
    PowerElement r{std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) r.coords[i] = factor().mul(x.coords[i], y.coords[i]);
    return r;
  }

  [[nodiscard]] PowerElement inv(const PowerElement& x) const {
    check(x);
    PowerElement r{std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) r.coords[i] = factor().inv(x.coords[i]);
    return r;
  }

  [[nodiscard]] int element_order(const PowerElement& x) const {
    check(x);
    int l = 1;
    for (int c : x.coords) l = std::lcm(l, factor().element_order(c));
    return l;
  }

  [[nodiscard]] std::size_t encode(const PowerElement& x) const {
    return encode_power(factor().order(), x.coords);
  }
  [[nodiscard]] PowerElement decode(std::size_t code) const {
    return PowerElement{decode_power(factor().order(), n_, code)};
  }

  void check(const PowerElement& x) const {
    if (x.size() != n_) throw InputError("power element has wrong length");
    for (int c : x.coords)
      if (c < 0 || c >= factor().order())
        throw InputError("coordinate " + std::to_string(c) + " out of range for " + factor().name());
  }

 private:
  AutomorphismGroup auts_;
  int n_;
  bool has_fpf_ = false;
};

/// Generators of H = P^(1)×…×P^(n), one order-p element of T per coordinate.
struct PrimeSubgroupChoice {
  int p = 0;
  std::vector<int> generators;
};

inline std::vector<int> elements_of_order(const FiniteGroup& t, int order) {
  std::vector<int> out;
  for (int x = 1; x < t.order(); ++x)
    if (t.element_order(x) == order) out.push_back(x);
  return out;
}

/// Order-p subgroups of T, each represented by its lowest-index generator, in
/// increasing order of that generator.
inline std::vector<int> prime_subgroup_representatives(const FiniteGroup& t, int p) {
  std::vector<int> reps;
  std::vector<char> covered(t.order(), 0);
  for (int x : elements_of_order(t, p)) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (int y : generated_subgroup(t, {x})) covered[y] = 1;
  }
  return reps;
}

/// Deterministic choice of P^(i): the `choice`-th order-p subgroup of T
/// (0 = the one containing the lowest-index element of order p), same in every coordinate.
inline PrimeSubgroupChoice choose_prime_subgroups(const FiniteGroup& t, int n, int p,
                                                  int choice = 0) {
  if (p < 2 || t.order() % p != 0)
    throw PreconditionError(std::to_string(p) + " does not divide |" + t.name() + "| = " +
                            std::to_string(t.order()));
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError(std::to_string(p) + " is not prime");
  auto reps = prime_subgroup_representatives(t, p);
  if (choice < 0 || choice >= static_cast<int>(reps.size()))
    throw PreconditionError("no order-" + std::to_string(p) + " subgroup choice #" +
                            std::to_string(choice));
  return PrimeSubgroupChoice{p, std::vector<int>(n, reps[choice])};
}

}  // namespace hgcount
