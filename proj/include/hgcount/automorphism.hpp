#pragma once

// Automorphisms, homomorphisms and crossed homomorphisms via generator-image
// backtracking.

#include "hgcount/group.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hgcount {

/// Extends generator images of `source` to a map on all of <gens>, visiting
/// every consistent assignment.
///
/// The map value on x*g_j is derived from the value on x by
/// `step(value(x), x, j, image_j)`. Consistency is checked incrementally on
/// <g_0..g_j> after each level, so inconsistent prefixes are pruned early.
/// `candidates(j)` lists the admissible images of generator j. `visit`
/// receives the completed table and returns false to stop the search.
template <class Candidates, class Step, class Visit>
void extend_generator_images(const FiniteGroup& source, const std::vector<int>& gens,
                             int identity_value, Candidates candidates, Step step, Visit visit) {
  const int k = static_cast<int>(gens.size());
  std::vector<int> images(k, -1);
  std::vector<int> values(source.order());
  std::vector<int> queue;
  queue.reserve(source.order());

  // Fills `values` on <g_0..g_level>; false on the first inconsistency.
  auto propagate = [&](int level) {
    std::fill(values.begin(), values.end(), -1);
    values[0] = identity_value;
    queue.assign(1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int j = 0; j <= level; ++j) {
        int y = source.mul(x, gens[j]);
        int v = step(values[x], x, j, images[j]);
        if (values[y] < 0) {
          values[y] = v;
          queue.push_back(y);
        } else if (values[y] != v) {
          return false;
        }
      }
    }
    return true;
  };

  bool keep_going = true;
  std::function<void(int)> descend = [&](int level) {
    for (int candidate : candidates(level)) {
      if (!keep_going) return;
      images[level] = candidate;
      if (!propagate(level)) continue;
      if (level + 1 == k) {
        keep_going = visit(std::as_const(values));
      } else {
        descend(level + 1);
      }
    }
  };
  if (k == 0) {
    std::fill(values.begin(), values.end(), identity_value);
    visit(std::as_const(values));
    return;
  }
  descend(0);
}

/// All elements of `target` whose order divides `order`.
inline std::vector<int> elements_with_order_dividing(const FiniteGroup& target, int order) {
  std::vector<int> out;
  for (int x = 0; x < target.order(); ++x)
    if (order % target.element_order(x) == 0) out.push_back(x);
  return out;
}

/// Visits every homomorphism source -> target as an image table.
template <class Visit>
void for_each_homomorphism(const FiniteGroup& source, const FiniteGroup& target, Visit visit) {
  auto gens = generating_sequence(source);
  std::vector<std::vector<int>> cands;
  for (int g : gens) cands.push_back(elements_with_order_dividing(target, source.element_order(g)));
  extend_generator_images(
      source, gens, 0, [&](int j) -> const std::vector<int>& { return cands[j]; },
      [&](int vx, int, int, int img) { return target.mul(vx, img); }, visit);
}

inline std::vector<std::vector<int>> enumerate_homomorphisms(const FiniteGroup& source,
                                                             const FiniteGroup& target) {
  std::vector<std::vector<int>> homs;
  for_each_homomorphism(source, target, [&](const std::vector<int>& h) {
    homs.push_back(h);
    return true;
  });
  std::sort(homs.begin(), homs.end());
  return homs;
}

inline bool is_bijective(const std::vector<int>& table) {
  std::vector<char> hit(table.size(), 0);
  for (int v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= table.size() || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

inline bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                            const std::vector<int>& map) {
  for (int x = 0; x < source.order(); ++x)
    for (int y = 0; y < source.order(); ++y)
      if (map[source.mul(x, y)] != target.mul(map[x], map[y])) return false;
  return true;
}

/// Some isomorphism a -> b, if one exists.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto gens = generating_sequence(a);
  std::vector<std::vector<int>> cands;
  for (int g : gens) {
    std::vector<int> same_order;
    for (int x = 0; x < b.order(); ++x)
      if (b.element_order(x) == a.element_order(g)) same_order.push_back(x);
    cands.push_back(std::move(same_order));
  }
  std::optional<std::vector<int>> found;
  extend_generator_images(
      a, gens, 0, [&](int j) -> const std::vector<int>& { return cands[j]; },
      [&](int vx, int, int, int img) { return b.mul(vx, img); },
      [&](const std::vector<int>& map) {
        if (!is_bijective(map)) return true;
        found = map;
        return false;
      });
  return found;
}

inline bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

struct Automorphism {
  std::vector<int> images;

  [[nodiscard]] int operator()(int x) const { return images[x]; }
  auto operator<=>(const Automorphism&) const = default;
};

/// Every automorphism of g, sorted lexicographically by image table.
inline std::vector<Automorphism> enumerate_automorphisms(const FiniteGroup& g) {
  auto gens = generating_sequence(g);
  std::vector<std::vector<int>> cands;
  for (int x : gens) {
    std::vector<int> same_order;
    for (int y = 0; y < g.order(); ++y)
      if (g.element_order(y) == g.element_order(x)) same_order.push_back(y);
    cands.push_back(std::move(same_order));
  }
  std::vector<Automorphism> auts;
  extend_generator_images(
      g, gens, 0, [&](int j) -> const std::vector<int>& { return cands[j]; },
      [&](int vx, int, int, int img) { return g.mul(vx, img); },
      [&](const std::vector<int>& map) {
        if (is_bijective(map)) auts.push_back(Automorphism{map});
        return true;
      });
  std::sort(auts.begin(), auts.end());
  return auts;
}

inline bool is_fixed_point_free(const Automorphism& a) {
  for (std::size_t x = 1; x < a.images.size(); ++x)
    if (a.images[x] == static_cast<int>(x)) return false;
  return true;
}

inline constexpr std::size_t kAutCompositionTableLimit = 2048;

/// Aut(G) in canonical order, with id lookup, composition and Inn(G).
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;

  explicit AutomorphismGroup(FiniteGroup group)
      : group_(std::move(group)), auts_(enumerate_automorphisms(group_)) {
    const int a = size();
    inverse_.resize(a);
    for (int id = 0; id < a; ++id) {
      std::vector<int> inv(group_.order());
      for (int x = 0; x < group_.order(); ++x) inv[auts_[id].images[x]] = x;
      inverse_[id] = id_of(inv);
    }
    if (static_cast<std::size_t>(a) <= kAutCompositionTableLimit) {
      compose_.resize(static_cast<std::size_t>(a) * a);
      for (int x = 0; x < a; ++x)
        for (int y = 0; y < a; ++y)
          compose_[static_cast<std::size_t>(x) * a + y] = compose_slow(x, y);
    }
    is_inner_.assign(a, 0);
    for (int h = 0; h < group_.order(); ++h) {
      int id = conjugation_id(h);
      if (!is_inner_[id]) {
        is_inner_[id] = 1;
        inner_.push_back(id);
      }
    }
    std::sort(inner_.begin(), inner_.end());
  }

  [[nodiscard]] const FiniteGroup& group() const { return group_; }
  [[nodiscard]] int size() const { return static_cast<int>(auts_.size()); }
  [[nodiscard]] const std::vector<Automorphism>& all() const { return auts_; }
  [[nodiscard]] const Automorphism& operator[](int id) const { return auts_[id]; }
  [[nodiscard]] static constexpr int identity_id() { return 0; }

  [[nodiscard]] int apply(int id, int x) const { return auts_[id].images[x]; }

  /// Canonical id of an image table, or -1 if it is not an automorphism of the group.
  [[nodiscard]] int id_of(const std::vector<int>& images) const {
    auto it = std::lower_bound(auts_.begin(), auts_.end(), images,
                               [](const Automorphism& a, const std::vector<int>& v) {
                                 return a.images < v;
                               });
    if (it == auts_.end() || it->images != images) return -1;
    return static_cast<int>(it - auts_.begin());
  }

  /// Id of a∘b (apply b first).
  [[nodiscard]] int compose(int a, int b) const {
    if (!compose_.empty()) return compose_[static_cast<std::size_t>(a) * size() + b];
    return compose_slow(a, b);
  }
  [[nodiscard]] int inverse(int id) const { return inverse_[id]; }

  /// Id of x -> h x h^-1.
  [[nodiscard]] int conjugation_id(int h) const {
    std::vector<int> images(group_.order());
    for (int x = 0; x < group_.order(); ++x) images[x] = group_.conjugate(h, x);
    return id_of(images);
  }

  [[nodiscard]] const std::vector<int>& inner_ids() const { return inner_; }
  [[nodiscard]] bool is_inner(int id) const { return is_inner_[id] != 0; }

  [[nodiscard]] bool has_fixed_point_free() const {
    return std::any_of(auts_.begin(), auts_.end(),
                       [](const Automorphism& a) { return is_fixed_point_free(a); });
  }

  /// Aut(G) itself as a table group (ids are element indices).
  [[nodiscard]] FiniteGroup as_group() const {
    const int a = size();
    std::vector<int> table(static_cast<std::size_t>(a) * a);
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < a; ++y) table[static_cast<std::size_t>(x) * a + y] = compose(x, y);
    return FiniteGroup::from_table("Aut(" + group_.name() + ")", a, std::move(table));
  }

 private:
  [[nodiscard]] int compose_slow(int a, int b) const {
    std::vector<int> images(group_.order());
    for (int x = 0; x < group_.order(); ++x) images[x] = auts_[a].images[auts_[b].images[x]];
    return id_of(images);
  }

  FiniteGroup group_;
  std::vector<Automorphism> auts_;
  std::vector<int> inverse_;
  std::vector<int> compose_;
  std::vector<int> inner_;
  std::vector<char> is_inner_;
};

inline std::vector<Automorphism> inner_automorphisms(const AutomorphismGroup& auts) {
  std::vector<Automorphism> out;
  for (int id : auts.inner_ids()) out.push_back(auts[id]);
  return out;
}

inline bool has_fpf_automorphism(const FiniteGroup& g) {
  return AutomorphismGroup(g).has_fixed_point_free();
}

}  // namespace hgcount
