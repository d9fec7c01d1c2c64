#include "fusionkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fusionkit {

namespace detail {

struct PermGroupAccess {
  // elements must already be a sorted, closed set.
  static PermGroup make(std::size_t degree, std::vector<Perm> gens,
                        std::vector<Perm> elements) {
    PermGroup g;
    g.degree_ = degree;
    g.generators_ = std::move(gens);
    g.elements_ = std::move(elements);
    return g;
  }
};

}  // namespace detail

namespace {

using detail::PermGroupAccess;

// Closure of seed under left multiplication by gens, starting at the identity.
std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& gens,
                          std::size_t cap) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    Perm x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Perm y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw BoundExceeded("generate: group order exceeds " +
                              std::to_string(cap));
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

PermGroup with_small_generators(PermGroup group) {
  auto gens = small_generating_set(group);
  auto degree = group.degree();
  auto elements = group.elements();
  return PermGroupAccess::make(degree, std::move(gens), std::move(elements));
}

}  // namespace

bool PermGroup::contains(const Perm& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::optional<std::size_t> PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

PermGroup generate(std::size_t degree, std::vector<Perm> gens,
                   const Limits& limits) {
  if (degree == 0) throw InvalidInput("generate: degree must be positive");
  if (degree > limits.max_degree) {
    throw BoundExceeded("generate: degree " + std::to_string(degree) +
                        " exceeds " + std::to_string(limits.max_degree));
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw InvalidInput("generate: generator " + g.to_cycle_string() +
                         " has degree " + std::to_string(g.degree()) +
                         ", expected " + std::to_string(degree));
    }
  }
  auto elements = closure(degree, gens, limits.max_generated_order);
  return PermGroupAccess::make(degree, std::move(gens), std::move(elements));
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 1) return generate(1, {});
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>(i);
    gens.push_back(Perm::from_cycles(n, {cycle}));
  }
  return generate(n, std::move(gens));
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 1) return generate(1, {});
  std::vector<int> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>(i);
  return generate(n, {Perm::from_cycles(n, {cycle})});
}

PermGroup abelian_perm_group(std::span<const std::size_t> orders,
                             const Limits& limits) {
  std::size_t degree = 0;
  for (auto n : orders) {
    if (n < 1) throw InvalidInput("abelian_perm_group: factor order must be >= 1");
    degree += n;
  }
  if (degree == 0) degree = 1;
  std::vector<Perm> gens;
  int offset = 0;
  for (auto n : orders) {
    if (n > 1) {
      std::vector<int> cycle(n);
      for (std::size_t i = 0; i < n; ++i) cycle[i] = offset + static_cast<int>(i);
      gens.push_back(Perm::from_cycles(degree, {cycle}));
    }
    offset += static_cast<int>(n);
  }
  return generate(degree, std::move(gens), limits);
}

bool canonical_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

std::vector<Perm> small_generating_set(const PermGroup& group) {
  std::vector<Perm> candidates = group.elements();
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Perm& a, const Perm& b) { return a.order() > b.order(); });
  std::vector<Perm> gens;
  std::vector<Perm> span{Perm::identity(group.degree())};
  for (const auto& g : candidates) {
    if (span.size() == group.order()) break;
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(group.degree(), gens, group.order());
  }
  return gens;
}

std::vector<PermGroup> all_subgroups(const PermGroup& group,
                                     const Limits& limits) {
  if (group.order() > limits.max_group_order) {
    throw BoundExceeded("all_subgroups: group order " +
                        std::to_string(group.order()) + " exceeds " +
                        std::to_string(limits.max_group_order));
  }
  const auto degree = group.degree();
  // Distinct cyclic subgroups, one generator each.
  std::map<std::vector<Perm>, Perm> cyclic;
  for (const auto& g : group.elements()) {
    auto elements = closure(degree, {g}, group.order());
    cyclic.emplace(std::move(elements), g);
  }

  std::map<std::vector<Perm>, std::vector<Perm>> found;  // elements -> gens
  std::deque<std::vector<Perm>> queue;
  for (const auto& [elements, g] : cyclic) {
    std::vector<Perm> gens;
    if (!g.is_identity()) gens.push_back(g);
    found.emplace(elements, gens);
    queue.push_back(elements);
  }
  while (!queue.empty()) {
    auto elements = std::move(queue.front());
    queue.pop_front();
    const auto gens = found.at(elements);
    for (const auto& [cyc, g] : cyclic) {
      if (std::binary_search(elements.begin(), elements.end(), g)) continue;
      auto joined_gens = gens;
      joined_gens.push_back(g);
      auto joined = closure(degree, joined_gens, group.order());
      if (found.emplace(joined, joined_gens).second) queue.push_back(std::move(joined));
    }
  }

  std::vector<PermGroup> result;
  result.reserve(found.size());
  for (auto& [elements, gens] : found) {
    result.push_back(with_small_generators(
        PermGroupAccess::make(degree, gens, elements)));
  }
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

std::vector<SubgroupClass> classify_subgroups(const PermGroup& group,
                                              const Limits& limits) {
  auto subgroups = all_subgroups(group, limits);
  std::map<std::vector<Perm>, std::size_t> position;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    position.emplace(subgroups[i].elements(), i);
  }
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<SubgroupClass> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::set<std::size_t> orbit;
    for (const auto& g : group.elements()) {
      std::vector<Perm> conj;
      conj.reserve(subgroups[i].order());
      for (const auto& x : subgroups[i].elements()) conj.push_back(conjugate(g, x));
      std::sort(conj.begin(), conj.end());
      orbit.insert(position.at(conj));
    }
    for (auto k : orbit) assigned[k] = true;
    classes.push_back({subgroups[i], orbit.size()});
  }
  return classes;
}

PermGroup centralizer(const PermGroup& group, std::span<const Perm> subset) {
  for (const auto& s : subset) {
    if (!group.contains(s)) {
      throw InvalidInput("centralizer: " + s.to_cycle_string() +
                         " is not an element of the group");
    }
  }
  std::vector<Perm> elements;
  for (const auto& g : group.elements()) {
    bool commutes = std::all_of(subset.begin(), subset.end(),
                                [&](const Perm& s) { return g * s == s * g; });
    if (commutes) elements.push_back(g);
  }
  return with_small_generators(
      PermGroupAccess::make(group.degree(), {}, std::move(elements)));
}

PermGroup center(const PermGroup& group) {
  return centralizer(group, group.elements());
}

GroupAut inner_automorphism(const PermGroup& group, const Perm& g) {
  GroupAut aut;
  aut.mapping.reserve(group.order());
  for (const auto& x : group.elements()) {
    aut.mapping.push_back(*group.index_of(conjugate(g, x)));
  }
  return aut;
}

bool is_automorphism(const PermGroup& group, const GroupAut& aut) {
  const auto n = group.order();
  if (aut.mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : aut.mapping) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  const auto& el = group.elements();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto ab = *group.index_of(el[a] * el[b]);
      if (el[aut.mapping[ab]] != el[aut.mapping[a]] * el[aut.mapping[b]]) return false;
    }
  }
  return true;
}

namespace {

// Backtracking search for homomorphisms determined by generator images.
class AutSearch {
 public:
  AutSearch(const PermGroup& group, std::vector<Perm> gens)
      : group_(group), gens_(std::move(gens)) {
    const auto& el = group_.elements();
    gen_index_.reserve(gens_.size());
    for (const auto& g : gens_) gen_index_.push_back(*group_.index_of(g));
    left_mul_.assign(gens_.size(), std::vector<std::size_t>(el.size()));
    full_mul_.assign(el.size(), std::vector<std::size_t>(el.size()));
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = 0; b < el.size(); ++b) {
        full_mul_[a][b] = *group_.index_of(el[a] * el[b]);
      }
    }
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      for (std::size_t x = 0; x < el.size(); ++x) {
        left_mul_[k][x] = full_mul_[gen_index_[k]][x];
      }
    }
    for (const auto& g : gens_) {
      std::vector<std::size_t> same_order;
      for (std::size_t i = 0; i < el.size(); ++i) {
        if (el[i].order() == g.order()) same_order.push_back(i);
      }
      candidates_.push_back(std::move(same_order));
    }
  }

  std::vector<GroupAut> run() {
    images_.clear();
    recurse(0);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Extends the generator images to <gens[0..k)>; empty on conflict.
  std::vector<std::size_t> extend(std::size_t k) const {
    const auto n = group_.order();
    std::vector<std::size_t> map(n, kUnset);
    std::vector<bool> used(n, false);
    map[0] = 0;
    used[0] = true;
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
      auto x = frontier.front();
      frontier.pop_front();
      for (std::size_t i = 0; i < k; ++i) {
        auto y = left_mul_[i][x];
        auto img = full_mul_[images_[i]][map[x]];
        if (map[y] == kUnset) {
          if (used[img]) return {};
          map[y] = img;
          used[img] = true;
          frontier.push_back(y);
        } else if (map[y] != img) {
          return {};
        }
      }
    }
    return map;
  }

  void recurse(std::size_t k) {
    if (k == gens_.size()) {
      auto map = extend(k);
      if (map.empty()) return;
      if (std::find(map.begin(), map.end(), kUnset) != map.end()) return;
      results_.push_back({std::move(map)});
      return;
    }
    for (auto c : candidates_[k]) {
      images_.push_back(c);
      if (!extend(k + 1).empty()) recurse(k + 1);
      images_.pop_back();
    }
  }

  const PermGroup& group_;
  std::vector<Perm> gens_;
  std::vector<std::size_t> gen_index_;
  std::vector<std::vector<std::size_t>> left_mul_;
  std::vector<std::vector<std::size_t>> full_mul_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> images_;
  std::vector<GroupAut> results_;
};

}  // namespace

std::vector<GroupAut> automorphism_group(const PermGroup& group,
                                         const Limits& limits) {
  if (group.order() > limits.max_aut_group_order) {
    throw BoundExceeded("automorphism_group: group order " +
                        std::to_string(group.order()) + " exceeds " +
                        std::to_string(limits.max_aut_group_order));
  }
  return AutSearch(group, small_generating_set(group)).run();
}

std::string describe(const PermGroup& group) {
  if (group.generators().empty()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < group.generators().size(); ++i) {
    if (i) out += ", ";
    out += group.generators()[i].to_cycle_string();
  }
  return out + ">";
}

}  // namespace fusionkit
