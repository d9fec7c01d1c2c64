#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/perm.hpp"

namespace fusionkit {

namespace detail {
struct PermGroupAccess;
}

// A finitely generated subgroup of S_n with its full element list.
//
// Elements are kept sorted in canonical Perm order, so the identity is
// always elements()[0].
class PermGroup {
 public:
  PermGroup() = default;

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& identity() const { return elements_.front(); }

  bool contains(const Perm& g) const;
  // Position of g in elements(), if present.
  std::optional<std::size_t> index_of(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Groups compare by element set; generators are presentation only.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend struct detail::PermGroupAccess;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Closure of gens under composition. Throws InvalidInput on a degree
// mismatch and BoundExceeded past limits.max_degree.
PermGroup generate(std::size_t degree, std::vector<Perm> gens,
                   const Limits& limits = {});

PermGroup symmetric_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
// Direct product of cyclic groups acting on consecutive disjoint blocks.
PermGroup abelian_perm_group(std::span<const std::size_t> orders,
                             const Limits& limits = {});

// Canonical order on subgroups: by order, then by element list.
bool canonical_less(const PermGroup& a, const PermGroup& b);

// Every subgroup exactly once in canonical order. Built by joining found
// subgroups with cyclic subgroups until no new group appears.
std::vector<PermGroup> all_subgroups(const PermGroup& group,
                                     const Limits& limits = {});

struct SubgroupClass {
  PermGroup representative;  // canonically smallest member of the class
  std::size_t count = 0;
};

// Conjugacy classes of subgroups under group, in canonical order of
// their representatives.
std::vector<SubgroupClass> classify_subgroups(const PermGroup& group,
                                              const Limits& limits = {});

PermGroup centralizer(const PermGroup& group, std::span<const Perm> subset);
PermGroup center(const PermGroup& group);

// An automorphism as an index table on group.elements().
struct GroupAut {
  std::vector<std::size_t> mapping;

  friend bool operator==(const GroupAut&, const GroupAut&) = default;
  friend auto operator<=>(const GroupAut&, const GroupAut&) = default;
};

// A short generating set: greedy over elements of decreasing order.
std::vector<Perm> small_generating_set(const PermGroup& group);

// All automorphisms, sorted by mapping table. Backtracks over generator
// images, keeping only candidates of equal element order.
std::vector<GroupAut> automorphism_group(const PermGroup& group,
                                         const Limits& limits = {});

GroupAut inner_automorphism(const PermGroup& group, const Perm& g);
bool is_automorphism(const PermGroup& group, const GroupAut& aut);

// Cycle strings of the generators joined by ", " inside angle brackets.
std::string describe(const PermGroup& group);

}  // namespace fusionkit
