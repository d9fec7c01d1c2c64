#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/perm_group.hpp"

namespace fusionkit::hilb {

// Z[G]: basis g in group.elements() order, N(g,h,k) = [gh = k].
FusionRing group_ring(const PermGroup& group);

// Basis permutation of Z[G] induced by conjugation x -> g x g^-1.
std::vector<std::size_t> conjugation_action(const PermGroup& group, const Perm& g);

// Basis indices of Z[G] for the elements of subgroup.
ClosedSubset subgroup_basis(const PermGroup& group, const PermGroup& subgroup);

struct StabilizerRow {
  PermGroup representative;
  std::size_t count = 0;
  // Pointwise stabilizer under the inner action, i.e. C_G(H).
  PermGroup stabilizer;
};

// Restricted autoequivalences of Hilb(G) per subgroup class, reported as
// the pair (stabilizer, |H^2(G, C^x)|). The semidirect product with the
// Schur multiplier is left symbolic.
struct HilbReport {
  std::string group;
  std::size_t group_order = 0;
  std::size_t schur_multiplier_order = 1;
  std::size_t total_subgroups = 0;
  std::vector<StabilizerRow> rows;
};

HilbReport stabilizer_table(const PermGroup& group, std::size_t schur_order,
                            const Limits& limits = {});

// One subgroup type of S4 as listed in the worked example, with the
// stabilizer stated there.
struct S4CensusEntry {
  std::string name;
  std::vector<std::string> generators;  // cycle notation
  std::size_t count = 0;
  std::vector<std::string> stabilizer_generators;
};

// The eleven subgroup types of S4 in the order they are usually listed.
const std::vector<S4CensusEntry>& s4_census();

inline constexpr std::size_t kS4SchurMultiplierOrder = 2;

struct S4TableRow {
  S4CensusEntry entry;
  PermGroup representative;
  std::size_t computed_count = 0;
  PermGroup computed_stabilizer;
  PermGroup expected_stabilizer;

  bool matches() const {
    return computed_count == entry.count && computed_stabilizer == expected_stabilizer;
  }
};

// stabilizer_table(S4) reordered to the census order and compared with it.
std::vector<S4TableRow> s4_table(const Limits& limits = {});

}  // namespace fusionkit::hilb
