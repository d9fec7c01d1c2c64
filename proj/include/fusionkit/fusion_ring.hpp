#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/error.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

// One nonzero structure constant N^z_{x,y} = value.
struct FusionEntry {
  std::size_t x = 0, y = 0, z = 0;
  int value = 0;
};

// A based ring with nonnegative integer structure constants.
//
// Construction only checks shapes and index ranges; the ring axioms are
// checked by validate_fusion_ring so that malformed inputs can be reported.
class FusionRing {
 public:
  static constexpr std::size_t kMaxRank = 64;

  FusionRing() = default;
  FusionRing(std::vector<std::string> labels, std::size_t unit,
             std::vector<std::size_t> dual, std::span<const FusionEntry> entries);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t unit() const { return unit_; }
  std::size_t dual(std::size_t x) const { return dual_[x]; }
  const std::vector<std::size_t>& duals() const { return dual_; }

  // N^z_{x,y}
  int n(std::size_t x, std::size_t y, std::size_t z) const {
    return coeffs_[(x * rank() + y) * rank() + z];
  }
  // Nonzero entries in (x, y, z) order.
  std::vector<FusionEntry> entries() const;

  std::optional<std::size_t> index_of(std::string_view label) const;

  // Copy with one structure constant replaced.
  FusionRing with_coefficient(std::size_t x, std::size_t y, std::size_t z,
                              int value) const;

 private:
  std::vector<std::string> labels_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> dual_;
  std::vector<int> coeffs_;
};

// Standard examples.
FusionRing fibonacci_ring();
FusionRing cyclic_group_ring(std::size_t n);

ValidationReport validate_fusion_ring(const FusionRing& ring);

// Frobenius-Perron dimension of each basis element, by power iteration on
// the left fusion matrix (shifted by the identity to break periodicity).
// Throws ConvergenceError when an iteration does not settle.
std::vector<double> fp_dims(const FusionRing& ring);

// A fusion subring, as sorted basis indices.
struct ClosedSubset {
  std::vector<std::size_t> indices;

  bool contains(std::size_t i) const;
  friend bool operator==(const ClosedSubset&, const ClosedSubset&) = default;
};

// Smallest closed subset containing the unit and seed.
ClosedSubset closure(const FusionRing& ring, std::span<const std::size_t> seed);
bool is_closed(const FusionRing& ring, std::span<const std::size_t> indices);

// All closed subsets, ordered by size and then by label list.
std::vector<ClosedSubset> closed_subsets(const FusionRing& ring,
                                         const Limits& limits = {});

// A basis permutation preserving unit, duality and structure constants.
struct RingAut {
  std::vector<std::size_t> perm;

  std::size_t operator()(std::size_t i) const { return perm[i]; }
  friend bool operator==(const RingAut&, const RingAut&) = default;
  friend auto operator<=>(const RingAut&, const RingAut&) = default;
};

bool is_ring_automorphism(const FusionRing& ring, std::span<const std::size_t> perm);

// All ring automorphisms, sorted by permutation. Brute force up to
// limits.brute_force_rank, forward-checking backtracking above it.
std::vector<RingAut> ring_automorphisms(const FusionRing& ring,
                                        const Limits& limits = {});
std::vector<RingAut> ring_automorphisms_brute_force(const FusionRing& ring);
std::vector<RingAut> ring_automorphisms_backtrack(const FusionRing& ring,
                                                  const Limits& limits = {});

// Automorphisms fixing every element of subset. Throws InvalidInput unless
// subset is closed.
std::vector<RingAut> pointwise_stabilizer(const FusionRing& ring,
                                          const ClosedSubset& subset,
                                          const Limits& limits = {});

}  // namespace fusionkit
