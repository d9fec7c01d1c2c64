#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/perm_group.hpp"
#include "fusionkit/report.hpp"

namespace fusionkit {

// One structure constant c^k_{i,j} of a hypergroup.
struct HypergroupEntry {
  std::size_t i = 0, j = 0, k = 0;
  double value = 0.0;
};

// A simplex conv{e_0, ..., e_{n-1}} with affine product
// e_i * e_j = sum_k c^k_{i,j} e_k, unit e_0 and an involution i -> bar i.
class Hypergroup {
 public:
  Hypergroup() = default;
  Hypergroup(std::vector<std::string> labels, std::vector<std::size_t> involution,
             std::span<const HypergroupEntry> entries);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t involution(std::size_t i) const { return involution_[i]; }
  const std::vector<std::size_t>& involutions() const { return involution_; }

  double c(std::size_t i, std::size_t j, std::size_t k) const {
    return coeffs_[(i * rank() + j) * rank() + k];
  }
  std::vector<HypergroupEntry> entries() const;

  // Set when the constants were computed in exact rational arithmetic.
  bool exact() const { return exact_; }

  // Product of two points given in barycentric coordinates.
  Eigen::VectorXd product(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  Eigen::VectorXd adjoint(const Eigen::VectorXd& a) const;

  Hypergroup with_constant(std::size_t i, std::size_t j, std::size_t k,
                           double value) const;

 private:
  friend Hypergroup from_fusion_ring(const FusionRing&);
  std::vector<std::string> labels_;
  std::vector<std::size_t> involution_;
  std::vector<double> coeffs_;
  bool exact_ = false;
};

struct HypergroupReport {
  ValidationReport axioms;
  double affinity_residual = 0.0;  // max |sum_k c^k_{ij} - 1|
  double associativity_residual = 0.0;

  bool valid() const { return axioms.valid(); }
};

inline constexpr double kHypergroupTolerance = 1e-9;

// Grothendieck hypergroup on the basis [X] / dim X:
// c^z_{x,y} = N^z_{x,y} dim z / (dim x dim y). The ring unit becomes index 0.
// When every dimension is an integer the constants are computed exactly.
Hypergroup from_fusion_ring(const FusionRing& ring);

// Convex hull of a group: c^k_{g,h} = [gh = k], involution g -> g^-1.
Hypergroup from_group(const PermGroup& group);

HypergroupReport validate_hypergroup(const Hypergroup& h,
                                     double tolerance = kHypergroupTolerance);

// map has one row per basis point of from, holding a convex combination of
// the basis of to. Throws InvalidInput on non-convex rows or shape mismatch.
bool check_morphism(const Eigen::MatrixXd& map, const Hypergroup& from,
                    const Hypergroup& to, double tolerance = kHypergroupTolerance);

// The basis permutation as a morphism table.
Eigen::MatrixXd permutation_map(std::span<const std::size_t> perm);

// Same involution and constants within tolerance.
bool approx_equal(const Hypergroup& a, const Hypergroup& b,
                  double tolerance = kHypergroupTolerance);

}  // namespace fusionkit
