#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fusionkit/error.hpp"

// Label-level combinatorics of C(so_{2r+1}, 2): the Weyl alcove, the
// dimension profile, the automorphism group acting on labels and the
// stabilizers of the named closed subsets.
namespace fusionkit::so {

enum class WeightKind { kZero, kFundamental, kTwoLambda1, kTwoLambdaR, kLambda1PlusLambdaR };

// A level-2 alcove weight. index is used only for kFundamental (1..r).
struct AlcoveWeight {
  WeightKind kind = WeightKind::kZero;
  int index = 0;

  std::string tag(int r) const;
  friend bool operator==(const AlcoveWeight&, const AlcoveWeight&) = default;
  friend auto operator<=>(const AlcoveWeight&, const AlcoveWeight&) = default;
};

AlcoveWeight zero();
AlcoveWeight lam(int i);
AlcoveWeight two_lam1();
AlcoveWeight two_lamr();
AlcoveWeight lam1_plus_lamr();

// The explicit list {0, lambda_1..lambda_r, 2lambda_1, 2lambda_r, lambda_1+lambda_r}.
std::vector<AlcoveWeight> listed_alcove(int r);

// Fundamental-weight coefficients of every dominant weight with
// <lambda, theta> <= level, found by a pruned scan in epsilon coordinates.
std::vector<std::vector<int>> dominant_weights_below(int r, int level);

// The level-2 alcove computed by the scan and checked against listed_alcove.
std::vector<AlcoveWeight> alcove(int r);

struct WeightDim {
  AlcoveWeight weight;
  long long dim_squared = 0;  // exact
  double dim = 0.0;
};

// 1 for {0, 2lambda_1}, 2 for {lambda_1..lambda_{r-1}, 2lambda_r},
// sqrt(2r+1) for {lambda_r, lambda_1+lambda_r}.
std::vector<WeightDim> dim_profile(int r);
long long global_dim_squared_sum(int r);

// Number of distinct primes dividing n.
int omega(long long n);

// Exotic automorphism lambda_i -> lambda_{min(+-mi mod 2r+1)} on the
// dimension-2 family; m is taken up to sign, represented in [1, r].
struct ExoticAut {
  int m = 1;
  bool square_is_minus_one = false;  // m^2 = -1 rather than +1

  friend bool operator==(const ExoticAut&, const ExoticAut&) = default;
  friend auto operator<=>(const ExoticAut&, const ExoticAut&) = default;
};

// All sign classes of units m mod 2r+1 with m^2 = +-1, by scan.
std::vector<ExoticAut> exotic_autos(int r);

// i -> min(mi mod 2r+1, -mi mod 2r+1), always in [1, r].
int fold_index(int r, long long m, int i);

// Action on labels of the dimension-2 family; index r stands for 2lambda_r.
AlcoveWeight apply_exotic(int r, int m, const AlcoveWeight& w);
// Exchanges lambda_r and lambda_1+lambda_r.
AlcoveWeight apply_swap(int r, const AlcoveWeight& w);

// Closed-form order of the full automorphism group.
long long aut_group_order(int r);

// An automorphism (swap^s, m) of the labels.
struct LabelAut {
  bool swap = false;
  int m = 1;

  friend bool operator==(const LabelAut&, const LabelAut&) = default;
  friend auto operator<=>(const LabelAut&, const LabelAut&) = default;
};

AlcoveWeight apply(int r, const LabelAut& g, const AlcoveWeight& w);
LabelAut compose(int r, const LabelAut& a, const LabelAut& b);

// Every (swap, sign class) pair, sorted.
std::vector<LabelAut> label_automorphisms(int r);

enum class SubsetName { kDelta0, kDeltaZ2, kGamma0, kGammaZ2, kXi };

struct NamedSubset {
  SubsetName name = SubsetName::kDelta0;
  int j = 0;  // divisor for kXi
  std::vector<AlcoveWeight> members;  // sorted

  std::string display_name() const;
};

NamedSubset make_named_subset(int r, SubsetName name, int j = 0);

// Delta_0, Delta_Z2, Gamma_0, Gamma_Z2, then Xi_j for every divisor 2 < j of 2r+1.
std::vector<NamedSubset> named_closed_subsets(int r);

// Number of full prime-power factors of n that divide j. Throws
// InvalidInput unless j divides n.
int theta(long long j, long long n);

struct StabilizerResult {
  std::vector<LabelAut> elements;  // sorted
  std::vector<LabelAut> generators;
  long long order() const { return static_cast<long long>(elements.size()); }
  long long formula_order = 0;
  bool matches_formula() const { return order() == formula_order; }
};

// Closed-form stabilizer order: full group for Delta's, 1 for Gamma_0, 2 for
// Gamma_Z2, 2 * 2^theta(j; 2r+1) for Xi_j.
long long formula_stabilizer_order(int r, const NamedSubset& subset);

// Pointwise stabilizer by applying every automorphism to every member.
// Throws InvalidInput if subset does not match its defining list.
StabilizerResult subset_stabilizer(int r, const NamedSubset& subset);

}  // namespace fusionkit::so
