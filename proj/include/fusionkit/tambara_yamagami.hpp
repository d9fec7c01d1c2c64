#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "fusionkit/error.hpp"
#include "fusionkit/fusion_ring.hpp"

namespace fusionkit::ty {

// An element of Q/Z, kept as a reduced fraction in [0, 1).
class Phase {
 public:
  using Rational = boost::rational<std::int64_t>;

  Phase() = default;
  explicit Phase(Rational value);
  Phase(std::int64_t num, std::int64_t den) : Phase(Rational(num, den)) {}
  // "1/2", "0", "-1/3"
  static Phase parse(std::string_view text);

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.numerator() == 0; }
  std::string to_string() const;

  friend Phase operator+(Phase a, Phase b) { return Phase(a.value_ + b.value_); }
  friend Phase operator*(std::int64_t k, Phase a) { return Phase(a.value_ * k); }
  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  Rational value_{0};
};

using Element = std::vector<int>;

// A finite abelian group Z_{n_1} x ... x Z_{n_k}. Elements are residue
// tuples enumerated in lexicographic order, so index 0 is the identity.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<int> orders);
  // "2,2"
  static AbGroup parse(std::string_view text);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  std::size_t rank() const { return orders_.size(); }

  Element element(std::size_t index) const;
  std::size_t index_of(const Element& a) const;
  bool is_element(const Element& a) const;
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(std::int64_t k, const Element& a) const;
  int element_order(const Element& a) const;
  // Unit vector of the s-th cyclic factor.
  Element generator(std::size_t s) const;

  std::string label(const Element& a) const;
  std::string describe() const;

 private:
  std::vector<int> orders_;
  std::size_t size_ = 1;
};

// A symmetric bicharacter on an AbGroup, stored by its Gram matrix on the
// factor generators with values in Q/Z.
class Bicharacter {
 public:
  Bicharacter() = default;
  // Throws InvalidInput if the matrix is not symmetric or not well defined.
  Bicharacter(AbGroup group, std::vector<std::vector<Phase>> gram);
  // "0,1/2;1/2,0"
  static Bicharacter parse(AbGroup group, std::string_view text);
  // Scalar form a*b/n on Z_n, or the 2x2 hyperbolic form on Z_2 x Z_2.
  static Bicharacter standard_cyclic(int n, std::int64_t numerator = 1);
  static Bicharacter hyperbolic_klein();

  const AbGroup& group() const { return group_; }
  const std::vector<std::vector<Phase>>& gram() const { return gram_; }
  std::string describe() const;

 private:
  AbGroup group_;
  std::vector<std::vector<Phase>> gram_;
};

Phase chi_eval(const Bicharacter& chi, const Element& a, const Element& b);

// Only the identity pairs trivially with everything.
bool is_nondegenerate(const Bicharacter& chi);

// Automorphism of A, as an index table on the group's elements.
struct AbAut {
  std::vector<std::size_t> mapping;

  friend bool operator==(const AbAut&, const AbAut&) = default;
  friend auto operator<=>(const AbAut&, const AbAut&) = default;
};

AbAut compose(const AbAut& f, const AbAut& g);  // f after g
bool is_group_automorphism(const AbGroup& group, const AbAut& aut);

// Every automorphism of A (ignoring chi).
std::vector<AbAut> group_automorphisms(const AbGroup& group, const Limits& limits = {});

// Aut(A, chi): automorphisms preserving chi, by backtracking over images of
// the factor generators. Sorted by mapping.
std::vector<AbAut> aut_preserving(const Bicharacter& chi, const Limits& limits = {});

// Sorted element indices of the subgroup generated by gens.
std::vector<std::size_t> generated_subgroup(const AbGroup& group,
                                            std::span<const Element> gens);
bool is_subgroup(const AbGroup& group, std::span<const std::size_t> indices);

// Elements of Aut(A, chi) fixing every element of subgroup.
std::vector<AbAut> ty_stab(const Bicharacter& chi, std::span<const std::size_t> subgroup,
                           const Limits& limits = {});

// TY(A) fusion rules: a*b = a+b, a*m = m*a = m, m*m = sum of all a.
// Group elements come first in AbGroup order, m last.
FusionRing ty_fusion_ring(const AbGroup& group);

// Basis permutation of ty_fusion_ring induced by an automorphism of A.
std::vector<std::size_t> ring_permutation(const AbGroup& group, const AbAut& aut);

struct CenterCounts {
  std::size_t invertibles = 0;
  std::size_t total = 0;
};

// Simple-object counts of the Drinfeld center: 2|A| and 4|A| + C(|A|, 2).
CenterCounts center_counts(std::size_t group_order);

}  // namespace fusionkit::ty
