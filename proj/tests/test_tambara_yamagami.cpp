#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "fusionkit/hypergroup.hpp"
#include "fusionkit/tambara_yamagami.hpp"

using namespace fusionkit;
using namespace fusionkit::ty;

namespace {

// Oracle: every bijection of A that is additive and preserves chi.
std::set<std::vector<std::size_t>> scan_aut(const Bicharacter& chi) {
  const auto& a = chi.group();
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::set<std::vector<std::size_t>> out;
  do {
    bool ok = p[0] == 0;
    for (std::size_t x = 0; ok && x < a.size(); ++x)
      for (std::size_t y = 0; ok && y < a.size(); ++y) {
        auto ex = a.element(x), ey = a.element(y);
        ok = p[a.index_of(a.add(ex, ey))] == a.index_of(a.add(a.element(p[x]), a.element(p[y])));
        ok = ok && chi_eval(chi, a.element(p[x]), a.element(p[y])) == chi_eval(chi, ex, ey);
      }
    if (ok) out.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::set<std::vector<std::size_t>> mappings(const std::vector<AbAut>& auts) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& a : auts) out.insert(a.mapping);
  return out;
}

}  // namespace

TEST_CASE("Phase") {
  CHECK(Phase(4, 3) == Phase(1, 3));
  CHECK(Phase(-1, 3) == Phase(2, 3));
  CHECK(Phase::parse("1/2").to_string() == "1/2");
  CHECK(Phase::parse("0").is_zero());
  CHECK(Phase::parse("3/2") == Phase(1, 2));
  CHECK((Phase(1, 2) + Phase(1, 2)).is_zero());
  CHECK(3 * Phase(1, 3) == Phase(0, 1));
  CHECK_THROWS_AS(Phase::parse("x/2"), InvalidInput);
  CHECK_THROWS_AS(Phase::parse("1/0"), InvalidInput);
}

TEST_CASE("AbGroup") {
  auto a = AbGroup::parse("2,3");
  CHECK(a.size() == 6);
  CHECK(a.element(0) == Element{0, 0});
  CHECK(a.element(5) == Element{1, 2});
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.index_of(a.element(i)) == i);
  CHECK(a.element_order(Element{1, 1}) == 6);
  CHECK(a.add(Element{1, 2}, Element{1, 2}) == Element{0, 1});
  CHECK(a.negate(Element{1, 1}) == Element{1, 2});
  CHECK_THROWS_AS(AbGroup::parse("1"), InvalidInput);
  CHECK_THROWS_AS(AbGroup::parse("2,,3"), InvalidInput);
}

TEST_CASE("chi_eval") {
  auto z2 = Bicharacter::standard_cyclic(2);
  CHECK(chi_eval(z2, {1}, {1}) == Phase(1, 2));
  auto z3 = Bicharacter::standard_cyclic(3);
  CHECK(chi_eval(z3, {2}, {2}) == Phase(1, 3));
  auto k = Bicharacter::hyperbolic_klein();
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(chi_eval(k, {0, 0}, k.group().element(i)).is_zero());
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(chi_eval(k, k.group().element(i), k.group().element(j)) ==
            chi_eval(k, k.group().element(j), k.group().element(i)));
  }
  CHECK(chi_eval(k, {1, 0}, {0, 1}) == Phase(1, 2));
  CHECK(chi_eval(k, {1, 1}, {1, 1}).is_zero());
}

TEST_CASE("Bicharacter validation") {
  CHECK(Bicharacter::parse(AbGroup::parse("2,2"), "0,1/2;1/2,0").gram() == Bicharacter::hyperbolic_klein().gram());
  // Not symmetric.
  CHECK_THROWS_AS(Bicharacter::parse(AbGroup::parse("2,2"), "0,1/2;0,0"), InvalidInput);
  // 1/3 on Z2 is not well defined.
  CHECK_THROWS_AS(Bicharacter::parse(AbGroup::parse("2"), "1/3"), InvalidInput);
  // Wrong shape.
  CHECK_THROWS_AS(Bicharacter::parse(AbGroup::parse("2,2"), "1/2"), InvalidInput);
}

TEST_CASE("is_nondegenerate") {
  CHECK(is_nondegenerate(Bicharacter::standard_cyclic(2)));
  CHECK_FALSE(is_nondegenerate(Bicharacter::parse(AbGroup::parse("2"), "0")));
  CHECK(is_nondegenerate(Bicharacter::hyperbolic_klein()));
  CHECK_FALSE(is_nondegenerate(Bicharacter::parse(AbGroup::parse("2,2"), "1/2,0;0,0")));
  CHECK(is_nondegenerate(Bicharacter::parse(AbGroup::parse("2,2"), "1/2,0;0,1/2")));
  CHECK_FALSE(is_nondegenerate(Bicharacter::standard_cyclic(4, 2)));
}

TEST_CASE("ty_fusion_ring") {
  SUBCASE("Z2 is Ising") {
    auto ring = ty_fusion_ring(AbGroup::parse("2"));
    CHECK(ring.rank() == 3);
    CHECK(validate_fusion_ring(ring).valid());
    CHECK(ring.n(2, 2, 0) == 1);
    CHECK(ring.n(2, 2, 1) == 1);
    CHECK(ring.n(1, 2, 2) == 1);
    CHECK(std::abs(fp_dims(ring)[2] - std::sqrt(2.0)) < 1e-9);
  }
  SUBCASE("Z3 rank 4") { CHECK(ty_fusion_ring(AbGroup::parse("3")).rank() == 4); }
  SUBCASE("Z2 x Z2 rank 5, dim m = 2") {
    auto ring = ty_fusion_ring(AbGroup::parse("2,2"));
    CHECK(ring.rank() == 5);
    CHECK(std::abs(fp_dims(ring)[4] - 2.0) < 1e-9);
  }
  SUBCASE("dim m is sqrt |A| and the hypergroup is valid up to |A| = 16") {
    for (const char* orders : {"2", "3", "4", "2,2", "5", "6", "7", "2,4", "3,3", "2,2,2", "4,4", "2,2,2,2", "16"}) {
      auto a = AbGroup::parse(orders);
      auto ring = ty_fusion_ring(a);
      CAPTURE(orders);
      CHECK(validate_fusion_ring(ring).valid());
      CHECK(std::abs(fp_dims(ring)[a.size()] - std::sqrt(double(a.size()))) < 1e-9);
      CHECK(validate_hypergroup(from_fusion_ring(ring)).valid());
    }
  }
}

TEST_CASE("aut_preserving") {
  CHECK(aut_preserving(Bicharacter::standard_cyclic(2)).size() == 1);
  CHECK(aut_preserving(Bicharacter::standard_cyclic(3)).size() == 2);
  CHECK(aut_preserving(Bicharacter::hyperbolic_klein()).size() == 6);
  SUBCASE("matches the bijection scan") {
    for (const auto& chi : {Bicharacter::standard_cyclic(5), Bicharacter::standard_cyclic(5, 2),
                            Bicharacter::standard_cyclic(7), Bicharacter::standard_cyclic(8),
                            Bicharacter::hyperbolic_klein(),
                            Bicharacter::parse(AbGroup::parse("2,2"), "1/2,0;0,1/2"),
                            Bicharacter::parse(AbGroup::parse("2,4"), "1/2,0;0,1/4"),
                            Bicharacter::parse(AbGroup::parse("3,3"), "1/3,0;0,1/3")}) {
      CAPTURE(chi.describe());
      CHECK(mappings(aut_preserving(chi)) == scan_aut(chi));
    }
  }
  SUBCASE("diagonal form on Z2 x Z2 is preserved only by the swap") {
    CHECK(aut_preserving(Bicharacter::parse(AbGroup::parse("2,2"), "1/2,0;0,1/2")).size() == 2);
  }
  SUBCASE("degenerate forms are rejected") {
    CHECK_THROWS_AS(aut_preserving(Bicharacter::parse(AbGroup::parse("2"), "0")), InvalidInput);
  }
  SUBCASE("bound") {
    Limits limits;
    limits.max_abelian_order = 4;
    CHECK_THROWS_AS(aut_preserving(Bicharacter::standard_cyclic(5), limits), BoundExceeded);
  }
  SUBCASE("all of Aut(A) on cyclic groups") {
    // Aut(Z_n) has phi(n) elements.
    CHECK(group_automorphisms(AbGroup::parse("12")).size() == 4);
    CHECK(group_automorphisms(AbGroup::parse("2,2")).size() == 6);
    CHECK(group_automorphisms(AbGroup::parse("2,4")).size() == 8);
    for (const auto& a : group_automorphisms(AbGroup::parse("2,4")))
      CHECK(is_group_automorphism(AbGroup::parse("2,4"), a));
  }
  SUBCASE("image in the ring automorphisms") {
    for (const auto& chi : {Bicharacter::standard_cyclic(3), Bicharacter::hyperbolic_klein(),
                            Bicharacter::standard_cyclic(5)}) {
      auto ring = ty_fusion_ring(chi.group());
      std::set<std::vector<std::size_t>> ring_auts;
      for (const auto& r : ring_automorphisms(ring)) ring_auts.insert(r.perm);
      for (const auto& a : aut_preserving(chi)) CHECK(ring_auts.count(ring_permutation(chi.group(), a)) == 1);
    }
  }
}

TEST_CASE("ty_stab") {
  auto k = Bicharacter::hyperbolic_klein();
  const auto& a = k.group();
  CHECK(ty_stab(k, std::vector<std::size_t>{0}) == aut_preserving(k));
  SUBCASE("H = <(1,0)>") {
    std::vector<Element> gens{{1, 0}};
    auto h = generated_subgroup(a, gens);
    CHECK(h.size() == 2);
    auto stab = ty_stab(k, h);
    REQUIRE(stab.size() == 2);
    for (const auto& s : stab) CHECK(s.mapping[a.index_of({1, 0})] == a.index_of({1, 0}));
  }
  SUBCASE("H = A") {
    std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(ty_stab(k, all).size() == 1);
  }
  SUBCASE("closed under composition and inverse") {
    auto chi = Bicharacter::parse(AbGroup::parse("3,3"), "1/3,0;0,1/3");
    std::vector<Element> gens{{1, 1}};
    auto stab = ty_stab(chi, generated_subgroup(chi.group(), gens));
    std::set<AbAut> s(stab.begin(), stab.end());
    for (const auto& f : stab)
      for (const auto& g : stab) CHECK(s.count(compose(f, g)) == 1);
    for (const auto& f : stab) {
      AbAut inv{std::vector<std::size_t>(f.mapping.size())};
      for (std::size_t i = 0; i < f.mapping.size(); ++i) inv.mapping[f.mapping[i]] = i;
      CHECK(s.count(inv) == 1);
    }
  }
  SUBCASE("not a subgroup") {
    std::vector<std::size_t> bad{0, 1, 2};
    CHECK_FALSE(is_subgroup(a, bad));
    CHECK_THROWS_AS(ty_stab(k, bad), InvalidInput);
  }
}

TEST_CASE("center_counts") {
  CHECK(center_counts(2).invertibles == 4);
  CHECK(center_counts(2).total == 9);
  CHECK(center_counts(1).invertibles == 2);
  CHECK(center_counts(1).total == 4);
  CHECK(center_counts(4).invertibles == 8);
  CHECK(center_counts(4).total == 22);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(center_counts(n).total > center_counts(n).invertibles);
}
