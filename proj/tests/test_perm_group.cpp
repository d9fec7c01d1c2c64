#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fusionkit/perm_group.hpp"

using namespace fusionkit;

namespace {

Perm p4(const char* cycles) { return Perm::parse(cycles, 4); }

// Oracle: every subset of a tiny group closed under multiplication.
std::size_t power_set_subgroup_count(const PermGroup& g) {
  const auto& el = g.elements();
  std::size_t count = 0;
  for (unsigned mask = 1; mask < (1u << el.size()); ++mask) {
    if (!(mask & 1u)) continue;  // identity is elements()[0]
    std::set<Perm> s;
    for (std::size_t i = 0; i < el.size(); ++i)
      if (mask >> i & 1u) s.insert(el[i]);
    bool closed = true;
    for (const auto& a : s)
      for (const auto& b : s) closed = closed && s.count(a * b);
    if (closed) ++count;
  }
  return count;
}

// Oracle: count multiplicative bijections by scanning all of them.
std::size_t brute_force_aut_count(const PermGroup& g) {
  const auto& el = g.elements();
  std::vector<std::size_t> perm(el.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::size_t count = 0;
  do {
    if (is_automorphism(g, {perm})) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Oracle: normalizer of <S>, by brute force.
std::set<Perm> normalizer(const PermGroup& g, const PermGroup& h) {
  std::set<Perm> out;
  for (const auto& x : g.elements()) {
    bool keeps = std::all_of(h.elements().begin(), h.elements().end(),
                             [&](const Perm& y) { return h.contains(conjugate(x, y)); });
    if (keeps) out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("cycle notation parses and prints 1-indexed") {
  CHECK(p4("(1 2)(3 4)").to_cycle_string() == "(1 2)(3 4)");
  CHECK(p4("(1324)") == p4("(1 3 2 4)"));
  CHECK(p4("()").is_identity());
  CHECK(p4("(1,2,3)").order() == 3);
  CHECK(Perm::parse("(1 10)", 12).to_cycle_string() == "(1 10)");
  CHECK_THROWS_AS(p4("(1 5)"), InvalidInput);
  CHECK_THROWS_AS(p4("(1 2)(2 3)"), InvalidInput);
  CHECK_THROWS_AS(p4("1 2"), InvalidInput);
}

TEST_CASE("composition applies the right factor first") {
  auto g = p4("(1 2)");
  auto h = p4("(2 3)");
  // (g*h)(1) = g(h(1)) = g(1) = 2
  CHECK((g * h)(0) == 1);
  CHECK((g * h) == p4("(1 2 3)"));
  CHECK(pow(p4("(1 2 3 4)"), 4).is_identity());
  CHECK(pow(p4("(1 2 3 4)"), -1) == p4("(1 4 3 2)"));
}

TEST_CASE("generate") {
  SUBCASE("no generators gives the trivial group") {
    auto g = generate(4, {});
    CHECK(g.order() == 1);
    CHECK(g.identity().is_identity());
  }
  SUBCASE("(12) and (1234) generate S4") {
    CHECK(generate(4, {p4("(12)"), p4("(1234)")}).order() == 24);
  }
  SUBCASE("double transpositions generate V4") {
    auto v4 = generate(4, {p4("(12)(34)"), p4("(13)(24)")});
    CHECK(v4.order() == 4);
    CHECK(v4.contains(p4("(14)(23)")));
  }
  SUBCASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(generate(4, {Perm::parse("(1 2)", 3)}), InvalidInput);
  }
  SUBCASE("degree cap") {
    CHECK_THROWS_AS(generate(17, {}), BoundExceeded);
  }
  SUBCASE("elements are canonically sorted") {
    auto s4 = symmetric_group(4);
    CHECK(std::is_sorted(s4.elements().begin(), s4.elements().end()));
    CHECK(24 % s4.order() == 0);
  }
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(7);
  auto g = generate(6, {Perm::parse("(1 2 3 4 5 6)", 6), Perm::parse("(1 2)", 6)});
  CHECK(g.order() == 720);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = g.elements()[pick(rng)];
    const auto& b = g.elements()[pick(rng)];
    const auto& c = g.elements()[pick(rng)];
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(g.contains(a * b));
  }
}

TEST_CASE("all_subgroups") {
  SUBCASE("S4 has 30 subgroups") { CHECK(all_subgroups(symmetric_group(4)).size() == 30); }
  SUBCASE("trivial group has 1") { CHECK(all_subgroups(generate(3, {})).size() == 1); }
  SUBCASE("S3 agrees with the power-set oracle") {
    auto s3 = symmetric_group(3);
    CHECK(power_set_subgroup_count(s3) == 6);
    CHECK(all_subgroups(s3).size() == 6);
  }
  SUBCASE("Z4 x Z2 agrees with the power-set oracle") {
    std::vector<std::size_t> orders{4, 2};
    auto g = abelian_perm_group(orders);
    CHECK(all_subgroups(g).size() == power_set_subgroup_count(g));
  }
  SUBCASE("closed under conjugation and canonically ordered") {
    auto s4 = symmetric_group(4);
    auto subs = all_subgroups(s4);
    CHECK(std::is_sorted(subs.begin(), subs.end(), canonical_less));
    std::set<std::vector<Perm>> listed;
    for (const auto& h : subs) listed.insert(h.elements());
    for (const auto& h : subs)
      for (const auto& g : s4.elements()) {
        std::vector<Perm> conj;
        for (const auto& x : h.elements()) conj.push_back(conjugate(g, x));
        std::sort(conj.begin(), conj.end());
        CHECK(listed.count(conj) == 1);
      }
  }
  SUBCASE("count is invariant under relabelling points") {
    auto relabel = p4("(1 3 4)");
    auto g = generate(4, {p4("(12)"), p4("(34)")});
    auto h = generate(4, {conjugate(relabel, p4("(12)")), conjugate(relabel, p4("(34)"))});
    CHECK(all_subgroups(g).size() == all_subgroups(h).size());
  }
  SUBCASE("bound") {
    Limits limits;
    limits.max_group_order = 10;
    CHECK_THROWS_AS(all_subgroups(symmetric_group(4), limits), BoundExceeded);
  }
}

TEST_CASE("classify_subgroups") {
  SUBCASE("S3 classes (1,3,1,1)") {
    auto classes = classify_subgroups(symmetric_group(3));
    std::vector<std::size_t> counts;
    for (const auto& c : classes) counts.push_back(c.count);
    CHECK(counts == std::vector<std::size_t>{1, 3, 1, 1});
  }
  SUBCASE("trivial group") {
    auto classes = classify_subgroups(generate(2, {}));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].count == 1);
  }
  SUBCASE("S4 has 11 classes summing to 30") {
    auto classes = classify_subgroups(symmetric_group(4));
    CHECK(classes.size() == 11);
    std::size_t total = 0;
    for (const auto& c : classes) total += c.count;
    CHECK(total == 30);
  }
}

TEST_CASE("centralizer") {
  auto s4 = symmetric_group(4);
  SUBCASE("of (12)") {
    std::vector<Perm> s{p4("(12)")};
    CHECK(centralizer(s4, s) == generate(4, {p4("(12)"), p4("(34)")}));
  }
  SUBCASE("of V4") {
    auto v4 = generate(4, {p4("(12)(34)"), p4("(13)(24)")});
    CHECK(centralizer(s4, v4.elements()) == v4);
  }
  SUBCASE("of the identity") {
    std::vector<Perm> s{p4("()")};
    CHECK(centralizer(s4, s) == s4);
  }
  SUBCASE("subset outside the group") {
    auto v4 = generate(4, {p4("(12)(34)"), p4("(13)(24)")});
    std::vector<Perm> s{p4("(12)")};
    CHECK_THROWS_AS(centralizer(v4, s), InvalidInput);
  }
  SUBCASE("centralizer within normalizer for every subgroup of S4") {
    for (const auto& h : all_subgroups(s4)) {
      auto c = centralizer(s4, h.elements());
      auto n = normalizer(s4, h);
      for (const auto& x : c.elements()) CHECK(n.count(x) == 1);
    }
  }
}

TEST_CASE("automorphism_group") {
  SUBCASE("S4: 24, all inner") {
    auto s4 = symmetric_group(4);
    auto auts = automorphism_group(s4);
    CHECK(auts.size() == 24);
    std::set<GroupAut> inner;
    for (const auto& g : s4.elements()) inner.insert(inner_automorphism(s4, g));
    for (const auto& a : auts) {
      CHECK(is_automorphism(s4, a));
      CHECK(inner.count(a) == 1);
    }
  }
  SUBCASE("Z2 has one") { CHECK(automorphism_group(cyclic_group(2)).size() == 1); }
  SUBCASE("V4 has 6, matching bijection scan") {
    auto v4 = generate(4, {p4("(12)(34)"), p4("(13)(24)")});
    CHECK(brute_force_aut_count(v4) == 6);
    CHECK(automorphism_group(v4).size() == 6);
  }
  SUBCASE("D8 agrees with bijection scan") {
    auto d8 = generate(4, {p4("(1234)"), p4("(13)")});
    CHECK(automorphism_group(d8).size() == brute_force_aut_count(d8));
  }
  SUBCASE("inner automorphisms number |G|/|Z(G)|") {
    for (auto g : {symmetric_group(3), generate(4, {p4("(1234)"), p4("(13)")}), cyclic_group(5)}) {
      std::set<GroupAut> inner;
      for (const auto& x : g.elements()) inner.insert(inner_automorphism(g, x));
      CHECK(inner.size() == g.order() / center(g).order());
      auto auts = automorphism_group(g);
      for (const auto& a : inner) CHECK(std::binary_search(auts.begin(), auts.end(), a));
    }
  }
  SUBCASE("bound") { CHECK_THROWS_AS(automorphism_group(symmetric_group(5)), BoundExceeded); }
}
