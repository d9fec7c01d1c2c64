#include "fusionkit/hilb.hpp"

#include <algorithm>

namespace fusionkit::hilb {

FusionRing group_ring(const PermGroup& group) {
  const auto& el = group.elements();
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<FusionEntry> entries;
  for (std::size_t g = 0; g < el.size(); ++g) {
    labels.push_back(el[g].to_cycle_string());
    dual.push_back(*group.index_of(el[g].inverse()));
    for (std::size_t h = 0; h < el.size(); ++h) {
      entries.push_back({g, h, *group.index_of(el[g] * el[h]), 1});
    }
  }
  return FusionRing(std::move(labels), 0, std::move(dual), entries);
}

std::vector<std::size_t> conjugation_action(const PermGroup& group, const Perm& g) {
  std::vector<std::size_t> perm;
  perm.reserve(group.order());
  for (const auto& x : group.elements()) perm.push_back(*group.index_of(conjugate(g, x)));
  return perm;
}

ClosedSubset subgroup_basis(const PermGroup& group, const PermGroup& subgroup) {
  ClosedSubset s;
  for (const auto& h : subgroup.elements()) {
    auto i = group.index_of(h);
    if (!i) throw InvalidInput("subgroup_basis: " + h.to_cycle_string() + " not in group");
    s.indices.push_back(*i);
  }
  std::sort(s.indices.begin(), s.indices.end());
  return s;
}

HilbReport stabilizer_table(const PermGroup& group, std::size_t schur_order,
                            const Limits& limits) {
  if (schur_order == 0) throw InvalidInput("stabilizer_table: Schur multiplier order must be positive");
  HilbReport report;
  report.group = describe(group);
  report.group_order = group.order();
  report.schur_multiplier_order = schur_order;
  for (auto& cls : classify_subgroups(group, limits)) {
    report.total_subgroups += cls.count;
    auto stab = centralizer(group, cls.representative.elements());
    report.rows.push_back({std::move(cls.representative), cls.count, std::move(stab)});
  }
  return report;
}

const std::vector<S4CensusEntry>& s4_census() {
  static const std::vector<S4CensusEntry> census{
      {"trivial", {}, 1, {"(12)", "(1234)"}},
      {"Z2 (transposition)", {"(12)"}, 6, {"(12)", "(34)"}},
      {"Z2 (double transposition)", {"(12)(34)"}, 3, {"(1324)", "(12)"}},
      {"Z3", {"(123)"}, 4, {"(123)"}},
      {"Z4", {"(1234)"}, 3, {"(1234)"}},
      {"V4 (normal)", {"(12)(34)", "(13)(24)"}, 1, {"(12)(34)", "(13)(24)"}},
      {"V4 (non-normal)", {"(12)", "(34)"}, 3, {"(12)", "(34)"}},
      {"D8", {"(1234)", "(13)"}, 3, {"(13)(24)"}},
      {"S3", {"(12)", "(23)"}, 4, {}},
      {"A4", {"(123)", "(12)(34)"}, 1, {}},
      {"S4", {"(12)", "(1234)"}, 1, {}},
  };
  return census;
}

namespace {

PermGroup from_strings(const std::vector<std::string>& gens) {
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(Perm::parse(g, 4));
  return generate(4, std::move(perms));
}

}  // namespace

std::vector<S4TableRow> s4_table(const Limits& limits) {
  const auto s4 = symmetric_group(4);
  const auto report = stabilizer_table(s4, kS4SchurMultiplierOrder, limits);
  std::vector<S4TableRow> rows;
  for (const auto& entry : s4_census()) {
    auto rep = from_strings(entry.generators);
    S4TableRow row{entry, rep, 0, {}, from_strings(entry.stabilizer_generators)};
    // The class of rep is the class whose representative is conjugate to it.
    for (const auto& cls : report.rows) {
      if (cls.representative.order() != rep.order()) continue;
      bool conjugate_found = std::any_of(s4.elements().begin(), s4.elements().end(), [&](const Perm& g) {
        return std::all_of(rep.elements().begin(), rep.elements().end(), [&](const Perm& x) {
          return cls.representative.contains(conjugate(g, x));
        });
      });
      if (conjugate_found) {
        row.computed_count = cls.count;
        break;
      }
    }
    row.computed_stabilizer = centralizer(s4, rep.elements());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fusionkit::hilb
