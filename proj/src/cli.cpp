#include "fusionkit/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/hilb.hpp"
#include "fusionkit/hypergroup.hpp"
#include "fusionkit/io.hpp"
#include "fusionkit/perm_group.hpp"
#include "fusionkit/so_level2.hpp"
#include "fusionkit/tambara_yamagami.hpp"

namespace fusionkit::cli {

namespace {

using nlohmann::json;

enum class Format { kMarkdown, kJson };

// Thrown by a command to report a validation failure after printing.
struct ValidationFailed {};

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// Split on commas that are not inside parentheses.
std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  for (auto& s : out) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
  }
  return out;
}

std::string mapping_string(std::span<const std::size_t> perm,
                           const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == i) continue;
    if (!out.empty()) out += "; ";
    out += labels[i] + " -> " + labels[perm[i]];
  }
  return out.empty() ? "identity" : out;
}

json labels_of(const FusionRing& ring, const ClosedSubset& s) {
  json out = json::array();
  for (auto i : s.indices) out.push_back(ring.label(i));
  return out;
}

json perms_json(const std::vector<RingAut>& auts) {
  json out = json::array();
  for (const auto& a : auts) out.push_back(a.perm);
  return out;
}

json violations_json(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report.violations) {
    out.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// check-fusion
void cmd_check_fusion(const std::string& file, Format format, std::ostream& out) {
  auto ring = io::fusion_ring_from_json(io::read_json_file(file));
  auto report = validate_fusion_ring(ring);
  std::vector<double> dims;
  if (report.valid()) dims = fp_dims(ring);
  if (format == Format::kJson) {
    emit(out, {{"valid", report.valid()},
               {"rank", ring.rank()},
               {"violations", violations_json(report)},
               {"fp_dims", dims}});
  } else {
    out << "# Fusion ring check: " << file << "\n\n";
    out << "rank " << ring.rank() << ": " << report;
    if (!dims.empty()) {
      out << "\n| label | FPdim |\n|---|---|\n";
      for (std::size_t i = 0; i < dims.size(); ++i) {
        out << "| " << ring.label(i) << " | " << fixed(dims[i]) << " |\n";
      }
    }
  }
  if (!report.valid()) throw ValidationFailed{};
}

// hypergroup
void cmd_hypergroup(const std::string& file, const std::string& orders_text, Format format,
                    std::ostream& out) {
  Hypergroup h;
  std::string source;
  if (!orders_text.empty()) {
    std::vector<std::size_t> orders;
    for (const auto& tok : split_labels(orders_text)) {
      try {
        orders.push_back(std::stoul(tok));
      } catch (const std::exception&) {
        throw InvalidInput("--from-group: bad factor order \"" + tok + "\"");
      }
    }
    h = from_group(abelian_perm_group(orders));
    source = "group with factor orders " + orders_text;
  } else {
    auto j = io::read_json_file(file);
    if (j.contains("N")) {
      auto ring = io::fusion_ring_from_json(j);
      auto ring_report = validate_fusion_ring(ring);
      if (!ring_report.valid()) {
        out << "fusion ring is " << ring_report;
        throw ValidationFailed{};
      }
      h = from_fusion_ring(ring);
      source = "Grothendieck hypergroup of " + file;
    } else {
      h = io::hypergroup_from_json(j);
      source = file;
    }
  }
  auto report = validate_hypergroup(h);
  if (format == Format::kJson) {
    emit(out, {{"source", source},
               {"valid", report.valid()},
               {"affinity_residual", report.affinity_residual},
               {"associativity_residual", report.associativity_residual},
               {"violations", violations_json(report.axioms)},
               {"hypergroup", io::to_json(h)}});
  } else {
    out << "# Hypergroup: " << source << "\n\n";
    out << "rank " << h.rank() << ", " << (h.exact() ? "exact" : "floating point")
        << " constants: " << report.axioms;
    out << "max affinity residual " << fixed(report.affinity_residual, 3)
        << ", max associativity residual " << fixed(report.associativity_residual, 3) << "\n\n";
    out << "| i | j | k | c |\n|---|---|---|---|\n";
    for (const auto& e : h.entries()) {
      out << "| " << h.labels()[e.i] << " | " << h.labels()[e.j] << " | " << h.labels()[e.k]
          << " | " << fixed(e.value) << " |\n";
    }
  }
  if (!report.valid()) throw ValidationFailed{};
}

FusionRing load_valid_ring(const std::string& file, std::ostream& out) {
  auto ring = io::fusion_ring_from_json(io::read_json_file(file));
  auto report = validate_fusion_ring(ring);
  if (!report.valid()) {
    out << "fusion ring is " << report;
    throw ValidationFailed{};
  }
  return ring;
}

// automorphisms
void cmd_automorphisms(const std::string& file, Format format, const Limits& limits,
                       std::ostream& out) {
  auto ring = load_valid_ring(file, out);
  auto auts = ring_automorphisms(ring, limits);
  if (format == Format::kJson) {
    emit(out, {{"labels", ring.labels()}, {"count", auts.size()}, {"automorphisms", perms_json(auts)}});
    return;
  }
  out << "# Fusion ring automorphisms: " << file << "\n\n" << auts.size() << " automorphisms\n\n";
  for (std::size_t i = 0; i < auts.size(); ++i) {
    out << i + 1 << ". " << mapping_string(auts[i].perm, ring.labels()) << "\n";
  }
}

// closed-subsets
void cmd_closed_subsets(const std::string& file, Format format, const Limits& limits,
                        std::ostream& out) {
  auto ring = load_valid_ring(file, out);
  auto subsets = closed_subsets(ring, limits);
  if (format == Format::kJson) {
    json list = json::array();
    for (const auto& s : subsets) list.push_back(labels_of(ring, s));
    emit(out, {{"count", subsets.size()}, {"subsets", list}});
    return;
  }
  out << "# Closed subsets: " << file << "\n\n" << subsets.size() << " closed subsets\n\n";
  out << "| # | size | members |\n|---|---|---|\n";
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::string members;
    for (auto k : subsets[i].indices) members += (members.empty() ? "" : ", ") + ring.label(k);
    out << "| " << i + 1 << " | " << subsets[i].indices.size() << " | " << members << " |\n";
  }
}

// stabilizers
void cmd_stabilizers(const std::string& file, const std::string& fix, Format format,
                     const Limits& limits, std::ostream& out) {
  auto ring = load_valid_ring(file, out);
  std::vector<std::size_t> seed;
  for (const auto& label : split_labels(fix)) {
    auto i = ring.index_of(label);
    if (!i) throw InvalidInput("--fix: unknown label \"" + label + "\"");
    seed.push_back(*i);
  }
  auto subset = closure(ring, seed);
  auto stab = pointwise_stabilizer(ring, subset, limits);
  if (format == Format::kJson) {
    emit(out, {{"closed_subset", labels_of(ring, subset)},
               {"count", stab.size()},
               {"automorphisms", perms_json(stab)}});
    return;
  }
  out << "# Pointwise stabilizer: " << file << "\n\nclosed subset: ";
  for (std::size_t i = 0; i < subset.indices.size(); ++i) {
    out << (i ? ", " : "") << ring.label(subset.indices[i]);
  }
  out << "\n\n" << stab.size() << " automorphisms fix it pointwise\n\n";
  for (std::size_t i = 0; i < stab.size(); ++i) {
    out << i + 1 << ". " << mapping_string(stab[i].perm, ring.labels()) << "\n";
  }
}

// s4-table
void cmd_s4_table(Format format, const Limits& limits, std::ostream& out) {
  auto rows = hilb::s4_table(limits);
  std::size_t total = 0;
  bool all_match = true;
  for (const auto& row : rows) {
    total += row.computed_count;
    all_match = all_match && row.matches();
  }
  if (format == Format::kJson) {
    json classes = json::array();
    for (const auto& row : rows) {
      classes.push_back({{"type", row.entry.name},
                         {"representative", io::to_json(row.representative)},
                         {"order", row.representative.order()},
                         {"count", row.computed_count},
                         {"expected_count", row.entry.count},
                         {"stabilizer", io::to_json(row.computed_stabilizer)},
                         {"stabilizer_order", row.computed_stabilizer.order()},
                         {"expected_stabilizer", io::to_json(row.expected_stabilizer)},
                         {"match", row.matches()}});
    }
    emit(out, {{"group", "S4"},
               {"order", 24},
               {"schur_multiplier_order", hilb::kS4SchurMultiplierOrder},
               {"total_subgroups", total},
               {"class_count", rows.size()},
               {"all_match", all_match},
               {"classes", classes}});
  } else {
    out << "# Hilb(S4): subgroup classes and restricted autoequivalences\n\n";
    out << "|G| = 24, " << total << " subgroups in " << rows.size()
        << " classes, |H^2(G, C^x)| = " << hilb::kS4SchurMultiplierOrder
        << "; Aut(Hilb(S4)|Vec(H)) = Stab(H) x| H^2(G, C^x)\n\n";
    out << "| type | representative | |H| | count | Stab(H) | |Stab| | expected | match |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& row : rows) {
      out << "| " << row.entry.name << " | " << describe(row.representative) << " | "
          << row.representative.order() << " | " << row.computed_count << " | "
          << describe(row.computed_stabilizer) << " | " << row.computed_stabilizer.order()
          << " | " << describe(row.expected_stabilizer) << " | "
          << (row.matches() ? "yes" : "NO") << " |\n";
    }
  }
  if (!all_match) throw ValidationFailed{};
}

// ty
void cmd_ty(const std::string& group_text, const std::string& gram_text,
            const std::string& sub_text, int tau, Format format, const Limits& limits,
            std::ostream& out) {
  auto group = ty::AbGroup::parse(group_text);
  auto chi = ty::Bicharacter::parse(group, gram_text);
  bool nondegenerate = ty::is_nondegenerate(chi);
  auto ring = ty::ty_fusion_ring(group);
  auto dims = fp_dims(ring);
  auto center = ty::center_counts(group.size());
  std::vector<ty::AbAut> auts;
  if (nondegenerate) auts = ty::aut_preserving(chi, limits);

  std::vector<std::size_t> subgroup;
  std::vector<ty::AbAut> stab;
  bool have_sub = !sub_text.empty();
  if (have_sub && nondegenerate) {
    std::vector<ty::Element> gens;
    std::stringstream rows(sub_text);
    for (std::string row; std::getline(rows, row, ';');) {
      ty::Element e;
      for (const auto& tok : split_labels(row)) {
        try {
          e.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw InvalidInput("--sub: bad residue \"" + tok + "\"");
        }
      }
      gens.push_back(std::move(e));
    }
    subgroup = ty::generated_subgroup(group, gens);
    stab = ty::ty_stab(chi, subgroup, limits);
  }

  auto element_labels = [&](std::span<const std::size_t> idx) {
    std::vector<std::string> out_labels;
    for (auto i : idx) out_labels.push_back(group.label(group.element(i)));
    return out_labels;
  };
  std::vector<std::string> all_labels;
  for (std::size_t i = 0; i < group.size(); ++i) all_labels.push_back(group.label(group.element(i)));
  auto aut_list = [&](const std::vector<ty::AbAut>& list) {
    json j = json::array();
    for (const auto& a : list) j.push_back(element_labels(a.mapping));
    return j;
  };

  if (format == Format::kJson) {
    json j{{"group", group.describe()},
           {"order", group.size()},
           {"gram", chi.describe()},
           {"tau", tau},
           {"nondegenerate", nondegenerate},
           {"ring_rank", ring.rank()},
           {"fp_dim_m", dims.back()},
           {"center", {{"invertibles", center.invertibles}, {"total", center.total}}},
           {"aut_order", auts.size()},
           {"automorphisms", aut_list(auts)}};
    if (have_sub) {
      j["subgroup"] = element_labels(subgroup);
      j["stab_order"] = stab.size();
      j["stabilizer"] = aut_list(stab);
    }
    emit(out, j);
  } else {
    out << "# Tambara-Yamagami TY(" << group.describe() << ", chi, " << (tau > 0 ? "+" : "-")
        << ")\n\n";
    out << "- gram matrix: " << chi.describe() << (nondegenerate ? " (nondegenerate)" : " (DEGENERATE)")
        << "\n";
    out << "- fusion ring rank " << ring.rank() << ", FPdim(m) = " << fixed(dims.back()) << "\n";
    out << "- Drinfeld center: " << center.invertibles << " invertible simples, " << center.total
        << " simples\n";
    if (nondegenerate) {
      out << "- |Aut(A, chi)| = " << auts.size() << "\n\n";
      for (std::size_t i = 0; i < auts.size(); ++i) {
        out << i + 1 << ". " << mapping_string(auts[i].mapping, all_labels) << "\n";
      }
      if (have_sub) {
        out << "\nH = {";
        auto hl = element_labels(subgroup);
        for (std::size_t i = 0; i < hl.size(); ++i) out << (i ? ", " : "") << hl[i];
        out << "}: |Stab(H, chi)| = " << stab.size() << "\n\n";
        for (std::size_t i = 0; i < stab.size(); ++i) {
          out << i + 1 << ". " << mapping_string(stab[i].mapping, all_labels) << "\n";
        }
      }
    }
  }
  if (!nondegenerate) throw ValidationFailed{};
}

// so2
void cmd_so2(int r, Format format, std::ostream& out) {
  auto weights = so::alcove(r);
  auto dims = so::dim_profile(r);
  auto exotic = so::exotic_autos(r);
  auto order = so::aut_group_order(r);
  auto subsets = so::named_closed_subsets(r);
  auto label_aut = [](const so::LabelAut& g) {
    return json{{"swap", g.swap}, {"m", g.m}};
  };
  if (format == Format::kJson) {
    json alcove = json::array();
    for (const auto& w : weights) alcove.push_back(w.tag(r));
    json dim_list = json::array();
    for (const auto& d : dims) dim_list.push_back({{"weight", d.weight.tag(r)}, {"dim_squared", d.dim_squared}});
    json exotic_list = json::array();
    for (const auto& e : exotic) exotic_list.push_back({{"m", e.m}, {"m_squared", e.square_is_minus_one ? -1 : 1}});
    json subset_list = json::array();
    for (const auto& s : subsets) {
      auto stab = so::subset_stabilizer(r, s);
      json members = json::array();
      for (const auto& w : s.members) members.push_back(w.tag(r));
      json gens = json::array();
      for (const auto& g : stab.generators) gens.push_back(label_aut(g));
      subset_list.push_back({{"name", s.display_name()},
                             {"members", members},
                             {"stab_order", stab.order()},
                             {"stab_generators", gens},
                             {"formula_order", stab.formula_order},
                             {"match", stab.matches_formula()}});
    }
    emit(out, {{"r", r},
               {"alcove", alcove},
               {"dim_profile", dim_list},
               {"global_dim_squared", so::global_dim_squared_sum(r)},
               {"exotic", exotic_list},
               {"aut_order", order},
               {"subsets", subset_list}});
    return;
  }
  out << "# C(so_" << 2 * r + 1 << ", 2), r = " << r << "\n\n";
  out << "rank " << weights.size() << ", sum of squared dimensions " << so::global_dim_squared_sum(r)
      << " (profile derived from two invertibles and the total)\n\n";
  out << "| weight | dim^2 |\n|---|---|\n";
  for (const auto& d : dims) out << "| " << d.weight.tag(r) << " | " << d.dim_squared << " |\n";
  out << "\n|Aut| = " << order << "; exotic sign classes m:";
  for (const auto& e : exotic) out << " " << e.m << (e.square_is_minus_one ? " (m^2=-1)" : "");
  out << "\n\n| subset | members | |Stab| direct | closed form | match |\n|---|---|---|---|---|\n";
  for (const auto& s : subsets) {
    auto stab = so::subset_stabilizer(r, s);
    std::string members;
    for (const auto& w : s.members) members += (members.empty() ? "" : ", ") + w.tag(r);
    out << "| " << s.display_name() << " | " << members << " | " << stab.order() << " | "
        << stab.formula_order << " | " << (stab.matches_formula() ? "yes" : "no") << " |\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fusionkit: fusion rings, hypergroups and restricted symmetry groups", "fusionkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text = "md";
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"md", "json"}));

  std::string file, fix, orders, group_text, gram_text, sub_text;
  int tau = 1;
  int r = 0;

  auto* check = app.add_subcommand("check-fusion", "Validate a fusion ring JSON file");
  check->add_option("file", file, "Fusion ring JSON")->required();

  auto* hyper = app.add_subcommand("hypergroup", "Build and validate a hypergroup");
  auto* source = hyper->add_option_group("source");
  source->add_option("file", file, "Fusion ring or hypergroup JSON");
  source->add_option("--from-group", orders, "Cyclic factor orders, e.g. 2,2");
  source->require_option(1);

  auto* autos = app.add_subcommand("automorphisms", "Fusion ring automorphisms");
  autos->add_option("file", file, "Fusion ring JSON")->required();

  auto* closed = app.add_subcommand("closed-subsets", "Closed subsets (fusion subrings)");
  closed->add_option("file", file, "Fusion ring JSON")->required();

  auto* stabs = app.add_subcommand("stabilizers", "Pointwise stabilizer of a closed subset");
  stabs->add_option("file", file, "Fusion ring JSON")->required();
  stabs->add_option("--fix", fix, "Comma separated labels; closed under fusion before use")
      ->required();

  auto* s4 = app.add_subcommand("s4-table", "Subgroup census and stabilizers of Hilb(S4)");

  auto* tyc = app.add_subcommand("ty", "Tambara-Yamagami symmetry data");
  tyc->add_option("--group", group_text, "Cyclic factor orders, e.g. 2,2")->required();
  tyc->add_option("--gram", gram_text, "Gram matrix over Q/Z, e.g. \"0,1/2;1/2,0\"")->required();
  tyc->add_option("--sub", sub_text, "Subgroup generators, e.g. \"1,0\" or \"1,0;0,1\"");
  tyc->add_option("--tau", tau, "Sign choice (+1 or -1)")->check(CLI::IsMember({1, -1}));

  auto* so2 = app.add_subcommand("so2", "C(so_{2r+1}, 2) label combinatorics");
  so2->add_option("--r", r, "Rank r >= 2")->required()->check(CLI::Range(2, 1000));

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"md", "json"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  const Format format = format_text == "json" ? Format::kJson : Format::kMarkdown;
  try {
    const auto limits = Limits::from_environment();
    if (check->parsed()) cmd_check_fusion(file, format, out);
    else if (hyper->parsed()) cmd_hypergroup(file, orders, format, out);
    else if (autos->parsed()) cmd_automorphisms(file, format, limits, out);
    else if (closed->parsed()) cmd_closed_subsets(file, format, limits, out);
    else if (stabs->parsed()) cmd_stabilizers(file, fix, format, limits, out);
    else if (s4->parsed()) cmd_s4_table(format, limits, out);
    else if (tyc->parsed()) cmd_ty(group_text, gram_text, sub_text, tau, format, limits, out);
    else if (so2->parsed()) cmd_so2(r, format, out);
  } catch (const ValidationFailed&) {
    return kExitInvalid;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace fusionkit::cli
