#include "fusionkit/report.hpp"

#include <algorithm>

namespace fusionkit {

bool ValidationReport::has(const std::string& axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

void ValidationReport::add(std::string axiom, std::vector<std::size_t> witness,
                           std::string detail) {
  auto same = std::count_if(violations.begin(), violations.end(),
                            [&](const Violation& v) { return v.axiom == axiom; });
  if (static_cast<std::size_t>(same) >= kWitnessesPerAxiom) {
    ++suppressed;
    return;
  }
  violations.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

std::ostream& operator<<(std::ostream& os, const ValidationReport& report) {
  if (report.valid()) return os << "valid\n";
  os << "invalid\n";
  for (const auto& v : report.violations) {
    os << "  " << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << "): " << v.detail << "\n";
  }
  if (report.suppressed) os << "  ... " << report.suppressed << " more\n";
  return os;
}

}  // namespace fusionkit
