#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace fusionkit {

struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices
  std::string detail;
};

// Outcome of an axiom check. Empty violations means valid.
struct ValidationReport {
  std::vector<Violation> violations;
  // Witnesses recorded per axiom before further ones are only counted.
  static constexpr std::size_t kWitnessesPerAxiom = 8;
  std::size_t suppressed = 0;

  bool valid() const { return violations.empty() && suppressed == 0; }
  bool has(const std::string& axiom) const;
  void add(std::string axiom, std::vector<std::size_t> witness, std::string detail);
};

std::ostream& operator<<(std::ostream& os, const ValidationReport& report);

}  // namespace fusionkit
