#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fusionkit {

// Thrown when an input violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a search would exceed a configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative numeric method fails to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size limits shared by every enumeration routine.
struct Limits {
  std::size_t max_degree = 16;
  std::size_t max_generated_order = 100000;  // generate
  std::size_t max_group_order = 120;  // all_subgroups
  std::size_t max_aut_group_order = 48;  // automorphism_group
  std::size_t max_rank = 32;  // ring_automorphisms, closed_subsets (hard cap 64)
  std::size_t brute_force_rank = 8;
  std::size_t max_abelian_order = 64;

  // Defaults, with FUSIONKIT_MAX_GROUP_ORDER applied when set.
  static Limits from_environment();
};

}  // namespace fusionkit
