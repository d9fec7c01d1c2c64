#include <cstdlib>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* value = std::getenv("FUSIONKIT_MAX_GROUP_ORDER")) {
    try {
      auto n = std::stoul(value);
      if (n > 0) limits.max_group_order = n;
    } catch (const std::exception&) {
      throw InvalidInput(std::string("FUSIONKIT_MAX_GROUP_ORDER: not a number: ") + value);
    }
  }
  return limits;
}

}  // namespace fusionkit
