#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fusionkit {

// A permutation of {0, ..., n-1}, stored as its image sequence.
//
// Composition follows function notation: (g * h)(x) = g(h(x)).
// The ordering is lexicographic on image sequences and is the canonical
// order used by every sorted list in the library.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(std::size_t degree);
  // Build from cycles of 0-indexed points.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<int>>& cycles);
  // Parse 1-indexed cycle notation such as "(1 2)(3 4)" or "()".
  // Commas are accepted as separators inside a cycle.
  static Perm parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t operator()(std::size_t point) const { return images_[point]; }
  std::span<const std::uint8_t> images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  // 1-indexed cycle notation; identity is "()".
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& g, const Perm& h);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

Perm pow(const Perm& g, long long exponent);
inline Perm conjugate(const Perm& g, const Perm& x) { return g * x * g.inverse(); }

}  // namespace fusionkit
