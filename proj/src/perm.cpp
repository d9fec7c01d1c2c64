#include "fusionkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "fusionkit/error.hpp"

namespace fusionkit {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidInput("Perm: image sequence is not a bijection");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  if (degree == 0 || degree > 255) {
    throw InvalidInput("Perm: degree must be in [1, 255]");
  }
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), std::uint8_t{0});
  Perm result;
  result.images_ = std::move(images);
  return result;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<int>>& cycles) {
  auto images = identity(degree).images_;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || static_cast<std::size_t>(from) >= degree ||
          to < 0 || static_cast<std::size_t>(to) >= degree) {
        throw InvalidInput("Perm: cycle point out of range for degree " +
                           std::to_string(degree));
      }
      if (used[from]) {
        throw InvalidInput("Perm: point " + std::to_string(from + 1) +
                           " appears in two cycles");
      }
      used[from] = true;
      images[from] = static_cast<std::uint8_t>(to);
    }
  }
  return Perm(std::move(images));
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw InvalidInput("Perm: empty cycle string");
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw InvalidInput("Perm: expected '(' in \"" + std::string(text) + "\"");
    }
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) {
      throw InvalidInput("Perm: unbalanced '(' in \"" + std::string(text) + "\"");
    }
    std::string body(text.substr(pos + 1, close - pos - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    // Compact notation "(1324)" for degree < 10.
    if (tokens.size() == 1 && tokens[0].size() > 1 && degree < 10) {
      std::string compact = tokens[0];
      tokens.clear();
      for (char c : compact) tokens.emplace_back(1, c);
    }
    std::vector<int> cycle;
    for (const auto& tok : tokens) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw InvalidInput("Perm: bad point \"" + tok + "\"");
      }
      cycle.push_back(std::stoi(tok) - 1);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  }
  Perm result;
  result.images_ = std::move(inv);
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      if (p != start) out += ' ';
      out += std::to_string(p + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) {
    throw InvalidInput("Perm: composing permutations of different degree");
  }
  Perm result;
  result.images_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) {
    result.images_[i] = g.images_[h.images_[i]];
  }
  return result;
}

Perm pow(const Perm& g, long long exponent) {
  Perm base = exponent < 0 ? g.inverse() : g;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                       : static_cast<unsigned long long>(exponent);
  Perm result = Perm::identity(g.degree());
  while (e > 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1ULL;
  }
  return result;
}

}  // namespace fusionkit
