#include "fusionkit/tambara_yamagami.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fusionkit::ty {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else if (c != ' ' && c != '\t') {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw InvalidInput(std::string(what) + ": cannot parse \"" + s + "\"");
  }
  return v;
}

}  // namespace

Phase::Phase(Rational value) : value_(std::move(value)) {
  auto num = value_.numerator() % value_.denominator();
  if (num < 0) num += value_.denominator();
  value_ = Rational(num, value_.denominator());
}

Phase Phase::parse(std::string_view text) {
  auto parts = split(text, '/');
  if (parts.size() == 1) return Phase(parse_int(parts[0], "Phase"), 1);
  if (parts.size() != 2) throw InvalidInput("Phase: cannot parse \"" + std::string(text) + "\"");
  auto den = parse_int(parts[1], "Phase");
  if (den == 0) throw InvalidInput("Phase: zero denominator");
  return Phase(parse_int(parts[0], "Phase"), den);
}

std::string Phase::to_string() const {
  if (value_.denominator() == 1) return std::to_string(value_.numerator());
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

AbGroup::AbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  for (int n : orders_) {
    if (n < 2) throw InvalidInput("AbGroup: cyclic factor orders must be >= 2");
    if (size_ > (std::size_t{1} << 20)) throw BoundExceeded("AbGroup: group too large");
    size_ *= static_cast<std::size_t>(n);
  }
}

AbGroup AbGroup::parse(std::string_view text) {
  std::vector<int> orders;
  for (const auto& tok : split(text, ',')) {
    orders.push_back(static_cast<int>(parse_int(tok, "AbGroup")));
  }
  return AbGroup(std::move(orders));
}

Element AbGroup::element(std::size_t index) const {
  if (index >= size_) throw InvalidInput("AbGroup: element index out of range");
  Element a(orders_.size());
  for (std::size_t s = orders_.size(); s-- > 0;) {
    a[s] = static_cast<int>(index % orders_[s]);
    index /= orders_[s];
  }
  return a;
}

bool AbGroup::is_element(const Element& a) const {
  if (a.size() != orders_.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[s] < 0 || a[s] >= orders_[s]) return false;
  return true;
}

std::size_t AbGroup::index_of(const Element& a) const {
  if (!is_element(a)) throw InvalidInput("AbGroup: malformed element " + label(a));
  std::size_t index = 0;
  for (std::size_t s = 0; s < a.size(); ++s) index = index * orders_[s] + a[s];
  return index;
}

Element AbGroup::add(const Element& a, const Element& b) const {
  Element out(orders_.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = (a[s] + b[s]) % orders_[s];
  return out;
}

Element AbGroup::negate(const Element& a) const {
  Element out(orders_.size());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = (orders_[s] - a[s]) % orders_[s];
  return out;
}

Element AbGroup::scale(std::int64_t k, const Element& a) const {
  Element out(orders_.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    auto v = (k % orders_[s]) * a[s] % orders_[s];
    out[s] = static_cast<int>(v < 0 ? v + orders_[s] : v);
  }
  return out;
}

int AbGroup::element_order(const Element& a) const {
  int order = 1;
  for (std::size_t s = 0; s < a.size(); ++s) {
    order = std::lcm(order, orders_[s] / std::gcd(orders_[s], a[s]));
  }
  return order;
}

Element AbGroup::generator(std::size_t s) const {
  Element e(orders_.size(), 0);
  e.at(s) = 1;
  return e;
}

std::string AbGroup::label(const Element& a) const {
  if (a.size() == 1) return std::to_string(a[0]);
  std::string out = "(";
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (s) out += ",";
    out += std::to_string(a[s]);
  }
  return out + ")";
}

std::string AbGroup::describe() const {
  if (orders_.empty()) return "0";
  std::string out;
  for (std::size_t s = 0; s < orders_.size(); ++s) {
    if (s) out += " x ";
    out += "Z" + std::to_string(orders_[s]);
  }
  return out;
}

Bicharacter::Bicharacter(AbGroup group, std::vector<std::vector<Phase>> gram)
    : group_(std::move(group)), gram_(std::move(gram)) {
  const auto k = group_.rank();
  if (gram_.size() != k) throw InvalidInput("Bicharacter: Gram matrix has wrong size");
  for (const auto& row : gram_)
    if (row.size() != k) throw InvalidInput("Bicharacter: Gram matrix is not square");
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      if (gram_[s][t] != gram_[t][s]) {
        throw InvalidInput("Bicharacter: Gram matrix is not symmetric");
      }
      if (!(group_.orders()[s] * gram_[s][t]).is_zero()) {
        throw InvalidInput("Bicharacter: entry (" + std::to_string(s) + "," +
                           std::to_string(t) + ") = " + gram_[s][t].to_string() +
                           " is not killed by the factor order");
      }
    }
}

Bicharacter Bicharacter::parse(AbGroup group, std::string_view text) {
  std::vector<std::vector<Phase>> gram;
  for (const auto& row : split(text, ';')) {
    std::vector<Phase> entries;
    for (const auto& tok : split(row, ',')) entries.push_back(Phase::parse(tok));
    gram.push_back(std::move(entries));
  }
  return Bicharacter(std::move(group), std::move(gram));
}

Bicharacter Bicharacter::standard_cyclic(int n, std::int64_t numerator) {
  return Bicharacter(AbGroup({n}), {{Phase(numerator, n)}});
}

Bicharacter Bicharacter::hyperbolic_klein() {
  return Bicharacter(AbGroup({2, 2}), {{Phase(0, 1), Phase(1, 2)}, {Phase(1, 2), Phase(0, 1)}});
}

std::string Bicharacter::describe() const {
  std::string out;
  for (std::size_t s = 0; s < gram_.size(); ++s) {
    if (s) out += ";";
    for (std::size_t t = 0; t < gram_[s].size(); ++t) {
      if (t) out += ",";
      out += gram_[s][t].to_string();
    }
  }
  return out;
}

Phase chi_eval(const Bicharacter& chi, const Element& a, const Element& b) {
  const auto& group = chi.group();
  if (!group.is_element(a) || !group.is_element(b)) {
    throw InvalidInput("chi_eval: malformed element");
  }
  Phase total;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < b.size(); ++t)
      total = total + static_cast<std::int64_t>(a[s]) * b[t] * chi.gram()[s][t];
  return total;
}

bool is_nondegenerate(const Bicharacter& chi) {
  const auto& group = chi.group();
  for (std::size_t i = 1; i < group.size(); ++i) {
    auto a = group.element(i);
    bool radical = true;
    for (std::size_t j = 0; j < group.size() && radical; ++j) {
      radical = chi_eval(chi, a, group.element(j)).is_zero();
    }
    if (radical) return false;
  }
  return true;
}

AbAut compose(const AbAut& f, const AbAut& g) {
  AbAut out;
  out.mapping.reserve(g.mapping.size());
  for (auto i : g.mapping) out.mapping.push_back(f.mapping[i]);
  return out;
}

bool is_group_automorphism(const AbGroup& group, const AbAut& aut) {
  const auto n = group.size();
  if (aut.mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : aut.mapping) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto sum = group.index_of(group.add(group.element(a), group.element(b)));
      auto image_sum = group.add(group.element(aut.mapping[a]), group.element(aut.mapping[b]));
      if (aut.mapping[sum] != group.index_of(image_sum)) return false;
    }
  return true;
}

namespace {

// Backtracking over images of the factor generators e_0, e_1, ...
class AbAutSearch {
 public:
  AbAutSearch(const AbGroup& group, const Bicharacter* chi) : group_(group), chi_(chi) {}

  std::vector<AbAut> run() {
    recurse(0);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  // The map on <e_0..e_{k-1}> determined by the chosen images, or empty if
  // it is not injective.
  std::vector<std::size_t> partial_map(std::size_t k) const {
    const auto n = group_.size();
    std::vector<std::size_t> map(n, n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      auto a = group_.element(i);
      bool in_span = true;
      for (std::size_t s = k; s < a.size(); ++s) in_span = in_span && a[s] == 0;
      if (!in_span) continue;
      Element image(group_.rank(), 0);
      for (std::size_t s = 0; s < k; ++s) image = group_.add(image, group_.scale(a[s], images_[s]));
      auto j = group_.index_of(image);
      if (used[j]) return {};
      used[j] = true;
      map[i] = j;
    }
    return map;
  }

  void recurse(std::size_t k) {
    if (k == group_.rank()) {
      auto map = partial_map(k);
      if (!map.empty()) results_.push_back({std::move(map)});
      return;
    }
    const int order = group_.orders()[k];
    for (std::size_t j = 0; j < group_.size(); ++j) {
      auto b = group_.element(j);
      if (order % group_.element_order(b) != 0) continue;
      if (chi_) {
        bool keeps = chi_eval(*chi_, b, b) == chi_->gram()[k][k];
        for (std::size_t t = 0; t < k && keeps; ++t) {
          keeps = chi_eval(*chi_, b, images_[t]) == chi_->gram()[k][t];
        }
        if (!keeps) continue;
      }
      images_.push_back(b);
      if (!partial_map(k + 1).empty()) recurse(k + 1);
      images_.pop_back();
    }
  }

  const AbGroup& group_;
  const Bicharacter* chi_;
  std::vector<Element> images_;
  std::vector<AbAut> results_;
};

void check_order(const AbGroup& group, const Limits& limits) {
  if (group.size() > limits.max_abelian_order) {
    throw BoundExceeded("abelian group order " + std::to_string(group.size()) +
                        " exceeds " + std::to_string(limits.max_abelian_order));
  }
}

}  // namespace

std::vector<AbAut> group_automorphisms(const AbGroup& group, const Limits& limits) {
  check_order(group, limits);
  return AbAutSearch(group, nullptr).run();
}

std::vector<AbAut> aut_preserving(const Bicharacter& chi, const Limits& limits) {
  check_order(chi.group(), limits);
  if (!is_nondegenerate(chi)) throw InvalidInput("aut_preserving: bicharacter is degenerate");
  return AbAutSearch(chi.group(), &chi).run();
}

std::vector<std::size_t> generated_subgroup(const AbGroup& group,
                                            std::span<const Element> gens) {
  std::set<std::size_t> found{0};
  std::vector<std::size_t> frontier{0};
  for (const auto& g : gens) {
    if (!group.is_element(g)) throw InvalidInput("generated_subgroup: malformed element " + group.label(g));
  }
  while (!frontier.empty()) {
    auto x = group.element(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      auto y = group.index_of(group.add(x, g));
      if (found.insert(y).second) frontier.push_back(y);
    }
  }
  return {found.begin(), found.end()};
}

bool is_subgroup(const AbGroup& group, std::span<const std::size_t> indices) {
  std::set<std::size_t> s(indices.begin(), indices.end());
  if (!s.count(0)) return false;
  for (auto i : s) {
    if (i >= group.size()) return false;
    for (auto j : s) {
      if (!s.count(group.index_of(group.add(group.element(i), group.negate(group.element(j)))))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AbAut> ty_stab(const Bicharacter& chi, std::span<const std::size_t> subgroup,
                           const Limits& limits) {
  if (!is_subgroup(chi.group(), subgroup)) throw InvalidInput("ty_stab: H is not a subgroup");
  std::vector<AbAut> out;
  for (auto& aut : aut_preserving(chi, limits)) {
    bool fixes = std::all_of(subgroup.begin(), subgroup.end(),
                             [&](std::size_t h) { return aut.mapping[h] == h; });
    if (fixes) out.push_back(std::move(aut));
  }
  return out;
}

FusionRing ty_fusion_ring(const AbGroup& group) {
  const auto n = group.size();
  const auto m = n;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<FusionEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    auto ea = group.element(a);
    labels.push_back(group.label(ea));
    dual.push_back(group.index_of(group.negate(ea)));
    for (std::size_t b = 0; b < n; ++b) {
      entries.push_back({a, b, group.index_of(group.add(ea, group.element(b))), 1});
    }
    entries.push_back({a, m, m, 1});
    entries.push_back({m, a, m, 1});
    entries.push_back({m, m, a, 1});
  }
  labels.push_back("m");
  dual.push_back(m);
  return FusionRing(std::move(labels), 0, std::move(dual), entries);
}

std::vector<std::size_t> ring_permutation(const AbGroup& group, const AbAut& aut) {
  std::vector<std::size_t> perm = aut.mapping;
  perm.push_back(group.size());
  return perm;
}

CenterCounts center_counts(std::size_t group_order) {
  if (group_order == 0) throw InvalidInput("center_counts: |A| must be positive");
  return {2 * group_order, 4 * group_order + group_order * (group_order - 1) / 2};
}

}  // namespace fusionkit::ty
