#include "fusionkit/so_level2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusionkit::so {

namespace {

void require_rank(int r) {
  if (r < 2) throw InvalidInput("so(2r+1) level 2: r must be >= 2, got " + std::to_string(r));
}

// Prime-power factorization of n as (p, p^alpha) pairs.
std::vector<std::pair<long long, long long>> prime_powers(long long n) {
  std::vector<std::pair<long long, long long>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    long long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

}  // namespace

std::string AlcoveWeight::tag(int r) const {
  switch (kind) {
    case WeightKind::kZero: return "0";
    case WeightKind::kFundamental: return "lambda_" + std::to_string(index);
    case WeightKind::kTwoLambda1: return "2lambda_1";
    case WeightKind::kTwoLambdaR: return "2lambda_" + std::to_string(r);
    case WeightKind::kLambda1PlusLambdaR: return "lambda_1+lambda_" + std::to_string(r);
  }
  return "?";
}

AlcoveWeight zero() { return {WeightKind::kZero, 0}; }
AlcoveWeight lam(int i) { return {WeightKind::kFundamental, i}; }
AlcoveWeight two_lam1() { return {WeightKind::kTwoLambda1, 0}; }
AlcoveWeight two_lamr() { return {WeightKind::kTwoLambdaR, 0}; }
AlcoveWeight lam1_plus_lamr() { return {WeightKind::kLambda1PlusLambdaR, 0}; }

std::vector<AlcoveWeight> listed_alcove(int r) {
  require_rank(r);
  std::vector<AlcoveWeight> out{zero()};
  for (int i = 1; i <= r; ++i) out.push_back(lam(i));
  out.push_back(two_lam1());
  out.push_back(two_lamr());
  out.push_back(lam1_plus_lamr());
  return out;
}

std::vector<std::vector<int>> dominant_weights_below(int r, int level) {
  require_rank(r);
  // Doubled epsilon coordinates keep lambda_r = (1/2) sum eps integral.
  std::vector<std::vector<int>> fundamental(r, std::vector<int>(r, 0));
  for (int i = 0; i < r - 1; ++i)
    for (int j = 0; j <= i; ++j) fundamental[i][j] = 2;
  for (int j = 0; j < r; ++j) fundamental[r - 1][j] = 1;
  // simple roots: alpha_i = eps_i - eps_{i+1} (i < r), alpha_r = eps_r
  std::vector<std::vector<int>> simple(r, std::vector<int>(r, 0));
  for (int i = 0; i < r - 1; ++i) {
    simple[i][i] = 2;
    simple[i][i + 1] = -2;
  }
  simple[r - 1][r - 1] = 2;
  // theta = alpha_1 + 2 alpha_2 + ... + 2 alpha_r
  std::vector<int> theta(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) theta[j] += (i == 0 ? 1 : 2) * simple[i][j];
  std::vector<int> pairing(r);
  for (int i = 0; i < r; ++i) {
    int dot = 0;
    for (int j = 0; j < r; ++j) dot += fundamental[i][j] * theta[j];
    if (dot % 4 != 0) throw std::logic_error("dominant_weights_below: non-integral pairing");
    pairing[i] = dot / 4;
  }

  std::vector<std::vector<int>> out;
  std::vector<int> coeffs(r, 0);
  auto scan = [&](auto&& self, int i, int used) -> void {
    if (i == r) {
      out.push_back(coeffs);
      return;
    }
    for (int a = 0; a <= level; ++a) {
      int total = used + a * pairing[i];
      if (total > level) break;
      coeffs[i] = a;
      self(self, i + 1, total);
    }
    coeffs[i] = 0;
  };
  scan(scan, 0, 0);
  return out;
}

std::vector<AlcoveWeight> alcove(int r) {
  std::vector<AlcoveWeight> out;
  for (const auto& c : dominant_weights_below(r, 2)) {
    std::vector<int> support;
    for (int i = 0; i < r; ++i)
      if (c[i]) support.push_back(i + 1);
    if (support.empty()) {
      out.push_back(zero());
    } else if (support.size() == 1 && c[support[0] - 1] == 1) {
      out.push_back(lam(support[0]));
    } else if (support.size() == 1 && support[0] == 1 && c[0] == 2) {
      out.push_back(two_lam1());
    } else if (support.size() == 1 && support[0] == r && c[r - 1] == 2) {
      out.push_back(two_lamr());
    } else if (support.size() == 2 && support[0] == 1 && support[1] == r &&
               c[0] == 1 && c[r - 1] == 1) {
      out.push_back(lam1_plus_lamr());
    } else {
      throw std::logic_error("alcove: unexpected level-2 weight");
    }
  }
  std::sort(out.begin(), out.end());
  if (out != listed_alcove(r)) throw std::logic_error("alcove: scan disagrees with the listed alcove");
  return out;
}

std::vector<WeightDim> dim_profile(int r) {
  const long long n = 2LL * r + 1;
  std::vector<WeightDim> out;
  for (const auto& w : listed_alcove(r)) {
    long long sq = 4;
    if (w.kind == WeightKind::kZero || w.kind == WeightKind::kTwoLambda1) {
      sq = 1;
    } else if (w.kind == WeightKind::kLambda1PlusLambdaR ||
               (w.kind == WeightKind::kFundamental && w.index == r)) {
      sq = n;
    }
    out.push_back({w, sq, std::sqrt(static_cast<double>(sq))});
  }
  return out;
}

long long global_dim_squared_sum(int r) {
  long long total = 0;
  for (const auto& d : dim_profile(r)) total += d.dim_squared;
  return total;
}

int omega(long long n) {
  if (n < 1) throw InvalidInput("omega: n must be positive");
  return static_cast<int>(prime_powers(n).size());
}

int fold_index(int r, long long m, int i) {
  const long long n = 2LL * r + 1;
  long long v = ((m * i) % n + n) % n;
  long long folded = std::min(v, n - v);
  if (folded < 1 || folded > r) {
    throw InvalidInput("fold_index: m*i is divisible by 2r+1");
  }
  return static_cast<int>(folded);
}

std::vector<ExoticAut> exotic_autos(int r) {
  require_rank(r);
  const long long n = 2LL * r + 1;
  std::vector<ExoticAut> out;
  for (long long m = 1; m <= r; ++m) {
    if (std::gcd(m, n) != 1) continue;
    long long sq = m * m % n;
    if (sq == 1) out.push_back({static_cast<int>(m), false});
    else if (sq == n - 1) out.push_back({static_cast<int>(m), true});
  }
  return out;
}

AlcoveWeight apply_exotic(int r, int m, const AlcoveWeight& w) {
  int family = 0;
  if (w.kind == WeightKind::kFundamental && w.index < r) family = w.index;
  if (w.kind == WeightKind::kTwoLambdaR) family = r;
  if (family == 0) return w;
  int image = fold_index(r, m, family);
  return image == r ? two_lamr() : lam(image);
}

AlcoveWeight apply_swap(int r, const AlcoveWeight& w) {
  if (w == lam(r)) return lam1_plus_lamr();
  if (w == lam1_plus_lamr()) return lam(r);
  return w;
}

AlcoveWeight apply(int r, const LabelAut& g, const AlcoveWeight& w) {
  AlcoveWeight out = apply_exotic(r, g.m, w);
  return g.swap ? apply_swap(r, out) : out;
}

LabelAut compose(int r, const LabelAut& a, const LabelAut& b) {
  return {a.swap != b.swap, fold_index(r, static_cast<long long>(a.m) * b.m, 1)};
}

long long aut_group_order(int r) {
  require_rank(r);
  const long long n = 2LL * r + 1;
  auto powers = prime_powers(n);
  bool all_one_mod_four = std::all_of(powers.begin(), powers.end(),
                                      [](const auto& pq) { return pq.first % 4 == 1; });
  return 2LL * (1LL << (powers.size() - 1)) * (all_one_mod_four ? 2 : 1);
}

std::vector<LabelAut> label_automorphisms(int r) {
  std::vector<LabelAut> out;
  for (bool swap : {false, true})
    for (const auto& e : exotic_autos(r)) out.push_back({swap, e.m});
  std::sort(out.begin(), out.end());
  return out;
}

std::string NamedSubset::display_name() const {
  switch (name) {
    case SubsetName::kDelta0: return "Delta_0";
    case SubsetName::kDeltaZ2: return "Delta_Z2";
    case SubsetName::kGamma0: return "Gamma_0";
    case SubsetName::kGammaZ2: return "Gamma_Z2";
    case SubsetName::kXi: return "Xi_" + std::to_string(j);
  }
  return "?";
}

NamedSubset make_named_subset(int r, SubsetName name, int j) {
  require_rank(r);
  const int n = 2 * r + 1;
  NamedSubset s{name, 0, {}};
  switch (name) {
    case SubsetName::kDelta0:
      s.members = {zero()};
      break;
    case SubsetName::kDeltaZ2:
      s.members = {zero(), two_lam1()};
      break;
    case SubsetName::kGamma0:
      s.members = listed_alcove(r);
      break;
    case SubsetName::kGammaZ2:
      for (const auto& w : listed_alcove(r))
        if (w != lam(r) && w != lam1_plus_lamr()) s.members.push_back(w);
      break;
    case SubsetName::kXi:
      if (j <= 2 || n % j != 0) {
        throw InvalidInput("Xi_j needs a divisor 2 < j of 2r+1, got j = " + std::to_string(j));
      }
      s.j = j;
      s.members = {zero(), two_lam1()};
      for (int i = j; i <= (n - j) / 2; i += j) s.members.push_back(lam(i));
      break;
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

std::vector<NamedSubset> named_closed_subsets(int r) {
  std::vector<NamedSubset> out{make_named_subset(r, SubsetName::kDelta0),
                               make_named_subset(r, SubsetName::kDeltaZ2),
                               make_named_subset(r, SubsetName::kGamma0),
                               make_named_subset(r, SubsetName::kGammaZ2)};
  const int n = 2 * r + 1;
  for (int j = 3; j <= n; ++j)
    if (n % j == 0) out.push_back(make_named_subset(r, SubsetName::kXi, j));
  return out;
}

int theta(long long j, long long n) {
  if (n < 1 || n % 2 == 0) throw InvalidInput("theta: n must be a positive odd integer");
  if (j < 1 || n % j != 0) {
    throw InvalidInput("theta: " + std::to_string(j) + " does not divide " + std::to_string(n));
  }
  int count = 0;
  for (const auto& [p, q] : prime_powers(n))
    if (j % q == 0) ++count;
  return count;
}

long long formula_stabilizer_order(int r, const NamedSubset& subset) {
  switch (subset.name) {
    case SubsetName::kDelta0:
    case SubsetName::kDeltaZ2: return aut_group_order(r);
    case SubsetName::kGamma0: return 1;
    case SubsetName::kGammaZ2: return 2;
    case SubsetName::kXi: return 2LL << theta(subset.j, 2LL * r + 1);
  }
  return 0;
}

StabilizerResult subset_stabilizer(int r, const NamedSubset& subset) {
  auto expected = make_named_subset(r, subset.name, subset.j);
  if (expected.members != subset.members) {
    throw InvalidInput("subset_stabilizer: members of " + subset.display_name() +
                       " do not match its definition");
  }
  StabilizerResult result;
  for (const auto& g : label_automorphisms(r)) {
    bool fixes = std::all_of(subset.members.begin(), subset.members.end(),
                             [&](const AlcoveWeight& w) { return apply(r, g, w) == w; });
    if (fixes) result.elements.push_back(g);
  }
  std::set<LabelAut> span{LabelAut{}};
  for (const auto& g : result.elements) {
    if (span.count(g)) continue;
    result.generators.push_back(g);
    std::set<LabelAut> next = span;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& a : std::vector<LabelAut>(next.begin(), next.end()))
        for (const auto& b : result.generators)
          if (next.insert(compose(r, a, b)).second) grew = true;
    }
    span = std::move(next);
  }
  result.formula_order = formula_stabilizer_order(r, subset);
  return result;
}

}  // namespace fusionkit::so
