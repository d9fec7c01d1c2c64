#include "fusionkit/fusion_ring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <Eigen/Dense>

namespace fusionkit {

FusionRing::FusionRing(std::vector<std::string> labels, std::size_t unit,
                       std::vector<std::size_t> dual,
                       std::span<const FusionEntry> entries)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
  const auto r = labels_.size();
  if (r == 0) throw InvalidInput("FusionRing: rank must be positive");
  if (r > kMaxRank) {
    throw BoundExceeded("FusionRing: rank " + std::to_string(r) + " exceeds " +
                        std::to_string(kMaxRank));
  }
  if (unit_ >= r) throw InvalidInput("FusionRing: unit index out of range");
  if (dual_.size() != r) {
    throw InvalidInput("FusionRing: dual has length " + std::to_string(dual_.size()) +
                       ", expected " + std::to_string(r));
  }
  for (auto d : dual_) {
    if (d >= r) throw InvalidInput("FusionRing: dual index out of range");
  }
  coeffs_.assign(r * r * r, 0);
  for (const auto& e : entries) {
    if (e.x >= r || e.y >= r || e.z >= r) {
      throw InvalidInput("FusionRing: entry index out of range");
    }
    if (e.value < 0) throw InvalidInput("FusionRing: negative structure constant");
    coeffs_[(e.x * r + e.y) * r + e.z] = e.value;
  }
}

std::vector<FusionEntry> FusionRing::entries() const {
  std::vector<FusionEntry> out;
  const auto r = rank();
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        if (auto v = n(x, y, z)) out.push_back({x, y, z, v});
  return out;
}

std::optional<std::size_t> FusionRing::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

FusionRing FusionRing::with_coefficient(std::size_t x, std::size_t y,
                                        std::size_t z, int value) const {
  if (x >= rank() || y >= rank() || z >= rank()) {
    throw InvalidInput("with_coefficient: index out of range");
  }
  if (value < 0) throw InvalidInput("with_coefficient: negative structure constant");
  FusionRing copy = *this;
  copy.coeffs_[(x * rank() + y) * rank() + z] = value;
  return copy;
}

FusionRing fibonacci_ring() {
  std::vector<FusionEntry> entries{
      {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  return FusionRing({"1", "tau"}, 0, {0, 1}, entries);
}

FusionRing cyclic_group_ring(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic_group_ring: order must be positive");
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<FusionEntry> entries;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    dual.push_back((n - a) % n);
    for (std::size_t b = 0; b < n; ++b) entries.push_back({a, b, (a + b) % n, 1});
  }
  return FusionRing(std::move(labels), 0, std::move(dual), entries);
}

ValidationReport validate_fusion_ring(const FusionRing& ring) {
  ValidationReport report;
  const auto r = ring.rank();
  const auto u = ring.unit();
  for (std::size_t x = 0; x < r; ++x) {
    if (ring.dual(ring.dual(x)) != x) {
      report.add("dual involution", {x}, "dual(dual(x)) != x");
    }
  }
  if (ring.dual(u) != u) report.add("dual involution", {u}, "unit is not self-dual");
  for (std::size_t y = 0; y < r; ++y) {
    for (std::size_t z = 0; z < r; ++z) {
      int expect = y == z ? 1 : 0;
      if (ring.n(u, y, z) != expect) {
        report.add("left unit", {y, z}, "N(unit,y,z) = " + std::to_string(ring.n(u, y, z)));
      }
      if (ring.n(y, u, z) != expect) {
        report.add("right unit", {y, z}, "N(y,unit,z) = " + std::to_string(ring.n(y, u, z)));
      }
    }
  }
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      int expect = y == ring.dual(x) ? 1 : 0;
      if (ring.n(x, y, u) != expect) {
        report.add("duality", {x, y},
                   "N(x,y,unit) = " + std::to_string(ring.n(x, y, u)) + ", expected " +
                       std::to_string(expect));
      }
    }
  }
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        for (std::size_t v = 0; v < r; ++v) {
          long lhs = 0, rhs = 0;
          for (std::size_t w = 0; w < r; ++w) {
            lhs += static_cast<long>(ring.n(x, y, w)) * ring.n(w, z, v);
            rhs += static_cast<long>(ring.n(y, z, w)) * ring.n(x, w, v);
          }
          if (lhs != rhs) {
            report.add("associativity", {x, y, z, v},
                       "(xy)z gives " + std::to_string(lhs) + ", x(yz) gives " +
                           std::to_string(rhs));
          }
        }
  return report;
}

std::vector<double> fp_dims(const FusionRing& ring) {
  constexpr double kTolerance = 1e-12;
  constexpr int kMaxIterations = 100000;
  const auto r = static_cast<Eigen::Index>(ring.rank());
  std::vector<double> dims(ring.rank());
  for (std::size_t x = 0; x < ring.rank(); ++x) {
    // (N_x v)_z = sum_y N(x,y,z) v_y, plus the identity shift.
    Eigen::MatrixXd shifted = Eigen::MatrixXd::Identity(r, r);
    for (Eigen::Index y = 0; y < r; ++y)
      for (Eigen::Index z = 0; z < r; ++z) shifted(z, y) += ring.n(x, y, z);
    Eigen::VectorXd v = Eigen::VectorXd::Ones(r);
    double lambda = 0.0;
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      Eigen::VectorXd w = shifted * v;
      double norm = w.lpNorm<Eigen::Infinity>();
      if (!(norm > 0.0) || !std::isfinite(norm)) break;
      w /= norm;
      double delta = (w - v).lpNorm<Eigen::Infinity>();
      double change = std::abs(norm - lambda);
      lambda = norm;
      v = std::move(w);
      if (change < kTolerance && delta < kTolerance) {
        converged = true;
        break;
      }
    }
    double dim = lambda - 1.0;
    if (!converged || dim < 1.0 - 1e-9) {
      throw ConvergenceError("fp_dims: no Perron eigenvalue >= 1 for " + ring.label(x));
    }
    dims[x] = dim;
  }
  return dims;
}

bool ClosedSubset::contains(std::size_t i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

namespace {

using Mask = std::uint64_t;

Mask closure_mask(const FusionRing& ring, Mask seed) {
  const auto r = ring.rank();
  Mask current = seed | (Mask{1} << ring.unit());
  for (;;) {
    Mask next = current;
    for (std::size_t x = 0; x < r; ++x) {
      if (!(current >> x & 1)) continue;
      next |= Mask{1} << ring.dual(x);
      for (std::size_t y = 0; y < r; ++y) {
        if (!(current >> y & 1)) continue;
        for (std::size_t z = 0; z < r; ++z)
          if (ring.n(x, y, z) > 0) next |= Mask{1} << z;
      }
    }
    if (next == current) return current;
    current = next;
  }
}

Mask to_mask(std::span<const std::size_t> indices, std::size_t rank) {
  Mask m = 0;
  for (auto i : indices) {
    if (i >= rank) throw InvalidInput("closed subset: index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

ClosedSubset from_mask(Mask m, std::size_t rank) {
  ClosedSubset s;
  for (std::size_t i = 0; i < rank; ++i)
    if (m >> i & 1) s.indices.push_back(i);
  return s;
}

std::vector<std::string> subset_labels(const FusionRing& ring, const ClosedSubset& s) {
  std::vector<std::string> out;
  for (auto i : s.indices) out.push_back(ring.label(i));
  return out;
}

}  // namespace

ClosedSubset closure(const FusionRing& ring, std::span<const std::size_t> seed) {
  return from_mask(closure_mask(ring, to_mask(seed, ring.rank())), ring.rank());
}

bool is_closed(const FusionRing& ring, std::span<const std::size_t> indices) {
  auto m = to_mask(indices, ring.rank());
  return (m >> ring.unit() & 1) && closure_mask(ring, m) == m;
}

std::vector<ClosedSubset> closed_subsets(const FusionRing& ring,
                                         const Limits& limits) {
  const auto r = ring.rank();
  if (r > limits.max_rank) {
    throw BoundExceeded("closed_subsets: rank " + std::to_string(r) + " exceeds " +
                        std::to_string(limits.max_rank));
  }
  std::set<Mask> found{closure_mask(ring, 0)};
  std::vector<Mask> queue(found.begin(), found.end());
  while (!queue.empty()) {
    Mask s = queue.back();
    queue.pop_back();
    for (std::size_t x = 0; x < r; ++x) {
      if (s >> x & 1) continue;
      Mask t = closure_mask(ring, s | (Mask{1} << x));
      if (found.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<ClosedSubset> out;
  for (auto m : found) out.push_back(from_mask(m, r));
  std::sort(out.begin(), out.end(), [&](const ClosedSubset& a, const ClosedSubset& b) {
    if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
    return subset_labels(ring, a) < subset_labels(ring, b);
  });
  return out;
}

bool is_ring_automorphism(const FusionRing& ring, std::span<const std::size_t> perm) {
  const auto r = ring.rank();
  if (perm.size() != r) return false;
  std::vector<bool> hit(r, false);
  for (auto p : perm) {
    if (p >= r || hit[p]) return false;
    hit[p] = true;
  }
  if (perm[ring.unit()] != ring.unit()) return false;
  for (std::size_t x = 0; x < r; ++x)
    if (perm[ring.dual(x)] != ring.dual(perm[x])) return false;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z)
        if (ring.n(perm[x], perm[y], perm[z]) != ring.n(x, y, z)) return false;
  return true;
}

std::vector<RingAut> ring_automorphisms_brute_force(const FusionRing& ring) {
  std::vector<std::size_t> perm(ring.rank());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<RingAut> out;
  do {
    if (is_ring_automorphism(ring, perm)) out.push_back({perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

// Invariant data that any automorphism must preserve.
struct Signature {
  long long scaled_dim;
  bool self_dual;
  std::vector<int> row_multiset;
  int self_coefficient;

  friend bool operator==(const Signature&, const Signature&) = default;
};

class RingAutSearch {
 public:
  explicit RingAutSearch(const FusionRing& ring) : ring_(ring), r_(ring.rank()) {
    auto dims = fp_dims(ring_);
    std::vector<Signature> sig;
    for (std::size_t x = 0; x < r_; ++x) {
      std::vector<int> row;
      for (std::size_t y = 0; y < r_; ++y)
        for (std::size_t z = 0; z < r_; ++z)
          if (auto v = ring_.n(x, y, z)) row.push_back(v);
      std::sort(row.begin(), row.end());
      sig.push_back({std::llround(dims[x] * 1e6), ring_.dual(x) == x, std::move(row),
                     ring_.n(x, x, x)});
    }
    std::vector<Mask> domains(r_, 0);
    for (std::size_t x = 0; x < r_; ++x)
      for (std::size_t y = 0; y < r_; ++y)
        if (sig[x] == sig[y] && (x == ring_.unit()) == (y == ring_.unit()))
          domains[x] |= Mask{1} << y;
    image_.assign(r_, kUnset);
    domains_ = std::move(domains);
  }

  std::vector<RingAut> run() {
    recurse(domains_);
    std::sort(results_.begin(), results_.end());
    return results_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool triple_ok(std::size_t a, std::size_t b, std::size_t c) const {
    return ring_.n(image_[a], image_[b], image_[c]) == ring_.n(a, b, c);
  }

  // All triples containing both x and v, with x, v assigned and the third
  // element ranging over assigned indices.
  bool pair_consistent(std::size_t x, std::size_t v) const {
    for (std::size_t a = 0; a < r_; ++a) {
      if (image_[a] == kUnset) continue;
      if (!triple_ok(x, v, a) || !triple_ok(v, x, a) || !triple_ok(x, a, v) ||
          !triple_ok(v, a, x) || !triple_ok(a, x, v) || !triple_ok(a, v, x))
        return false;
    }
    return true;
  }

  bool assign(std::size_t x, std::size_t y, std::vector<Mask>& domains) {
    image_[x] = y;
    used_ |= Mask{1} << y;
    domains[x] = Mask{1} << y;
    // unary and binary constraints involving x alone
    if (!triple_ok(x, x, x) || !pair_consistent(x, x)) return false;
    auto dx = ring_.dual(x);
    if (image_[dx] != kUnset) {
      if (image_[dx] != ring_.dual(y)) return false;
    } else {
      domains[dx] &= Mask{1} << ring_.dual(y);
    }
    for (std::size_t v = 0; v < r_; ++v) {
      if (image_[v] != kUnset) continue;
      Mask keep = 0;
      for (std::size_t w = 0; w < r_; ++w) {
        if (!(domains[v] >> w & 1) || (used_ >> w & 1)) continue;
        image_[v] = w;
        if (pair_consistent(x, v)) keep |= Mask{1} << w;
        image_[v] = kUnset;
      }
      domains[v] = keep;
      if (keep == 0) return false;
    }
    return true;
  }

  void unassign(std::size_t x) {
    used_ &= ~(Mask{1} << image_[x]);
    image_[x] = kUnset;
  }

  void recurse(const std::vector<Mask>& domains) {
    std::size_t pick = kUnset;
    int best = 65;
    for (std::size_t v = 0; v < r_; ++v) {
      if (image_[v] != kUnset) continue;
      int size = std::popcount(domains[v]);
      if (size < best) {
        best = size;
        pick = v;
      }
    }
    if (pick == kUnset) {
      if (is_ring_automorphism(ring_, image_)) results_.push_back({image_});
      return;
    }
    for (std::size_t y = 0; y < r_; ++y) {
      if (!(domains[pick] >> y & 1) || (used_ >> y & 1)) continue;
      auto next = domains;
      if (assign(pick, y, next)) recurse(next);
      unassign(pick);
    }
  }

  const FusionRing& ring_;
  std::size_t r_;
  std::vector<Mask> domains_;
  std::vector<std::size_t> image_;
  Mask used_ = 0;
  std::vector<RingAut> results_;
};

void check_rank(const FusionRing& ring, const Limits& limits, const char* op) {
  if (ring.rank() > limits.max_rank) {
    throw BoundExceeded(std::string(op) + ": rank " + std::to_string(ring.rank()) +
                        " exceeds " + std::to_string(limits.max_rank));
  }
}

}  // namespace

std::vector<RingAut> ring_automorphisms_backtrack(const FusionRing& ring,
                                                  const Limits& limits) {
  check_rank(ring, limits, "ring_automorphisms");
  return RingAutSearch(ring).run();
}

std::vector<RingAut> ring_automorphisms(const FusionRing& ring, const Limits& limits) {
  check_rank(ring, limits, "ring_automorphisms");
  if (ring.rank() <= limits.brute_force_rank) return ring_automorphisms_brute_force(ring);
  return ring_automorphisms_backtrack(ring, limits);
}

std::vector<RingAut> pointwise_stabilizer(const FusionRing& ring,
                                          const ClosedSubset& subset,
                                          const Limits& limits) {
  if (!is_closed(ring, subset.indices)) {
    throw InvalidInput("pointwise_stabilizer: subset is not closed");
  }
  std::vector<RingAut> out;
  for (auto& aut : ring_automorphisms(ring, limits)) {
    bool fixes = std::all_of(subset.indices.begin(), subset.indices.end(),
                             [&](std::size_t i) { return aut(i) == i; });
    if (fixes) out.push_back(std::move(aut));
  }
  return out;
}

}  // namespace fusionkit
