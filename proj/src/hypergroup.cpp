#include "fusionkit/hypergroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/rational.hpp>

namespace fusionkit {

Hypergroup::Hypergroup(std::vector<std::string> labels,
                       std::vector<std::size_t> involution,
                       std::span<const HypergroupEntry> entries)
    : labels_(std::move(labels)), involution_(std::move(involution)) {
  const auto r = labels_.size();
  if (r == 0) throw InvalidInput("Hypergroup: rank must be positive");
  if (involution_.size() != r) throw InvalidInput("Hypergroup: involution length mismatch");
  for (auto i : involution_)
    if (i >= r) throw InvalidInput("Hypergroup: involution index out of range");
  coeffs_.assign(r * r * r, 0.0);
  for (const auto& e : entries) {
    if (e.i >= r || e.j >= r || e.k >= r) {
      throw InvalidInput("Hypergroup: entry index out of range");
    }
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw InvalidInput("Hypergroup: structure constants must be finite and nonnegative");
    }
    coeffs_[(e.i * r + e.j) * r + e.k] = e.value;
  }
}

std::vector<HypergroupEntry> Hypergroup::entries() const {
  std::vector<HypergroupEntry> out;
  const auto r = rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (double v = c(i, j, k); v != 0.0) out.push_back({i, j, k, v});
  return out;
}

Eigen::VectorXd Hypergroup::product(const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b) const {
  const auto r = static_cast<Eigen::Index>(rank());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (a[i] == 0.0) continue;
    for (Eigen::Index j = 0; j < r; ++j) {
      double w = a[i] * b[j];
      if (w == 0.0) continue;
      for (Eigen::Index k = 0; k < r; ++k) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

Eigen::VectorXd Hypergroup::adjoint(const Eigen::VectorXd& a) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[involution_[i]] += a[i];
  return out;
}

Hypergroup Hypergroup::with_constant(std::size_t i, std::size_t j, std::size_t k,
                                     double value) const {
  if (i >= rank() || j >= rank() || k >= rank()) {
    throw InvalidInput("with_constant: index out of range");
  }
  Hypergroup copy = *this;
  copy.coeffs_[(i * rank() + j) * rank() + k] = value;
  copy.exact_ = false;
  return copy;
}

Hypergroup from_fusion_ring(const FusionRing& ring) {
  const auto r = ring.rank();
  const auto dims = fp_dims(ring);

  // Basis order with the unit moved to the front.
  std::vector<std::size_t> order;
  order.push_back(ring.unit());
  for (std::size_t x = 0; x < r; ++x)
    if (x != ring.unit()) order.push_back(x);
  std::vector<std::size_t> position(r);
  for (std::size_t p = 0; p < r; ++p) position[order[p]] = p;

  bool integral = std::all_of(dims.begin(), dims.end(), [](double d) {
    return std::abs(d - std::round(d)) < 1e-9;
  });

  Hypergroup h;
  for (auto x : order) h.labels_.push_back(ring.label(x));
  for (auto x : order) h.involution_.push_back(position[ring.dual(x)]);
  h.coeffs_.assign(r * r * r, 0.0);
  h.exact_ = integral;
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = 0; y < r; ++y)
      for (std::size_t z = 0; z < r; ++z) {
        int n = ring.n(x, y, z);
        if (n == 0) continue;
        double value;
        if (integral) {
          using Q = boost::rational<long long>;
          Q q(static_cast<long long>(n) * std::llround(dims[z]),
              std::llround(dims[x]) * std::llround(dims[y]));
          value = boost::rational_cast<double>(q);
        } else {
          value = n * dims[z] / (dims[x] * dims[y]);
        }
        h.coeffs_[(position[x] * r + position[y]) * r + position[z]] = value;
      }
  return h;
}

Hypergroup from_group(const PermGroup& group) {
  const auto& el = group.elements();
  std::vector<std::string> labels;
  std::vector<std::size_t> involution;
  std::vector<HypergroupEntry> entries;
  for (std::size_t g = 0; g < el.size(); ++g) {
    labels.push_back(el[g].to_cycle_string());
    involution.push_back(*group.index_of(el[g].inverse()));
    for (std::size_t h = 0; h < el.size(); ++h) {
      entries.push_back({g, h, *group.index_of(el[g] * el[h]), 1.0});
    }
  }
  return Hypergroup(std::move(labels), std::move(involution), entries);
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

HypergroupReport validate_hypergroup(const Hypergroup& h, double tolerance) {
  HypergroupReport report;
  auto& axioms = report.axioms;
  const auto r = h.rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (h.involution(h.involution(i)) != i) {
      axioms.add("involution", {i}, "involution is not of order 2");
    }
  }
  if (h.involution(0) != 0) axioms.add("involution", {0}, "unit is not self-adjoint");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < r; ++k) {
        double v = h.c(i, j, k);
        if (v < -tolerance) axioms.add("nonnegativity", {i, j, k}, num(v));
        sum += v;
      }
      double residual = std::abs(sum - 1.0);
      report.affinity_residual = std::max(report.affinity_residual, residual);
      if (residual > tolerance) {
        axioms.add("affinity", {i, j}, "sum_k c = " + num(sum));
      }
    }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) {
      double expect = j == k ? 1.0 : 0.0;
      if (std::abs(h.c(0, j, k) - expect) > tolerance) {
        axioms.add("left unit", {j, k}, "c(0,j,k) = " + num(h.c(0, j, k)));
      }
      if (std::abs(h.c(j, 0, k) - expect) > tolerance) {
        axioms.add("right unit", {j, k}, "c(j,0,k) = " + num(h.c(j, 0, k)));
      }
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      bool nonzero = h.c(i, j, 0) > tolerance;
      bool adjoint = j == h.involution(i);
      if (nonzero != adjoint) {
        axioms.add("adjunction", {i, j},
                   "c(i,j,0) = " + num(h.c(i, j, 0)) +
                       (adjoint ? " but j is the adjoint of i" : " but j is not the adjoint of i"));
      }
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          double lhs = 0.0, rhs = 0.0;
          for (std::size_t m = 0; m < r; ++m) {
            lhs += h.c(i, j, m) * h.c(m, k, l);
            rhs += h.c(j, k, m) * h.c(i, m, l);
          }
          double residual = std::abs(lhs - rhs);
          report.associativity_residual = std::max(report.associativity_residual, residual);
          if (residual > tolerance) {
            axioms.add("associativity", {i, j, k, l},
                       "(ij)k gives " + num(lhs) + ", i(jk) gives " + num(rhs));
          }
        }
  return report;
}

bool check_morphism(const Eigen::MatrixXd& map, const Hypergroup& from,
                    const Hypergroup& to, double tolerance) {
  const auto n1 = static_cast<Eigen::Index>(from.rank());
  const auto n2 = static_cast<Eigen::Index>(to.rank());
  if (map.rows() != n1 || map.cols() != n2) {
    throw InvalidInput("check_morphism: map must be " + std::to_string(n1) + "x" +
                       std::to_string(n2));
  }
  for (Eigen::Index i = 0; i < n1; ++i) {
    if ((map.row(i).array() < -tolerance).any() ||
        std::abs(map.row(i).sum() - 1.0) > tolerance) {
      throw InvalidInput("check_morphism: row " + std::to_string(i) +
                         " is not a convex combination");
    }
  }
  auto image = [&](Eigen::Index i) -> Eigen::VectorXd { return map.row(i).transpose(); };
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(n2);
  unit[0] = 1.0;
  if ((image(0) - unit).lpNorm<Eigen::Infinity>() > tolerance) return false;
  for (Eigen::Index i = 0; i < n1; ++i) {
    auto bar = static_cast<Eigen::Index>(from.involution(i));
    if ((image(bar) - to.adjoint(image(i))).lpNorm<Eigen::Infinity>() > tolerance) {
      return false;
    }
  }
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = 0; j < n1; ++j) {
      Eigen::VectorXd lhs = Eigen::VectorXd::Zero(n2);
      for (Eigen::Index k = 0; k < n1; ++k) lhs += from.c(i, j, k) * image(k);
      Eigen::VectorXd rhs = to.product(image(i), image(j));
      if ((lhs - rhs).lpNorm<Eigen::Infinity>() > tolerance) return false;
    }
  return true;
}

Eigen::MatrixXd permutation_map(std::span<const std::size_t> perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Eigen::MatrixXd map = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) map(i, static_cast<Eigen::Index>(perm[i])) = 1.0;
  return map;
}

bool approx_equal(const Hypergroup& a, const Hypergroup& b, double tolerance) {
  if (a.rank() != b.rank() || a.involutions() != b.involutions()) return false;
  const auto r = a.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (std::abs(a.c(i, j, k) - b.c(i, j, k)) > tolerance) return false;
  return true;
}

}  // namespace fusionkit
