#include "qo/timbre.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <Eigen/LU>

#include "qo/error.hpp"

namespace qo {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b)
    throw InvalidArgument("timbral vectors have different harmonic counts (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
}

bool equal_within(std::span<const double> a, std::span<const double> b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

Comparison compare_profiles(std::span<const double> pa, std::span<const double> pb, double tol) {
  bool leq = true;
  bool geq = true;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    leq = leq && pa[i] <= pb[i] + tol;
    geq = geq && pb[i] <= pa[i] + tol;
  }
  if (leq) return Comparison::Less;
  if (geq) return Comparison::Greater;
  return Comparison::Incomparable;
}

}  // namespace

TimbralVector::TimbralVector(std::vector<double> power, std::string name)
    : power_(std::move(power)), name_(std::move(name)) {
  if (power_.empty()) throw InvalidArgument("timbral vector needs at least one harmonic");
  double sum = 0.0;
  for (std::size_t k = 0; k < power_.size(); ++k) {
    if (!std::isfinite(power_[k]) || power_[k] < 0.0)
      throw InvalidArgument("harmonic " + std::to_string(k + 1) + " has invalid power " +
                            std::to_string(power_[k]));
    sum += power_[k];
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance)
    throw InvalidArgument("timbral vector powers sum to " + std::to_string(sum) + ", not 1");
}

std::vector<double> suffix_profile(const TimbralVector& a) {
  const auto p = a.power();
  const std::size_t n = p.size();
  std::vector<double> cum(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += p[n - 1 - i];
    cum[i] = acc;
  }
  return cum;
}

TimbralVector from_suffix_profile(std::span<const double> cum, std::string name) {
  const std::size_t n = cum.size();
  std::vector<double> power(n);
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    power[n - 1 - i] = cum[i] - prev;
    prev = cum[i];
  }
  return TimbralVector(std::move(power), std::move(name));
}

BrightnessVerdict brightness_compare(const TimbralVector& a, const TimbralVector& b, double tol) {
  require_same_size(a.size(), b.size());
  if (equal_within(a.power(), b.power(), tol)) return Comparison::Equal;
  return compare_profiles(suffix_profile(a), suffix_profile(b), tol);
}

TimbralVector infimum(const TimbralVector& x, const TimbralVector& y) {
  require_same_size(x.size(), y.size());
  auto cx = suffix_profile(x);
  const auto cy = suffix_profile(y);
  // Minimum of two nondecreasing profiles is nondecreasing, so the
  // differences below are nonnegative in floating point too.
  for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = std::min(cx[i], cy[i]);
  return from_suffix_profile(cx);
}

double tv_distance(const TimbralVector& x, const TimbralVector& y) {
  require_same_size(x.size(), y.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
  return 0.5 * s;
}

Eigen::MatrixXd brightness_matrix(std::size_t n) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = n - i + 1; j <= n; ++j)
      h(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = 1.0;
  return h;
}

BrightnessVerdict h_compare(const Eigen::MatrixXd& h, const TimbralVector& a, const TimbralVector& b,
                            double tol) {
  require_same_size(a.size(), b.size());
  const auto n = static_cast<Eigen::Index>(a.size());
  if (h.rows() != n || h.cols() != n)
    throw InvalidArgument("H must be " + std::to_string(n) + "x" + std::to_string(n));
  if ((h.array() < 0.0).any()) throw InvalidArgument("H must be nonnegative");
  if (std::abs(h.fullPivLu().determinant()) <= 1e-12) throw InvalidArgument("H must be nonsingular");

  if (equal_within(a.power(), b.power(), tol)) return Comparison::Equal;
  const Eigen::Map<const Eigen::VectorXd> va(a.power().data(), n);
  const Eigen::Map<const Eigen::VectorXd> vb(b.power().data(), n);
  const Eigen::VectorXd ha = h * va;
  const Eigen::VectorXd hb = h * vb;
  return compare_profiles(std::span<const double>(ha.data(), a.size()),
                          std::span<const double>(hb.data(), b.size()), tol);
}

BrightnessHasse brightness_hasse(std::span<const TimbralVector> collection, double tol) {
  BrightnessHasse out;
  std::set<std::string> seen;
  for (const auto& v : collection) {
    if (!seen.insert(v.name()).second) throw InvalidArgument("duplicate instrument name '" + v.name() + "'");
    out.names.push_back(v.name());
    if (v.size() != collection.front().size()) require_same_size(collection.front().size(), v.size());
  }

  const std::size_t m = collection.size();
  out.order = FiniteRelation::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      switch (brightness_compare(collection[i], collection[j], tol)) {
        case Comparison::Less:
          out.order.set(i, j);
          break;
        case Comparison::Greater:
          out.order.set(j, i);
          break;
        case Comparison::Equal:
          out.near_equal.emplace_back(i, j);
          break;
        case Comparison::Incomparable:
          break;
      }
    }
  }
  out.order.set_labels(out.names);
  out.covers = transitive_reduction(out.order);
  out.maximal = maximal_elements(out.order);
  out.minimal = minimal_elements(out.order);
  return out;
}

}  // namespace qo
