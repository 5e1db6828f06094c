#pragma once

// Timbral vectors (harmonic power proportions) and the brighter-than order.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qo/order.hpp"

namespace qo {

/// Tolerance on sum(power) == 1 when validating a timbral vector.
inline constexpr double kSimplexTolerance = 1e-9;
/// Default absolute slack for order comparisons.
inline constexpr double kOrderTolerance = 1e-9;

/// A probability vector over harmonics 1..n (index 0 is the fundamental).
class TimbralVector {
 public:
  explicit TimbralVector(std::vector<double> power, std::string name = {});

  std::size_t size() const noexcept { return power_.size(); }
  std::span<const double> power() const noexcept { return power_; }
  double operator[](std::size_t k) const { return power_.at(k); }
  const std::string& name() const noexcept { return name_; }

  TimbralVector renamed(std::string name) const { return TimbralVector(power_, std::move(name)); }

 private:
  std::vector<double> power_;
  std::string name_;
};

using BrightnessVerdict = Comparison;

/// cum[i-1] = power in the top i harmonics, i = 1..n. Equals H·a for the
/// brightness matrix H.
std::vector<double> suffix_profile(const TimbralVector& a);

/// Inverse of suffix_profile for a nondecreasing profile ending at 1.
TimbralVector from_suffix_profile(std::span<const double> cum, std::string name = {});

/// b is brighter than a (a Less b) iff every suffix sum of a is at most the
/// matching suffix sum of b. Equal is decided first, component-wise on power.
BrightnessVerdict brightness_compare(const TimbralVector& a, const TimbralVector& b,
                                     double tol = kOrderTolerance);

/// Greatest lower bound in the brightness lattice: the vector whose suffix
/// profile is the component-wise minimum of the two profiles.
TimbralVector infimum(const TimbralVector& x, const TimbralVector& y);

/// Total variational distance, 0.5 * ||x - y||_1.
double tv_distance(const TimbralVector& x, const TimbralVector& y);

/// n-by-n matrix with H(i, j) = 1 iff n-i+1 <= j <= n (1-based).
Eigen::MatrixXd brightness_matrix(std::size_t n);

/// Order a <= b iff H·a <= H·b component-wise, for a nonnegative nonsingular
/// H. Equal is decided on the vectors themselves.
BrightnessVerdict h_compare(const Eigen::MatrixXd& h, const TimbralVector& a, const TimbralVector& b,
                            double tol = kOrderTolerance);

/// Brighter-than order over a named collection together with its Hasse
/// diagram. Indices refer to the input order.
struct BrightnessHasse {
  std::vector<std::string> names;
  FiniteRelation order;   // i <= j: j is at least as bright as i
  FiniteRelation covers;  // transitive reduction of `order`
  std::vector<ElementId> maximal;
  std::vector<ElementId> minimal;
  /// Distinct entries that compare Equal within tolerance. They stay separate
  /// nodes and are left unrelated in `order`.
  std::vector<ElementPair> near_equal;
};

BrightnessHasse brightness_hasse(std::span<const TimbralVector> collection, double tol = kOrderTolerance);

}  // namespace qo
