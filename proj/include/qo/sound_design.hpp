#pragma once

// Sound design as constrained l1 minimisation over timbral vectors:
//
//   ClosestToTarget:  minimise ||x - p||_1               s.t. Hx <= Hb, x in S
//   BiObjective:      minimise ||x - p||_1 + ||x - b||_1  s.t. Hx <= Hb, x in S
//
// where S is the probability simplex and H the brightness matrix, so the
// constraint reads "x is no brighter than b".

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qo/lp.hpp"
#include "qo/timbre.hpp"

namespace qo {

enum class DesignVariant { ClosestToTarget, BiObjective };

std::string_view to_string(DesignVariant v) noexcept;

struct DesignProblem {
  DesignProblem(TimbralVector target, TimbralVector bound, DesignVariant variant = DesignVariant::ClosestToTarget);

  TimbralVector target;  // p
  TimbralVector bound;   // b
  DesignVariant variant;

  std::size_t size() const noexcept { return target.size(); }
};

enum class SolverStatus { Optimal, Infeasible, NumericalFailure };

std::string_view to_string(SolverStatus s) noexcept;

struct DesignSolution {
  std::vector<double> x;  // empty unless Optimal
  double objective = 0.0; // raw l1 units
  SolverStatus status = SolverStatus::NumericalFailure;

  double tv_distance() const noexcept { return 0.5 * objective; }
};

/// Variables are laid out as [x (n) | u (n)] for ClosestToTarget and
/// [x | u | w] for BiObjective, with u >= |x - p| and w >= |x - b| encoded as
/// two inequality rows each. The n brightness rows follow, then the single
/// equality row sum(x) = 1.
LpStandardForm to_lp(const DesignProblem& problem);

/// ||x - p||_1, plus ||x - b||_1 for BiObjective.
double design_objective(const DesignProblem& problem, std::span<const double> x);

/// Largest violation of Hx <= Hb, sum(x) = 1 and x >= 0.
double feasibility_residual(const DesignProblem& problem, std::span<const double> x);

DesignSolution solve_design(const DesignProblem& problem, const LpOptions& options = {});

/// Slack on the stage-one optimum when it becomes a constraint in stage two.
inline constexpr double kStageSlack = 1e-9;

/// Among the optima of the ClosestToTarget problem, the one closest to the
/// bound in l1: stage one finds v* = min ||x - p||_1, stage two minimises
/// ||x - b||_1 subject to ||x - p||_1 <= v* + kStageSlack. Stage two can
/// still tie, so a third stage keeps both optima (each within kStageSlack)
/// and minimises sum_k k |x_k - p_k|, which moves any remaining freedom onto
/// the lowest harmonics. The reported objective is ||x - p||_1.
DesignSolution solve_closest_to_bound(const DesignProblem& problem, const LpOptions& options = {});

/// x is no brighter than the target (Less or Equal at `tol`).
bool claim_check_x_leq_p(const DesignProblem& problem, const DesignSolution& solution, double tol = 1e-6);

struct CounterexampleReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t trials_run = 0;
  double threshold = 0.0;
  bool found = false;
  // Filled when found.
  std::size_t trial = 0;  // 0-based index of the successful draw
  std::vector<double> target;
  std::vector<double> bound;
  std::vector<double> infimum;
  double infimum_objective = 0.0;
  double lp_objective = 0.0;
  // Largest gap seen over all trials, reported either way.
  double max_gap = 0.0;
};

inline constexpr double kCounterexampleThreshold = 1e-4;

/// Draws (p, b) uniformly from the simplex and stops at the first pair where
/// ||(b ∧ p) - p||_1 exceeds the ClosestToTarget optimum by more than
/// `threshold`.
CounterexampleReport counterexample_search(std::size_t n, std::size_t trials, std::uint64_t seed,
                                           double threshold = kCounterexampleThreshold);

}  // namespace qo
