#include "qo/sound_design.hpp"

#include <algorithm>
#include <cmath>

#include "qo/error.hpp"
#include "qo/random.hpp"

namespace qo {

std::string_view to_string(DesignVariant v) noexcept {
  return v == DesignVariant::ClosestToTarget ? "ClosestToTarget" : "BiObjective";
}

std::string_view to_string(SolverStatus s) noexcept {
  switch (s) {
    case SolverStatus::Optimal:
      return "Optimal";
    case SolverStatus::Infeasible:
      return "Infeasible";
    case SolverStatus::NumericalFailure:
      return "NumericalFailure";
  }
  return "?";
}

DesignProblem::DesignProblem(TimbralVector target_, TimbralVector bound_, DesignVariant variant_)
    : target(std::move(target_)), bound(std::move(bound_)), variant(variant_) {
  if (target.size() != bound.size())
    throw InvalidArgument("target and bound have different harmonic counts (" + std::to_string(target.size()) +
                          " vs " + std::to_string(bound.size()) + ")");
}

namespace {

// Appends the rows v_x - v_aux <= c and -v_x - v_aux <= -c, i.e. aux >= |x - c|.
void add_abs_rows(LpStandardForm& lp, std::size_t n, std::size_t aux_offset, std::span<const double> c) {
  const std::size_t nv = lp.num_variables();
  for (std::size_t i = 0; i < n; ++i) {
    LpRow row(nv, 0.0);
    row[i] = 1.0;
    row[aux_offset + i] = -1.0;
    lp.ineq.push_back(row);
    lp.ineq_rhs.push_back(c[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    LpRow row(nv, 0.0);
    row[i] = -1.0;
    row[aux_offset + i] = -1.0;
    lp.ineq.push_back(row);
    lp.ineq_rhs.push_back(-c[i]);
  }
}

// Brightness rows (top-i harmonics of x at most those of b) and sum(x) = 1.
void add_timbre_rows(LpStandardForm& lp, const TimbralVector& bound) {
  const std::size_t n = bound.size();
  const std::size_t nv = lp.num_variables();
  const auto cum_b = suffix_profile(bound);
  for (std::size_t i = 1; i <= n; ++i) {
    LpRow row(nv, 0.0);
    for (std::size_t j = n - i; j < n; ++j) row[j] = 1.0;
    lp.ineq.push_back(std::move(row));
    lp.ineq_rhs.push_back(cum_b[i - 1]);
  }
  LpRow sum(nv, 0.0);
  std::fill(sum.begin(), sum.begin() + static_cast<std::ptrdiff_t>(n), 1.0);
  lp.eq.push_back(std::move(sum));
  lp.eq_rhs.push_back(1.0);
}

// Stage-two program: variables [x | u | w], minimise sum(w).
LpStandardForm closest_to_bound_lp(const DesignProblem& problem, double budget) {
  const std::size_t n = problem.size();
  LpStandardForm lp;
  lp.objective.assign(3 * n, 0.0);
  std::fill(lp.objective.begin() + static_cast<std::ptrdiff_t>(2 * n), lp.objective.end(), 1.0);
  add_abs_rows(lp, n, n, problem.target.power());
  add_abs_rows(lp, n, 2 * n, problem.bound.power());
  add_timbre_rows(lp, problem.bound);
  LpRow total(3 * n, 0.0);
  std::fill(total.begin() + static_cast<std::ptrdiff_t>(n), total.begin() + static_cast<std::ptrdiff_t>(2 * n), 1.0);
  lp.ineq.push_back(std::move(total));
  lp.ineq_rhs.push_back(budget);
  return lp;
}

// Stage-three program: stage two with sum(w) capped, minimising
// sum_k (k + 1) u_k so that deviations from the target sit on the lowest
// harmonics the optimum allows.
LpStandardForm tie_break_lp(const DesignProblem& problem, double budget, double bound_budget) {
  const std::size_t n = problem.size();
  LpStandardForm lp = closest_to_bound_lp(problem, budget);
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  for (std::size_t k = 0; k < n; ++k) lp.objective[n + k] = static_cast<double>(k + 1);
  LpRow total(3 * n, 0.0);
  std::fill(total.begin() + static_cast<std::ptrdiff_t>(2 * n), total.end(), 1.0);
  lp.ineq.push_back(std::move(total));
  lp.ineq_rhs.push_back(bound_budget);
  return lp;
}

SolverStatus map_status(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:
      return SolverStatus::Optimal;
    case LpStatus::Infeasible:
      return SolverStatus::Infeasible;
    default:
      return SolverStatus::NumericalFailure;
  }
}

DesignSolution from_lp(const DesignProblem& problem, const LpResult& r) {
  DesignSolution sol;
  sol.status = map_status(r.status);
  if (sol.status != SolverStatus::Optimal) return sol;
  sol.x.assign(r.values.begin(), r.values.begin() + static_cast<std::ptrdiff_t>(problem.size()));
  sol.objective = design_objective(problem, sol.x);
  return sol;
}

}  // namespace

LpStandardForm to_lp(const DesignProblem& problem) {
  const std::size_t n = problem.size();
  const bool bi = problem.variant == DesignVariant::BiObjective;
  LpStandardForm lp;
  lp.objective.assign((bi ? 3 : 2) * n, 1.0);
  std::fill(lp.objective.begin(), lp.objective.begin() + static_cast<std::ptrdiff_t>(n), 0.0);
  add_abs_rows(lp, n, n, problem.target.power());
  if (bi) add_abs_rows(lp, n, 2 * n, problem.bound.power());
  add_timbre_rows(lp, problem.bound);
  return lp;
}

double design_objective(const DesignProblem& problem, std::span<const double> x) {
  if (x.size() != problem.size()) throw InvalidArgument("solution length does not match problem size");
  double cost = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cost += std::abs(x[i] - problem.target[i]);
    if (problem.variant == DesignVariant::BiObjective) cost += std::abs(x[i] - problem.bound[i]);
  }
  return cost;
}

double feasibility_residual(const DesignProblem& problem, std::span<const double> x) {
  if (x.size() != problem.size()) throw InvalidArgument("solution length does not match problem size");
  const std::size_t n = x.size();
  const auto cum_b = suffix_profile(problem.bound);
  double worst = 0.0;
  double tail = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tail += x[n - 1 - i];
    worst = std::max(worst, tail - cum_b[i]);
    worst = std::max(worst, -x[n - 1 - i]);
    total += x[i];
  }
  return std::max(worst, std::abs(total - 1.0));
}

DesignSolution solve_design(const DesignProblem& problem, const LpOptions& options) {
  return from_lp(problem, lp_solve(to_lp(problem), options));
}

DesignSolution solve_closest_to_bound(const DesignProblem& problem, const LpOptions& options) {
  if (problem.variant != DesignVariant::ClosestToTarget)
    throw InvalidArgument("closest-to-bound refinement applies to the ClosestToTarget problem");
  const LpResult first = lp_solve(to_lp(problem), options);
  if (first.status != LpStatus::Optimal) return from_lp(problem, first);
  const double budget = first.cost + kStageSlack;
  const LpResult second = lp_solve(closest_to_bound_lp(problem, budget), options);
  if (second.status != LpStatus::Optimal) return from_lp(problem, second);
  const LpResult third = lp_solve(tie_break_lp(problem, budget, second.cost + kStageSlack), options);
  return from_lp(problem, third.status == LpStatus::Optimal ? third : second);
}

bool claim_check_x_leq_p(const DesignProblem& problem, const DesignSolution& solution, double tol) {
  if (solution.status != SolverStatus::Optimal) return false;
  const auto v = brightness_compare(TimbralVector(solution.x), problem.target, tol);
  return v == Comparison::Less || v == Comparison::Equal;
}

CounterexampleReport counterexample_search(std::size_t n, std::size_t trials, std::uint64_t seed,
                                           double threshold) {
  if (n < 1) throw InvalidArgument("harmonic count must be at least 1");
  if (trials < 1) throw InvalidArgument("trial budget must be at least 1");
  CounterexampleReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  report.threshold = threshold;

  Sampler sampler(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    TimbralVector p = sampler.timbral(n);
    TimbralVector b = sampler.timbral(n);
    ++report.trials_run;
    const DesignProblem problem(p, b);
    const DesignSolution sol = solve_design(problem);
    if (sol.status != SolverStatus::Optimal) continue;
    const TimbralVector meet = infimum(b, p);
    const double meet_cost = design_objective(problem, meet.power());
    const double gap = meet_cost - sol.objective;
    report.max_gap = std::max(report.max_gap, gap);
    if (gap > threshold) {
      report.found = true;
      report.trial = t;
      report.target.assign(p.power().begin(), p.power().end());
      report.bound.assign(b.power().begin(), b.power().end());
      report.infimum.assign(meet.power().begin(), meet.power().end());
      report.infimum_objective = meet_cost;
      report.lp_objective = sol.objective;
      break;
    }
  }
  return report;
}

}  // namespace qo
