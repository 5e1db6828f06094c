#pragma once

// Dense two-phase primal simplex for small linear programs:
//
//   minimize    objective · v
//   subject to  ineq · v <= ineq_rhs
//               eq · v    = eq_rhs
//               v >= 0
//
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// leaving variable among ratio ties), so degenerate problems terminate.

#include <cstddef>
#include <string_view>
#include <vector>

namespace qo {

using LpRow = std::vector<double>;

struct LpStandardForm {
  std::vector<double> objective;
  std::vector<LpRow> ineq;
  std::vector<double> ineq_rhs;
  std::vector<LpRow> eq;
  std::vector<double> eq_rhs;

  std::size_t num_variables() const noexcept { return objective.size(); }

  /// Throws InvalidArgument on inconsistent dimensions or non-finite data.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

std::string_view to_string(LpStatus s) noexcept;

struct LpOptions {
  double pivot_tolerance = 1e-9;       // smallest usable pivot / reduced cost
  double feasibility_tolerance = 1e-9; // phase-1 optimum treated as zero
  std::size_t max_iterations = 200000;
};

struct LpResult {
  LpStatus status = LpStatus::NumericalFailure;
  std::vector<double> values;  // empty unless Optimal
  double cost = 0.0;
  std::size_t iterations = 0;
};

LpResult lp_solve(const LpStandardForm& lp, const LpOptions& options = {});

}  // namespace qo
