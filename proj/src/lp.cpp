#include "qo/lp.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "qo/error.hpp"

namespace qo {

std::string_view to_string(LpStatus s) noexcept {
  switch (s) {
    case LpStatus::Optimal:
      return "Optimal";
    case LpStatus::Infeasible:
      return "Infeasible";
    case LpStatus::Unbounded:
      return "Unbounded";
    case LpStatus::NumericalFailure:
      return "NumericalFailure";
  }
  return "?";
}

void LpStandardForm::validate() const {
  const std::size_t n = num_variables();
  if (n == 0) throw InvalidArgument("LP has no variables");
  auto finite = [](double x) { return std::isfinite(x); };
  for (double c : objective)
    if (!finite(c)) throw InvalidArgument("LP objective has a non-finite coefficient");
  auto check_rows = [&](const std::vector<LpRow>& rows, const std::vector<double>& rhs, const char* what) {
    if (rows.size() != rhs.size())
      throw InvalidArgument(std::string(what) + " rows and right-hand side differ in length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != n)
        throw InvalidArgument(std::string(what) + " row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " coefficients, expected " + std::to_string(n));
      for (double a : rows[i])
        if (!finite(a)) throw InvalidArgument(std::string(what) + " row has a non-finite coefficient");
      if (!finite(rhs[i])) throw InvalidArgument(std::string(what) + " right-hand side is not finite");
    }
  };
  check_rows(ineq, ineq_rhs, "inequality");
  check_rows(eq, eq_rhs, "equality");
}

namespace {

// Tableau with an explicit basis. Column `width_ - 1` holds the right-hand
// side; `obj_` holds reduced costs with -(objective value) in the last slot.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, std::vector<double>(cols + 1, 0.0)), basis_(rows, 0) {}

  std::vector<double>& row(std::size_t r) { return rows_[r]; }
  std::size_t row_count() const { return rows_.size(); }
  double& rhs(std::size_t r) { return rows_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  void set_costs(const std::vector<double>& cost) {
    obj_.assign(cols_ + 1, 0.0);
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * rows_[r][j];
    }
  }

  double objective_value() const { return -obj_[cols_]; }

  void pivot(std::size_t pr, std::size_t pc) {
    auto& prow = rows_[pr];
    const double inv = 1.0 / prow[pc];
    for (double& x : prow) x *= inv;
    prow[pc] = 1.0;
    auto eliminate = [&](std::vector<double>& target) {
      const double f = target[pc];
      if (f == 0.0) return;
      for (std::size_t j = 0; j <= cols_; ++j) target[j] -= f * prow[j];
      target[pc] = 0.0;
    };
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (r != pr) eliminate(rows_[r]);
    eliminate(obj_);
    basis_[pr] = pc;
  }

  // Runs Bland-rule iterations over columns [0, allowed). Returns the status
  // reached; Optimal means no improving column remains.
  LpStatus optimize(std::size_t allowed, const LpOptions& opt, std::size_t& iterations) {
    while (true) {
      if (iterations >= opt.max_iterations) return LpStatus::NumericalFailure;
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj_[j] < -opt.pivot_tolerance) {
          entering = j;
          break;
        }
      }
      if (!entering) return LpStatus::Optimal;

      const std::size_t pc = *entering;
      std::optional<std::size_t> leaving;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const double a = rows_[r][pc];
        if (a <= opt.pivot_tolerance) continue;
        const double ratio = std::max(0.0, rows_[r][cols_]) / a;
        if (!leaving || ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = ratio;
        }
      }
      if (!leaving) return LpStatus::Unbounded;
      pivot(*leaving, pc);
      ++iterations;
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<double> obj_;
};

}  // namespace

LpResult lp_solve(const LpStandardForm& lp, const LpOptions& options) {
  lp.validate();
  const std::size_t nv = lp.num_variables();
  const std::size_t ns = lp.ineq.size();
  const std::size_t ne = lp.eq.size();

  std::size_t artificials = ne;
  for (double u : lp.ineq_rhs)
    if (u < 0.0) ++artificials;

  const std::size_t structural = nv + ns;  // originals + slacks
  const std::size_t cols = structural + artificials;
  Tableau t(ns + ne, cols);

  std::size_t next_art = structural;
  for (std::size_t i = 0; i < ns; ++i) {
    auto& row = t.row(i);
    const double sign = lp.ineq_rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) row[j] = sign * lp.ineq[i][j];
    row[nv + i] = sign;
    t.rhs(i) = sign * lp.ineq_rhs[i];
    if (sign > 0.0) {
      t.basis(i) = nv + i;
    } else {
      row[next_art] = 1.0;
      t.basis(i) = next_art++;
    }
  }
  for (std::size_t i = 0; i < ne; ++i) {
    auto& row = t.row(ns + i);
    const double sign = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nv; ++j) row[j] = sign * lp.eq[i][j];
    t.rhs(ns + i) = sign * lp.eq_rhs[i];
    row[next_art] = 1.0;
    t.basis(ns + i) = next_art++;
  }

  LpResult result;

  // Phase 1: minimise the sum of artificials.
  if (artificials > 0) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t j = structural; j < cols; ++j) phase1[j] = 1.0;
    t.set_costs(phase1);
    const LpStatus s = t.optimize(cols, options, result.iterations);
    if (s != LpStatus::Optimal) {
      result.status = LpStatus::NumericalFailure;
      return result;
    }
    double scale = 1.0;
    for (double u : lp.ineq_rhs) scale = std::max(scale, std::abs(u));
    for (double d : lp.eq_rhs) scale = std::max(scale, std::abs(d));
    if (t.objective_value() > options.feasibility_tolerance * scale) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Pivot remaining (zero-level) artificials out of the basis; rows where
    // that is impossible are redundant.
    for (std::size_t r = 0; r < t.row_count();) {
      if (t.basis(r) < structural) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < structural; ++j) {
        if (std::abs(t.row(r)[j]) > options.pivot_tolerance) {
          col = j;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
  }

  // Phase 2 on the structural columns only.
  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  t.set_costs(cost);
  const LpStatus s = t.optimize(structural, options, result.iterations);
  if (s != LpStatus::Optimal) {
    result.status = s;
    return result;
  }

  result.values.assign(nv, 0.0);
  for (std::size_t r = 0; r < t.row_count(); ++r)
    if (t.basis(r) < nv) result.values[t.basis(r)] = std::max(0.0, t.rhs(r));
  result.cost = 0.0;
  for (std::size_t j = 0; j < nv; ++j) result.cost += lp.objective[j] * result.values[j];
  result.status = LpStatus::Optimal;
  return result;
}

}  // namespace qo
