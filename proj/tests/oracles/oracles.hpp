#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the code under test except for plain data types.

#include <cstdint>
#include <optional>
#include <vector>

#include "qo/lp.hpp"
#include "qo/order.hpp"
#include "qo/random.hpp"
#include "qo/sound_design.hpp"

namespace qo::oracle {

/// Number of transposition orbits on subsets of Z_edo, by listing every
/// subset's rotations and keeping the distinct minimal ones.
std::uint64_t brute_force_orbit_count(int edo);

/// Set-class representatives (ascending member lists) reached by brute force,
/// each orbit given by its lexicographically least rotation.
std::vector<std::vector<int>> brute_force_classes(int edo);

/// (1/N) sum_{s=0}^{N-1} 2^{gcd(s, N)}: fixed points of each rotation.
std::uint64_t burnside_by_rotations(int edo);

/// Minimal classes of SC_k by brute force on bitmasks: nonempty classes with
/// every cyclic gap <= k, keeping those that contain no rotation of another.
/// Each class is its lexicographically least ascending member list.
std::vector<std::vector<int>> brute_force_sck_minimal(int edo, int k);

/// max over subsets S of |sum_{i in S} (x_i - y_i)|, by enumerating 2^n subsets.
double tv_max_subset(const std::vector<double>& x, const std::vector<double>& y);

/// Exhaustive search over grid points k / m of the simplex, m = 1/resolution,
/// keeping those with Hx <= Hb. n <= 4, resolution in {0.01, 0.02, 0.05}.
DesignSolution oracle_solve(const DesignProblem& problem, double resolution);

/// Best vertex of {v >= 0, ineq, eq} by solving every square subsystem of
/// active constraints. Small LPs only (num_variables <= 6).
std::optional<double> vertex_enumeration(const LpStandardForm& lp);

/// y = H a for a 2x2 H, written out by hand.
std::vector<double> mat2_mul(const double h[2][2], const std::vector<double>& a);

/// Random group generated by up to two random permutations.
GroupAction random_group(std::size_t size, Sampler& rng);

/// Random partial order: a random DAG over a random linear extension, closed
/// reflexively and transitively.
FiniteRelation random_poset(std::size_t size, Sampler& rng);

/// Random partial order invariant under `action` (the action is increasing on
/// it). Built from random pairs closed under the group; returns nullopt when
/// the closure is not antisymmetric.
std::optional<FiniteRelation> random_invariant_poset(const GroupAction& action, Sampler& rng);

}  // namespace qo::oracle
