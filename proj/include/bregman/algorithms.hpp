#ifndef BREGMAN_ALGORITHMS_HPP
#define BREGMAN_ALGORITHMS_HPP

#include <vector>

#include "bregman/divergence.hpp"
#include "bregman/objective.hpp"

namespace bregman {

/// alpha_k = alpha0 / (k+1)^exponent. The default exponent 0.75 keeps the
/// steps summing to infinity with square-summable tails.
struct StepSchedule {
  double alpha0 = 1.0;
  double exponent = 0.75;

  double at(int k) const;
  static StepSchedule constant(double alpha);
  /// alpha0 = 1 / Lipschitz estimate when the objective carries one.
  static StepSchedule default_for(const Objective& obj);
};

struct Trajectory {
  std::vector<Vec> iterates;  // x_0 .. x_K, all interior
  std::vector<double> objectives;
  std::vector<double> step_sizes;  // one per update
  std::vector<Vec> reference_points;
  std::vector<std::vector<double>> divergences_to;  // [ref][step]

  double max_divergence_increase = -kInf;
  double max_prox_residual = 0.0;

  int steps() const { return static_cast<int>(iterates.size()) - 1; }
};

/// x_{k+1} = mirror_inverse(grad h(x_k) - alpha_k v_k), v_k in df(x_k).
Trajectory mirror_descent(const Generator& gen, const Objective& obj,
                          const Vec& x0, const StepSchedule& steps, int K);

/// Fixed-step x_{k+1} = mirror_inverse(grad h(x_k) - alpha grad f(x_k)).
/// Requires a smooth gradient and alpha within the relative-smoothness
/// bound; D_h(y, x_k) must be nonincreasing (slack 1e-10) for every known
/// minimizer y, enforced per step.
Trajectory bregman_gradient(const Generator& gen, const Objective& obj,
                            const Vec& x0, double alpha, int K);

/// x_{k+1} = argmin_{x in C} alpha_k f(x) + D_h(x, x_k), solved to
/// first-order residual 1e-9.
Trajectory proximal_d(const Generator& gen, const Objective& obj, const Vec& x0,
                      const StepSchedule& steps, int K);

/// Cyclic Bregman projections onto half-spaces intersected with C. The
/// witness must lie in the intersection; divergence to it is monitored.
Trajectory alternating_projections(const Generator& gen,
                                   const std::vector<HalfSpace>& sets,
                                   const Vec& x0, int K, const Vec& witness);

struct FejerReport {
  bool fejer = false;
  bool convergence_checked = false;
  bool converged = false;
  std::vector<Vec> cluster_centers;
  double max_cluster_to_solution = 0.0;
  double max_oscillation = 0.0;
  double tail_diameter = 0.0;
};

/// Clusters the trajectory tail (last 10%), checks cluster centers against
/// the solution set and the divergence series for Cauchy tails. When the
/// generator metadata grants conditions (A) and (B) (strict convexity on
/// the closure, polyhedral domain), additionally checks full-sequence
/// convergence via the tail diameter.
FejerReport fejer_diagnose(const Trajectory& traj,
                           const std::vector<Vec>& solutions, double tol,
                           const Generator* gen = nullptr);

}  // namespace bregman

#endif  // BREGMAN_ALGORITHMS_HPP
