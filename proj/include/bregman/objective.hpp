#ifndef BREGMAN_OBJECTIVE_HPP
#define BREGMAN_OBJECTIVE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bregman/domain.hpp"

namespace bregman {

/// Convex objective over C with the handles the algorithms need. The form
/// tag lets the proximal inner solver pick a closed form or a scalar
/// root-finder; General objectives work with mirror/Bregman descent only.
struct Objective {
  enum class Form { General, Constant, Linear, Quadratic, AbsDeviation };

  std::string name;
  Form form = Form::General;

  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> subgradient;
  std::function<Vec(const Vec&)> smooth_gradient;  // empty for nonsmooth f
  std::optional<double> lipschitz_const;
  std::optional<double> relsmooth_alpha;  // alpha with h - alpha f convex

  /// Known minimizers over C, for Fejér diagnostics (exact for the shipped
  /// test objectives).
  std::vector<Vec> solutions;

  Vec linear_c;   // Linear: f = <c, x>
  Vec center;     // Quadratic: f = 0.5 |x - center|^2; AbsDeviation: sum |x_i - c_i|
};

/// f(x) = <c, x>. Solutions are filled for ball/box/simplex domains.
Objective linear_objective(Vec c, const Domain& domain);

/// f(x) = 0.5 |x - center|^2.
Objective quadratic_objective(Vec center, const Domain& domain);

/// f(x) = sum_i |x_i - center_i|, subgradient sign(x - center).
Objective abs_deviation_objective(Vec center, const Domain& domain);

Objective constant_objective(const Domain& domain, double value = 0.0);

}  // namespace bregman

#endif  // BREGMAN_OBJECTIVE_HPP
