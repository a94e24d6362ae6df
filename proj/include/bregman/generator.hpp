#ifndef BREGMAN_GENERATOR_HPP
#define BREGMAN_GENERATOR_HPP

#include <functional>
#include <memory>
#include <string>

#include "bregman/domain.hpp"

namespace bregman {

/// Legendre generator bundle: value h on C, gradient on int C, the inverse
/// gradient map (restriction of grad h*), and metadata the probes consult.
///
/// Immutable after construction; all evaluations are pure.
class Generator {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using MapFn = std::function<Vec(const Vec&)>;

  Generator(Domain domain, std::string name, ValueFn value, MapFn gradient,
            MapFn mirror_inverse, bool strictly_convex_on_closure,
            bool continuous_on_closure, bool legendre_on_domain = true,
            MapFn project_dual = nullptr);

  const Domain& domain() const { return domain_; }
  const std::string& name() const { return name_; }
  bool strictly_convex_on_closure() const { return strictly_convex_on_closure_; }
  bool continuous_on_closure() const { return continuous_on_closure_; }
  /// False for generators that are not essentially smooth on this domain
  /// (half_squared_norm); those are excluded from the theorem probes.
  bool legendre_on_domain() const { return legendre_on_domain_; }

  /// h(x) for x in C.
  double value(const Vec& x) const;

  /// grad h(x) for x in int C.
  Vec gradient(const Vec& x) const;

  /// gradient without the interior predicate, for probes that intentionally
  /// sample within rounding distance of bd C.
  Vec gradient_unchecked(const Vec& x) const { return gradient_fn_(x); }

  /// The point x in int C with gradient(x) = g (modulo the dual gauge).
  /// Closed form when supplied, safeguarded Newton otherwise. The result is
  /// clamped to boundary distance >= kInteriorMargin.
  Vec mirror_inverse(const Vec& g) const;

  /// Canonical representative of a dual vector. Identity except on the
  /// simplex, where gradients are fixed to zero mean along the sum normal.
  Vec project_dual(const Vec& g) const;

  /// One-sided derivative h'(x, d) = lim_{t->0+} (h(x+td) - h(x))/t.
  /// Analytic <grad h(x), d> at interior x; Richardson-extrapolated forward
  /// differences at boundary x. Returns -inf when the quotients diverge
  /// below -1e9.
  double directional_derivative(const Vec& x, const Vec& d) const;

 private:
  Vec newton_mirror_inverse(const Vec& g) const;

  Domain domain_;
  std::string name_;
  ValueFn value_fn_;
  MapFn gradient_fn_;
  MapFn mirror_inverse_fn_;  // may be empty: Newton fallback
  MapFn project_dual_fn_;    // may be empty: identity
  bool strictly_convex_on_closure_;
  bool continuous_on_closure_;
  bool legendre_on_domain_;
};

/// h(x) = sum x_i log x_i on the simplex, with 0 log 0 = 0. Gradients are
/// gauge-fixed to zero mean; the inverse map is the multiplicative
/// normalization.
Generator neg_entropy(int dim);

/// h(x) = sum [x_i log x_i + (1-x_i) log(1-x_i)] on [0,1]^n.
Generator fermi_dirac(int dim);

/// h(x) = -sqrt(1 - |x|^2) on the unit ball.
Generator ball_gen(int dim);

/// h(x) = 0.5 |x|^2 on any of the supported domains. Not essentially smooth
/// on a bounded C (legendre_on_domain = false); its mirror-inverse is the
/// Euclidean projection onto C, so mirror descent with it is projected
/// subgradient. Kept as a regression baseline.
Generator half_squared_norm(Domain domain);

/// Euclidean projection onto ball/box/simplex domains.
Vec euclidean_project(const Domain& d, const Vec& x);

}  // namespace bregman

#endif  // BREGMAN_GENERATOR_HPP
