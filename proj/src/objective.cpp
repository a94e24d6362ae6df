#include "bregman/objective.hpp"

#include <cmath>

#include "bregman/generator.hpp"

namespace bregman {

Objective linear_objective(Vec c, const Domain& domain) {
  check_dim(c, domain.dim(), "linear_objective");
  Objective obj;
  obj.name = "linear";
  obj.form = Objective::Form::Linear;
  obj.linear_c = c;
  obj.value = [c](const Vec& x) { return c.dot(x); };
  obj.subgradient = [c](const Vec& x) { (void)x; return c; };
  obj.smooth_gradient = obj.subgradient;
  obj.lipschitz_const = c.norm();
  obj.relsmooth_alpha = kInf;  // h - alpha f stays convex for any alpha
  switch (domain.kind()) {
    case DomainKind::Simplex: {
      const double cmin = c.minCoeff();
      for (int i = 0; i < domain.dim(); ++i) {
        if (c[i] <= cmin + 1e-15) {
          Vec v = Vec::Zero(domain.dim());
          v[i] = 1.0;
          obj.solutions.push_back(std::move(v));
        }
      }
      break;
    }
    case DomainKind::Box: {
      Vec v(domain.dim());
      for (int i = 0; i < domain.dim(); ++i) {
        v[i] = c[i] < 0.0 ? domain.box_hi()[i] : domain.box_lo()[i];
      }
      obj.solutions.push_back(std::move(v));
      break;
    }
    case DomainKind::Ball:
      if (c.norm() > 0.0) {
        obj.solutions.push_back(Vec(-domain.radius() / c.norm() * c));
      }
      break;
    case DomainKind::Polytope:
      break;  // no vertex enumeration; caller may supply S
  }
  return obj;
}

Objective quadratic_objective(Vec center, const Domain& domain) {
  check_dim(center, domain.dim(), "quadratic_objective");
  Objective obj;
  obj.name = "quadratic";
  obj.form = Objective::Form::Quadratic;
  obj.center = center;
  obj.value = [center](const Vec& x) { return 0.5 * (x - center).squaredNorm(); };
  obj.subgradient = [center](const Vec& x) { return Vec(x - center); };
  obj.smooth_gradient = obj.subgradient;
  obj.relsmooth_alpha = 1.0;
  if (domain.kind() != DomainKind::Polytope) {
    obj.solutions.push_back(euclidean_project(domain, center));
  }
  return obj;
}

Objective abs_deviation_objective(Vec center, const Domain& domain) {
  check_dim(center, domain.dim(), "abs_deviation_objective");
  Objective obj;
  obj.name = "abs_deviation";
  obj.form = Objective::Form::AbsDeviation;
  obj.center = center;
  obj.value = [center](const Vec& x) { return (x - center).cwiseAbs().sum(); };
  obj.subgradient = [center](const Vec& x) {
    Vec g(x.size());
    for (int i = 0; i < x.size(); ++i) {
      g[i] = x[i] > center[i] ? 1.0 : (x[i] < center[i] ? -1.0 : 0.0);
    }
    return g;
  };
  obj.lipschitz_const = std::sqrt(static_cast<double>(domain.dim()));
  if (domain.kind() == DomainKind::Box) {
    // Coordinatewise clamp minimizes the separable L1 distance over a box.
    obj.solutions.push_back(euclidean_project(domain, center));
  }
  return obj;
}

Objective constant_objective(const Domain& domain, double value) {
  Objective obj;
  obj.name = "constant";
  obj.form = Objective::Form::Constant;
  const int n = domain.dim();
  obj.value = [value](const Vec&) { return value; };
  obj.subgradient = [n](const Vec&) { return Vec(Vec::Zero(n)); };
  obj.smooth_gradient = obj.subgradient;
  obj.lipschitz_const = 0.0;
  obj.relsmooth_alpha = kInf;
  return obj;
}

}  // namespace bregman
