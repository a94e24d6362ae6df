#include "bregman/generator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace bregman {

namespace {

double xlogx(double x) {
  if (x < 0.0) x = 0.0;
  return x == 0.0 ? 0.0 : x * std::log(x);
}

Vec centered(Vec g) {
  g.array() -= g.mean();
  return g;
}

}  // namespace

Generator::Generator(Domain domain, std::string name, ValueFn value,
                     MapFn gradient, MapFn mirror_inverse,
                     bool strictly_convex_on_closure, bool continuous_on_closure,
                     bool legendre_on_domain, MapFn project_dual)
    : domain_(std::move(domain)),
      name_(std::move(name)),
      value_fn_(std::move(value)),
      gradient_fn_(std::move(gradient)),
      mirror_inverse_fn_(std::move(mirror_inverse)),
      project_dual_fn_(std::move(project_dual)),
      strictly_convex_on_closure_(strictly_convex_on_closure),
      continuous_on_closure_(continuous_on_closure),
      legendre_on_domain_(legendre_on_domain) {}

double Generator::value(const Vec& x) const {
  if (!domain_.contains(x)) throw MembershipError(name_ + ": value: x not in C");
  return value_fn_(x);
}

Vec Generator::gradient(const Vec& x) const {
  if (!domain_.is_interior(x)) {
    throw MembershipError(name_ + ": gradient: x not in int C");
  }
  return gradient_fn_(x);
}

Vec Generator::project_dual(const Vec& g) const {
  return project_dual_fn_ ? project_dual_fn_(g) : g;
}

Vec Generator::mirror_inverse(const Vec& g) const {
  check_dim(g, domain_.dim(), name_ + ": mirror_inverse");
  if (!g.allFinite()) {
    throw std::invalid_argument(name_ + ": mirror_inverse: non-finite dual");
  }
  Vec x = mirror_inverse_fn_ ? mirror_inverse_fn_(g) : newton_mirror_inverse(g);
  return domain_.clamp_interior(std::move(x));
}

Vec Generator::newton_mirror_inverse(const Vec& g) const {
  const Vec target = project_dual(g);
  const int n = domain_.dim();
  const bool simplex = domain_.kind() == DomainKind::Simplex;
  Vec x = domain_.interior_witness();
  Vec residual = project_dual(gradient_fn_(x)) - target;
  for (int it = 0; it < 100; ++it) {
    if (residual.norm() <= 1e-10) return x;
    // Finite-difference Jacobian of the gradient map.
    Eigen::MatrixXd jac(n, n);
    const double dist = domain_.boundary_distance(x);
    for (int i = 0; i < n; ++i) {
      const double step = std::min(1e-7 * (1.0 + std::abs(x[i])), 0.25 * dist);
      Vec xp = x, xm = x;
      xp[i] += step;
      xm[i] -= step;
      jac.col(i) = (gradient_fn_(xp) - gradient_fn_(xm)) / (2.0 * step);
    }
    Vec delta = jac.fullPivLu().solve(-residual);
    if (simplex) delta = centered(delta);
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      const Vec cand = x + t * delta;
      if (domain_.is_interior(cand)) {
        const Vec r_cand = project_dual(gradient_fn_(cand)) - target;
        if (r_cand.norm() < residual.norm() || halving == 59) {
          x = cand;
          residual = r_cand;
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  if (residual.norm() > 1e-10) {
    throw std::runtime_error(name_ + ": mirror_inverse: Newton did not reach residual 1e-10");
  }
  return x;
}

double Generator::directional_derivative(const Vec& x, const Vec& d) const {
  if (!domain_.contains(x)) {
    throw MembershipError(name_ + ": directional_derivative: x not in C");
  }
  check_dim(d, domain_.dim(), name_ + ": directional_derivative");
  if (d.norm() == 0.0) return 0.0;
  // Largest feasible step along d. A direction leaving C drives the boundary
  // distance negative in proportion to t, which the t-relative threshold
  // never forgives; tangential rounding noise is t-independent and passes at
  // once. Once t*|d| sinks below rounding scale no feasible step exists.
  double t_max = 1.0;
  const double dir_scale = std::max(1.0, d.norm());
  while (domain_.boundary_distance(x + t_max * d) <
         -1e-12 * t_max * dir_scale) {
    t_max *= 0.5;
    if (t_max * d.norm() < 1e-14 * (1.0 + x.norm())) {
      throw MembershipError(name_ + ": directional_derivative: direction leaves C");
    }
  }
  if (domain_.is_interior(x)) return gradient_fn_(x).dot(d);

  const double h0 = value_fn_(x);
  double q_prev = kInf;
  double t = t_max;
  int decreasing_run = 0;
  for (int j = 0; j < 48; ++j) {
    const double q = (value_fn_(x + t * d) - h0) / t;
    if (q < -1e9) return -kInf;
    if (j > 0) {
      const double drop = q_prev - q;
      if (std::abs(drop) <= 1e-7 * (1.0 + std::abs(q))) {
        return 2.0 * q - q_prev;  // one Richardson level on the halving ladder
      }
      decreasing_run = drop > 1e-4 * (1.0 + std::abs(q)) ? decreasing_run + 1 : 0;
    }
    q_prev = q;
    t *= 0.5;
    if (t < 1e-12 * t_max) break;
  }
  // Monotone decrease with non-vanishing decrements: the quotient has no
  // finite limit (logarithmic-type singularity).
  if (decreasing_run >= 6) return -kInf;
  return q_prev;
}

Generator neg_entropy(int dim) {
  Domain dom = Domain::simplex(dim);
  auto value = [](const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += xlogx(x[i]);
    return s;
  };
  auto grad = [](const Vec& x) {
    Vec g = x.array().log() + 1.0;
    return centered(std::move(g));
  };
  auto inv = [dim](const Vec& g) {
    Vec e = (g.array() - g.maxCoeff()).exp();
    e /= e.sum();
    return e;
  };
  return Generator(std::move(dom), "neg_entropy", value, grad, inv,
                   /*strictly_convex_on_closure=*/true,
                   /*continuous_on_closure=*/true,
                   /*legendre_on_domain=*/true,
                   /*project_dual=*/[](const Vec& g) { return centered(g); });
}

Generator fermi_dirac(int dim) {
  Domain dom = Domain::unit_box(dim);
  auto value = [](const Vec& x) {
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += xlogx(x[i]) + xlogx(1.0 - x[i]);
    return s;
  };
  auto grad = [](const Vec& x) {
    return Vec((x.array() / (1.0 - x.array())).log());
  };
  auto inv = [](const Vec& g) {
    return Vec(1.0 / (1.0 + (-g.array()).exp()));
  };
  return Generator(std::move(dom), "fermi_dirac", value, grad, inv, true, true);
}

Generator ball_gen(int dim) {
  Domain dom = Domain::ball(dim, 1.0);
  auto value = [](const Vec& x) {
    return -std::sqrt(std::max(0.0, 1.0 - x.squaredNorm()));
  };
  auto grad = [](const Vec& x) {
    return Vec(x / std::sqrt(1.0 - x.squaredNorm()));
  };
  auto inv = [](const Vec& g) {
    return Vec(g / std::sqrt(1.0 + g.squaredNorm()));
  };
  return Generator(std::move(dom), "ball_gen", value, grad, inv, true, true);
}

Generator half_squared_norm(Domain domain) {
  Domain dom = domain;
  auto value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  auto grad = [](const Vec& x) { return x; };
  auto inv = [dom](const Vec& g) { return euclidean_project(dom, g); };
  return Generator(std::move(domain), "half_squared_norm", value, grad, inv,
                   /*strictly_convex_on_closure=*/true,
                   /*continuous_on_closure=*/true,
                   /*legendre_on_domain=*/false);
}

Vec euclidean_project(const Domain& d, const Vec& x) {
  check_dim(x, d.dim(), "euclidean_project");
  switch (d.kind()) {
    case DomainKind::Ball: {
      const double n = x.norm();
      return n <= d.radius() ? x : Vec(x * (d.radius() / n));
    }
    case DomainKind::Box:
      return x.array().max(d.box_lo().array()).min(d.box_hi().array());
    case DomainKind::Simplex: {
      // Sort-based projection onto the standard simplex.
      std::vector<double> u(x.data(), x.data() + x.size());
      std::sort(u.begin(), u.end(), std::greater<>());
      double cssv = 0.0, theta = 0.0;
      for (int i = 0; i < static_cast<int>(u.size()); ++i) {
        cssv += u[i];
        const double cand = (cssv - 1.0) / (i + 1);
        if (u[i] - cand > 0.0) theta = cand;
      }
      return Vec((x.array() - theta).max(0.0));
    }
    case DomainKind::Polytope:
      throw std::invalid_argument(
          "euclidean_project: generic polytopes unsupported");
  }
  throw std::logic_error("euclidean_project: unreachable");
}

}  // namespace bregman
