#include "bregman/algorithms.hpp"

#include <algorithm>
#include <cmath>

namespace bregman {

namespace {

struct Recorder {
  const Generator& gen;
  std::function<double(const Vec&)> objf;
  Trajectory traj;
  bool enforce_monotone;

  Recorder(const Generator& g, std::function<double(const Vec&)> o,
           std::vector<Vec> refs, bool enforce)
      : gen(g), objf(std::move(o)), enforce_monotone(enforce) {
    traj.reference_points = std::move(refs);
    traj.divergences_to.resize(traj.reference_points.size());
  }

  void record(const Vec& x) {
    traj.iterates.push_back(x);
    traj.objectives.push_back(objf ? objf(x) : 0.0);
    for (size_t r = 0; r < traj.reference_points.size(); ++r) {
      auto& series = traj.divergences_to[r];
      const double dv = bregman_raw(gen, traj.reference_points[r], x).value;
      if (!series.empty()) {
        const double inc = dv - series.back();
        traj.max_divergence_increase =
            std::max(traj.max_divergence_increase, inc);
        if (enforce_monotone && inc > 1e-10) {
          throw std::runtime_error(
              "divergence to a known minimizer increased by " +
              std::to_string(inc));
        }
      }
      series.push_back(dv);
    }
  }
};

// Gradient component i of a coordinatewise-separable generator, with
// coordinate i replaced by xi.
double scalar_grad(const Generator& gen, Vec base, int i, double xi) {
  base[i] = xi;
  return gen.gradient_unchecked(base)[i];
}

// Solve grad_i h(x) = g for coordinate i of a separable generator on a box,
// by bisection on the open interval.
double scalar_grad_inverse(const Generator& gen, const Vec& base, int i,
                           double g) {
  const Domain& d = gen.domain();
  double lo = d.box_lo()[i], hi = d.box_hi()[i];
  const double width = hi - lo;
  lo += 1e-16 * width;
  hi -= 1e-16 * width;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * width; ++it) {
    const double mid = 0.5 * (lo + hi);
    (scalar_grad(gen, base, i, mid) < g ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Distance from c to conv(pts): projected gradient on the weight simplex.
double dist_to_hull(const Vec& c, const std::vector<Vec>& pts) {
  if (pts.empty()) return kInf;
  const auto m = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd P(c.size(), m);
  for (Eigen::Index j = 0; j < m; ++j) P.col(j) = pts[static_cast<size_t>(j)];
  const Eigen::MatrixXd G = P.transpose() * P;
  const double lip = std::max(G.norm(), 1e-12);
  auto project_simplex = [](Vec w) {
    std::vector<double> u(w.data(), w.data() + w.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0.0, theta = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
      cum += u[i];
      const double t = (cum - 1.0) / static_cast<double>(i + 1);
      if (u[i] - t > 0.0) theta = t;
    }
    return Vec(w.unaryExpr([&](double v) { return std::max(v - theta, 0.0); }));
  };
  Vec w = Vec::Constant(m, 1.0 / static_cast<double>(m));
  const Vec Ptc = P.transpose() * c;
  for (int it = 0; it < 500; ++it) {
    const Vec grad = G * w - Ptc;
    w = project_simplex(w - grad / lip);
  }
  return (P * w - c).norm();
}

}  // namespace

double StepSchedule::at(int k) const {
  return alpha0 / std::pow(static_cast<double>(k + 1), exponent);
}

StepSchedule StepSchedule::constant(double alpha) { return {alpha, 0.0}; }

StepSchedule StepSchedule::default_for(const Objective& obj) {
  StepSchedule s;
  if (obj.lipschitz_const && *obj.lipschitz_const > 0.0) {
    s.alpha0 = 1.0 / *obj.lipschitz_const;
  }
  return s;
}

Trajectory mirror_descent(const Generator& gen, const Objective& obj,
                          const Vec& x0, const StepSchedule& steps, int K) {
  if (!gen.domain().is_interior(x0)) {
    throw MembershipError("mirror_descent: x0 not interior");
  }
  if (K < 1) throw std::invalid_argument("mirror_descent: K >= 1 required");
  Recorder rec(gen, obj.value, obj.solutions, /*enforce=*/false);
  Vec x = x0;
  rec.record(x);
  for (int k = 0; k < K; ++k) {
    const double alpha = steps.at(k);
    if (!(alpha > 0.0)) throw std::invalid_argument("mirror_descent: step <= 0");
    const Vec v = obj.subgradient(x);
    if (!v.allFinite()) {
      throw std::runtime_error("mirror_descent: non-finite subgradient");
    }
    x = gen.mirror_inverse(gen.gradient_unchecked(x) - alpha * v);
    rec.traj.step_sizes.push_back(alpha);
    rec.record(x);
  }
  return std::move(rec.traj);
}

Trajectory bregman_gradient(const Generator& gen, const Objective& obj,
                            const Vec& x0, double alpha, int K) {
  if (!gen.domain().is_interior(x0)) {
    throw MembershipError("bregman_gradient: x0 not interior");
  }
  if (!obj.smooth_gradient) {
    throw std::invalid_argument("bregman_gradient: objective has no smooth gradient");
  }
  if (obj.relsmooth_alpha && alpha > *obj.relsmooth_alpha + 1e-15) {
    throw std::invalid_argument(
        "bregman_gradient: alpha exceeds the relative-smoothness bound");
  }
  if (K < 1) throw std::invalid_argument("bregman_gradient: K >= 1 required");
  Recorder rec(gen, obj.value, obj.solutions, /*enforce=*/true);
  Vec x = x0;
  rec.record(x);
  for (int k = 0; k < K; ++k) {
    x = gen.mirror_inverse(gen.gradient_unchecked(x) - alpha * obj.smooth_gradient(x));
    rec.traj.step_sizes.push_back(alpha);
    rec.record(x);
  }
  return std::move(rec.traj);
}

Trajectory proximal_d(const Generator& gen, const Objective& obj, const Vec& x0,
                      const StepSchedule& steps, int K) {
  const Domain& dom = gen.domain();
  if (!dom.is_interior(x0)) {
    throw MembershipError("proximal_d: x0 not interior");
  }
  if (K < 1) throw std::invalid_argument("proximal_d: K >= 1 required");
  const bool separable_box = dom.kind() == DomainKind::Box;
  Recorder rec(gen, obj.value, obj.solutions, /*enforce=*/true);
  Vec x = x0;
  // The dual iterate grad h(x_k) is carried across steps: recomputing it
  // from the stored primal loses ~eps * h'' absolute accuracy, which breaks
  // the 1e-9 residual bound once iterates approach a steep boundary.
  Vec gx = gen.gradient(x);
  rec.record(x);
  for (int k = 0; k < K; ++k) {
    const double alpha = steps.at(k);
    if (!(alpha > 0.0)) throw std::invalid_argument("proximal_d: step <= 0");
    Vec x_next;
    Vec v;        // selected subgradient at the prox point
    Vec gx_next;  // dual of the prox point, as solved
    switch (obj.form) {
      case Objective::Form::Constant:
        x_next = x;
        v = Vec::Zero(dom.dim());
        gx_next = gx;
        break;
      case Objective::Form::Linear:
        // Interior stationarity: grad h(x+) = grad h(x) - alpha c.
        gx_next = gx - alpha * obj.linear_c;
        x_next = gen.mirror_inverse(gx_next);
        v = obj.linear_c;
        break;
      case Objective::Form::Quadratic: {
        if (!separable_box) {
          throw std::invalid_argument(
              "proximal_d: quadratic inner solver needs a box domain");
        }
        x_next.resize(dom.dim());
        gx_next.resize(dom.dim());
        for (int i = 0; i < dom.dim(); ++i) {
          // Solve psi(u) = alpha (t(u) - a_i) + u - gx_i = 0 in the dual,
          // t(u) the scalar inverse gradient: psi is strictly increasing and
          // u-resolution does not degrade near the boundary.
          const double a_i = obj.center[i];
          const double m = std::max(std::abs(a_i - dom.box_lo()[i]),
                                    std::abs(a_i - dom.box_hi()[i]));
          double lo_u = gx[i] - alpha * m, hi_u = gx[i] + alpha * m;
          for (int it = 0; it < 200 && hi_u - lo_u > 1e-12; ++it) {
            const double mid = 0.5 * (lo_u + hi_u);
            const double t = scalar_grad_inverse(gen, x, i, mid);
            ((alpha * (t - a_i) + mid - gx[i]) < 0.0 ? lo_u : hi_u) = mid;
          }
          const double u = 0.5 * (lo_u + hi_u);
          x_next[i] = scalar_grad_inverse(gen, x, i, u);
          gx_next[i] = u;
        }
        v = obj.smooth_gradient(x_next);
        break;
      }
      case Objective::Form::AbsDeviation: {
        if (!separable_box) {
          throw std::invalid_argument(
              "proximal_d: abs-deviation inner solver needs a box domain");
        }
        x_next.resize(dom.dim());
        v.resize(dom.dim());
        gx_next.resize(dom.dim());
        for (int i = 0; i < dom.dim(); ++i) {
          const double a_i = obj.center[i];
          const double ga = scalar_grad(gen, x, i, a_i);
          if (gx[i] - alpha > ga) {  // minimizer right of the kink
            gx_next[i] = gx[i] - alpha;
            x_next[i] = scalar_grad_inverse(gen, x, i, gx_next[i]);
            v[i] = 1.0;
          } else if (gx[i] + alpha < ga) {  // left of the kink
            gx_next[i] = gx[i] + alpha;
            x_next[i] = scalar_grad_inverse(gen, x, i, gx_next[i]);
            v[i] = -1.0;
          } else {
            x_next[i] = a_i;
            gx_next[i] = ga;
            v[i] = std::clamp((gx[i] - ga) / alpha, -1.0, 1.0);
          }
        }
        break;
      }
      case Objective::Form::General:
        throw std::invalid_argument(
            "proximal_d: no inner solver configured for this objective");
    }
    x_next = dom.clamp_interior(std::move(x_next));
    const Vec residual = gen.project_dual(alpha * v + gx_next - gx);
    rec.traj.max_prox_residual =
        std::max(rec.traj.max_prox_residual, residual.norm());
    if (residual.norm() > 1e-9) {
      throw std::runtime_error("proximal_d: inner solver residual " +
                               std::to_string(residual.norm()));
    }
    x = std::move(x_next);
    gx = std::move(gx_next);
    rec.traj.step_sizes.push_back(alpha);
    rec.record(x);
  }
  return std::move(rec.traj);
}

Trajectory alternating_projections(const Generator& gen,
                                   const std::vector<HalfSpace>& sets,
                                   const Vec& x0, int K, const Vec& witness) {
  const Domain& dom = gen.domain();
  if (sets.empty()) throw std::invalid_argument("alternating_projections: no sets");
  if (!dom.is_interior(x0)) {
    throw MembershipError("alternating_projections: x0 not interior");
  }
  if (!dom.contains(witness)) {
    throw MembershipError("alternating_projections: witness not in C");
  }
  for (const auto& s : sets) {
    check_dim(s.a, dom.dim(), "alternating_projections half-space");
    if (s.a.dot(witness) > s.b + 1e-9) {
      throw MembershipError(
          "alternating_projections: witness violates a half-space");
    }
  }
  auto infeasibility = [&sets](const Vec& x) {
    double m = 0.0;
    for (const auto& s : sets) m = std::max(m, s.a.dot(x) - s.b);
    return m;
  };
  Recorder rec(gen, infeasibility, {witness}, /*enforce=*/true);
  Vec x = x0;
  rec.record(x);
  for (int k = 0; k < K; ++k) {
    const auto& s = sets[k % sets.size()];
    if (s.a.dot(x) > s.b + kMembershipTol) {
      // Active projection: x(mu) = mirror_inverse(grad h(x) - mu a), with
      // <a, x(mu)> decreasing in mu; find the multiplier hitting the face.
      const Vec gx = gen.gradient_unchecked(x);
      auto slack = [&](double mu) {
        return s.a.dot(gen.mirror_inverse(gx - mu * s.a)) - s.b;
      };
      double mu_lo = 0.0, mu_hi = 1.0;
      int expand = 0;
      while (slack(mu_hi) > 0.0) {
        mu_lo = mu_hi;
        mu_hi *= 2.0;
        if (++expand > 200) {
          throw std::runtime_error(
              "alternating_projections: multiplier search diverged");
        }
      }
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (mu_lo + mu_hi);
        const double sl = slack(mid);
        if (std::abs(sl) <= 1e-12) {
          mu_lo = mu_hi = mid;
          break;
        }
        (sl > 0.0 ? mu_lo : mu_hi) = mid;
      }
      const double mu = 0.5 * (mu_lo + mu_hi);
      x = gen.mirror_inverse(gx - mu * s.a);
      if (std::abs(s.a.dot(x) - s.b) > 1e-9) {
        throw std::runtime_error(
            "alternating_projections: projection residual above 1e-9");
      }
    }
    rec.traj.step_sizes.push_back(static_cast<double>(k % sets.size()));
    rec.record(x);
  }
  return std::move(rec.traj);
}

FejerReport fejer_diagnose(const Trajectory& traj,
                           const std::vector<Vec>& solutions, double tol,
                           const Generator* gen) {
  if (traj.iterates.size() < 20) {
    throw std::invalid_argument("fejer_diagnose: need at least 20 iterates");
  }
  const size_t n = traj.iterates.size();
  const size_t tail_len = std::max<size_t>(2, n / 10);
  const size_t tail_start = n - tail_len;

  FejerReport rep;
  // Single-linkage clustering of the tail with radius tol.
  std::vector<std::vector<const Vec*>> clusters;
  for (size_t i = tail_start; i < n; ++i) {
    const Vec& p = traj.iterates[i];
    std::vector<size_t> hits;
    for (size_t c = 0; c < clusters.size(); ++c) {
      for (const Vec* q : clusters[c]) {
        if ((p - *q).norm() <= tol) {
          hits.push_back(c);
          break;
        }
      }
    }
    if (hits.empty()) {
      clusters.push_back({&p});
    } else {
      clusters[hits[0]].push_back(&p);
      for (size_t j = hits.size(); j-- > 1;) {
        auto& src = clusters[hits[j]];
        clusters[hits[0]].insert(clusters[hits[0]].end(), src.begin(), src.end());
        clusters.erase(clusters.begin() + static_cast<long>(hits[j]));
      }
    }
  }
  bool centers_ok = !clusters.empty();
  for (const auto& c : clusters) {
    Vec center = Vec::Zero(traj.iterates[0].size());
    for (const Vec* q : c) center += *q;
    center /= static_cast<double>(c.size());
    const double best = dist_to_hull(center, solutions);
    rep.max_cluster_to_solution = std::max(
        rep.max_cluster_to_solution, best == kInf ? kInf : best);
    if (!(best <= tol)) centers_ok = false;
    rep.cluster_centers.push_back(std::move(center));
  }

  // Divergence series to each solution must be Cauchy over the tail.
  bool series_ok = true;
  for (const auto& s : solutions) {
    const std::vector<double>* series = nullptr;
    for (size_t r = 0; r < traj.reference_points.size(); ++r) {
      if ((traj.reference_points[r] - s).norm() <= 1e-12) {
        series = &traj.divergences_to[r];
        break;
      }
    }
    std::vector<double> computed;
    if (!series) {
      if (!gen) {
        throw std::invalid_argument(
            "fejer_diagnose: no recorded divergence series for a solution and "
            "no generator to compute one");
      }
      for (size_t i = tail_start; i < n; ++i) {
        computed.push_back(bregman_raw(*gen, s, traj.iterates[i]).value);
      }
      series = &computed;
    }
    const size_t off = series->size() == n ? tail_start : 0;
    double lo = kInf, hi = -kInf;
    for (size_t i = off; i < series->size(); ++i) {
      lo = std::min(lo, (*series)[i]);
      hi = std::max(hi, (*series)[i]);
    }
    rep.max_oscillation = std::max(rep.max_oscillation, hi - lo);
    if (!(hi - lo <= tol)) series_ok = false;
  }

  rep.fejer = centers_ok && series_ok && !solutions.empty();

  for (size_t i = tail_start; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      rep.tail_diameter = std::max(
          rep.tail_diameter, (traj.iterates[i] - traj.iterates[j]).norm());
    }
  }
  if (gen && rep.fejer && gen->strictly_convex_on_closure() &&
      gen->domain().kind() != DomainKind::Ball) {
    rep.convergence_checked = true;
    rep.converged = rep.tail_diameter <= tol;
  }
  return rep;
}

}  // namespace bregman
