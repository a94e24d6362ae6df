#include "bregman/domain.hpp"

#include <algorithm>
#include <cmath>

namespace bregman {

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Polytope: return "polytope";
    case DomainKind::Ball: return "ball";
    case DomainKind::Box: return "box";
    case DomainKind::Simplex: return "simplex";
  }
  return "?";
}

Domain Domain::polytope(std::vector<HalfSpace> faces, Vec interior_witness) {
  if (faces.empty()) throw std::invalid_argument("polytope: no half-spaces");
  const auto n = interior_witness.size();
  for (const auto& f : faces) {
    check_dim(f.a, n, "polytope half-space");
    if (f.a.norm() == 0.0) throw std::invalid_argument("polytope: zero normal");
  }
  Domain d;
  d.kind_ = DomainKind::Polytope;
  d.dim_ = static_cast<int>(n);
  d.faces_ = std::move(faces);
  d.witness_ = std::move(interior_witness);
  if (!d.is_interior(d.witness_)) {
    throw std::invalid_argument("polytope: witness is not interior");
  }
  return d;
}

Domain Domain::ball(int dim, double radius) {
  if (dim < 1 || radius <= 0.0) throw std::invalid_argument("ball: bad parameters");
  Domain d;
  d.kind_ = DomainKind::Ball;
  d.dim_ = dim;
  d.radius_ = radius;
  d.witness_ = Vec::Zero(dim);
  return d;
}

Domain Domain::box(Vec lo, Vec hi) {
  check_dim(hi, lo.size(), "box bounds");
  if (((hi - lo).array() <= 0.0).any()) throw std::invalid_argument("box: empty");
  Domain d;
  d.kind_ = DomainKind::Box;
  d.dim_ = static_cast<int>(lo.size());
  d.witness_ = 0.5 * (lo + hi);
  for (int i = 0; i < d.dim_; ++i) {
    Vec e = Vec::Zero(d.dim_);
    e[i] = 1.0;
    d.faces_.push_back({e, hi[i]});
    d.faces_.push_back({-e, -lo[i]});
  }
  d.lo_ = std::move(lo);
  d.hi_ = std::move(hi);
  return d;
}

Domain Domain::unit_box(int dim) {
  return box(Vec::Zero(dim), Vec::Ones(dim));
}

Domain Domain::simplex(int dim) {
  if (dim < 2) throw std::invalid_argument("simplex: need dim >= 2");
  Domain d;
  d.kind_ = DomainKind::Simplex;
  d.dim_ = dim;
  d.witness_ = Vec::Constant(dim, 1.0 / dim);
  for (int i = 0; i < dim; ++i) {
    Vec e = Vec::Zero(dim);
    e[i] = -1.0;
    d.faces_.push_back({e, 0.0});  // x_i >= 0
  }
  return d;
}

bool Domain::contains(const Vec& x) const {
  check_dim(x, dim_, "contains");
  switch (kind_) {
    case DomainKind::Ball:
      return x.norm() <= radius_ + kMembershipTol;
    case DomainKind::Box:
      return (x.array() >= lo_.array() - kMembershipTol).all() &&
             (x.array() <= hi_.array() + kMembershipTol).all();
    case DomainKind::Simplex:
      return (x.array() >= -kMembershipTol).all() &&
             std::abs(x.sum() - 1.0) <= kMembershipTol;
    case DomainKind::Polytope:
      for (const auto& f : faces_) {
        if (f.b - f.a.dot(x) < -kMembershipTol) return false;
      }
      return true;
  }
  return false;
}

bool Domain::is_interior(const Vec& x) const {
  check_dim(x, dim_, "is_interior");
  switch (kind_) {
    case DomainKind::Ball:
      return x.norm() < radius_ - kMembershipTol;
    case DomainKind::Box:
      return (x.array() > lo_.array() + kMembershipTol).all() &&
             (x.array() < hi_.array() - kMembershipTol).all();
    case DomainKind::Simplex:
      // Interior relative to the affine hull sum(x) = 1.
      return (x.array() > kMembershipTol).all() &&
             std::abs(x.sum() - 1.0) <= kMembershipTol;
    case DomainKind::Polytope:
      for (const auto& f : faces_) {
        if (f.b - f.a.dot(x) <= kMembershipTol) return false;
      }
      return true;
  }
  return false;
}

double Domain::boundary_distance(const Vec& x) const {
  check_dim(x, dim_, "boundary_distance");
  switch (kind_) {
    case DomainKind::Ball:
      return radius_ - x.norm();
    case DomainKind::Box:
      return std::min((x - lo_).minCoeff(), (hi_ - x).minCoeff());
    case DomainKind::Simplex:
      return x.minCoeff();
    case DomainKind::Polytope: {
      double s = kInf;
      for (const auto& f : faces_) {
        s = std::min(s, (f.b - f.a.dot(x)) / f.a.norm());
      }
      return s;
    }
  }
  return 0.0;
}

bool Domain::reflection_stays(const Vec& y, const Vec& x) const {
  check_dim(y, dim_, "reflection_stays");
  check_dim(x, dim_, "reflection_stays");
  return contains(2.0 * x - y);
}

std::optional<double> Domain::reflection_radius(const Vec& y) const {
  check_dim(y, dim_, "reflection_radius");
  if (kind_ == DomainKind::Ball) return std::nullopt;
  double eps = kInf;
  bool any_inactive = false;
  for (const auto& f : faces_) {
    const double norm_a = f.a.norm();
    const double slack = (f.b - f.a.dot(y)) / norm_a;
    if (slack > kActiveTol) {
      any_inactive = true;
      eps = std::min(eps, 0.5 * slack);
    }
  }
  return any_inactive ? eps : kInf;
}

Vec Domain::chord_exit(const Vec& y, const Vec& b) const {
  check_dim(y, dim_, "chord_exit");
  check_dim(b, dim_, "chord_exit");
  const Vec d = b - y;
  if (d.norm() == 0.0) throw std::invalid_argument("chord_exit: y == b");
  if (!contains(y) || !contains(b)) {
    throw MembershipError("chord_exit: endpoints must lie in C");
  }
  if (kind_ == DomainKind::Ball) {
    double t_lo = 1.0, t_hi = 2.0;
    while (contains(y + t_hi * d)) {
      t_lo = t_hi;
      t_hi *= 2.0;
      if (t_hi > 1e18) throw std::logic_error("chord_exit: ray never exits");
    }
    const double step = d.norm();
    for (int it = 0; it < 200 && (t_hi - t_lo) * step > 1e-13; ++it) {
      const double mid = 0.5 * (t_lo + t_hi);
      (contains(y + mid * d) ? t_lo : t_hi) = mid;
    }
    return y + 0.5 * (t_lo + t_hi) * d;
  }
  double t = kInf;
  for (const auto& f : faces_) {
    const double denom = f.a.dot(d);
    if (denom > 0.0) t = std::min(t, (f.b - f.a.dot(y)) / denom);
  }
  if (!std::isfinite(t)) throw std::logic_error("chord_exit: ray never exits");
  return y + std::max(t, 1.0) * d;
}

Domain Domain::to_polytope() const {
  switch (kind_) {
    case DomainKind::Polytope:
      return *this;
    case DomainKind::Box:
      return polytope(faces_, witness_);
    case DomainKind::Simplex: {
      // In the affine chart y = (x_1, .., x_{n-1}): y_i >= 0, sum(y) <= 1.
      const int m = dim_ - 1;
      std::vector<HalfSpace> faces;
      for (int i = 0; i < m; ++i) {
        Vec e = Vec::Zero(m);
        e[i] = -1.0;
        faces.push_back({e, 0.0});
      }
      faces.push_back({Vec::Ones(m), 1.0});
      return polytope(std::move(faces), to_chart(witness_));
    }
    case DomainKind::Ball:
      throw std::invalid_argument(
          "to_polytope: a ball has no H-representation");
  }
  throw std::logic_error("to_polytope: unreachable");
}

int Domain::chart_dim() const {
  return kind_ == DomainKind::Simplex ? dim_ - 1 : dim_;
}

Vec Domain::to_chart(const Vec& x) const {
  check_dim(x, dim_, "to_chart");
  if (kind_ != DomainKind::Simplex) return x;
  return x.head(dim_ - 1);
}

Vec Domain::from_chart(const Vec& y) const {
  if (kind_ != DomainKind::Simplex) return y;
  check_dim(y, dim_ - 1, "from_chart");
  Vec x(dim_);
  x.head(dim_ - 1) = y;
  x[dim_ - 1] = 1.0 - y.sum();
  return x;
}

Vec Domain::clamp_interior(Vec x, double margin) const {
  check_dim(x, dim_, "clamp_interior");
  switch (kind_) {
    case DomainKind::Ball: {
      const double n = x.norm();
      if (n > radius_ - margin) x *= (radius_ - margin) / n;
      return x;
    }
    case DomainKind::Box:
      return x.array().max(lo_.array() + margin).min(hi_.array() - margin);
    case DomainKind::Simplex: {
      x = x.cwiseMax(1.5 * margin);
      x /= x.sum();
      return x;
    }
    case DomainKind::Polytope: {
      double t = 0.0;
      for (const auto& f : faces_) {
        const double norm_a = f.a.norm();
        const double sx = f.b - f.a.dot(x);
        if (sx < margin * norm_a) {
          const double sw = f.b - f.a.dot(witness_);
          t = std::max(t, (margin * norm_a - sx) / (sw - sx));
        }
      }
      if (t > 0.0) x += std::min(t, 1.0) * (witness_ - x);
      return x;
    }
  }
  return x;
}

BoundaryPoint boundary_point(const Domain& d, const Vec& x) {
  return {x, d.contains(x) && !d.is_interior(x)};
}

}  // namespace bregman
