#include "bregman/divergence.hpp"

#include <cmath>

namespace bregman {

DivergenceValue bregman(const Generator& gen, const Vec& y, const Vec& x) {
  const Domain& d = gen.domain();
  if (!d.contains(y)) throw MembershipError("bregman: y not in C");
  if (!d.is_interior(x)) throw MembershipError("bregman: x not in int C");
  const double hy = gen.value(y);
  const double hx = gen.value(x);
  const double inner = gen.gradient(x).dot(y - x);
  DivergenceValue out;
  out.inner_term = inner;
  const bool bad = !std::isfinite(hy) || !std::isfinite(hx) ||
                   !std::isfinite(inner) || std::abs(hy) > kOverflowBar ||
                   std::abs(hx) > kOverflowBar || std::abs(inner) > kOverflowBar;
  if (bad) {
    out.overflowed = true;
    out.value = kInf;
    return out;
  }
  out.value = hy - hx - inner;
  return out;
}

DivergenceValue bregman_raw(const Generator& gen, const Vec& y, const Vec& x) {
  const Domain& d = gen.domain();
  if (!d.contains(y)) throw MembershipError("bregman_raw: y not in C");
  if (!d.contains(x) || !(d.boundary_distance(x) > 0.0)) {
    throw MembershipError("bregman_raw: x needs positive boundary distance");
  }
  const double hy = gen.value(y);
  const double hx = gen.value(x);
  const double inner = gen.gradient_unchecked(x).dot(y - x);
  DivergenceValue out;
  out.inner_term = inner;
  const bool bad = !std::isfinite(hy) || !std::isfinite(hx) ||
                   !std::isfinite(inner) || std::abs(hy) > kOverflowBar ||
                   std::abs(hx) > kOverflowBar || std::abs(inner) > kOverflowBar;
  if (bad) {
    out.overflowed = true;
    out.value = kInf;
    return out;
  }
  out.value = hy - hx - inner;
  return out;
}

double inner_gap(const Generator& gen, const Vec& y, const Vec& x) {
  const Domain& d = gen.domain();
  if (!d.contains(y)) throw MembershipError("inner_gap: y not in C");
  if (!d.is_interior(x)) throw MembershipError("inner_gap: x not in int C");
  return gen.gradient(x).dot(y - x);
}

}  // namespace bregman
