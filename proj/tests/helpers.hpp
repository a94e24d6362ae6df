#ifndef BREGMAN_TESTS_HELPERS_HPP
#define BREGMAN_TESTS_HELPERS_HPP

#include <cmath>

#include "bregman/generator.hpp"

namespace bregman::testing {

inline Vec vec2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

inline Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

// Scalar Fermi-Dirac entropy with 0 log 0 = 0.
inline double fd(double t) {
  double s = 0.0;
  if (t > 0.0) s += t * std::log(t);
  if (t < 1.0) s += (1.0 - t) * std::log(1.0 - t);
  return s;
}

// h(x) = fd(x2) + x2 * fd(x1) on [0,1]^2: Legendre (essentially smooth,
// strictly convex on the interior since sup t(1-t) log^2(t/(1-t)) < 1), but
// identically zero -- hence affine -- on the boundary face x2 = 0. This is
// the constructed condition-(A) violator; there is no closed-form inverse,
// so mirror_inverse exercises the Newton fallback.
inline Generator affine_face_generator() {
  Domain dom = Domain::unit_box(2);
  auto value = [](const Vec& x) { return fd(x[1]) + x[1] * fd(x[0]); };
  auto gradient = [](const Vec& x) {
    Vec g(2);
    g[0] = x[1] * std::log(x[0] / (1.0 - x[0]));
    g[1] = std::log(x[1] / (1.0 - x[1])) + fd(x[0]);
    return g;
  };
  return Generator(std::move(dom), "affine_face", value, gradient,
                   /*mirror_inverse=*/nullptr,
                   /*strictly_convex_on_closure=*/false,
                   /*continuous_on_closure=*/true,
                   /*legendre_on_domain=*/true);
}

}  // namespace bregman::testing

#endif  // BREGMAN_TESTS_HELPERS_HPP
