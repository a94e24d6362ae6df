#ifndef BREGMAN_DIVERGENCE_HPP
#define BREGMAN_DIVERGENCE_HPP

#include "bregman/generator.hpp"

namespace bregman {

/// D_h(y, x) = h(y) - h(x) - <grad h(x), y - x>, with the inner term
/// recorded separately (condition (B) reduces to it).
struct DivergenceValue {
  double value = 0.0;
  bool overflowed = false;
  double inner_term = 0.0;
};

/// Bregman divergence for y in C, x in int C. Sets overflowed and a +inf
/// value when any intermediate exceeds kOverflowBar in magnitude.
DivergenceValue bregman(const Generator& gen, const Vec& y, const Vec& x);

/// <grad h(x), y - x>.
double inner_gap(const Generator& gen, const Vec& y, const Vec& x);

/// Divergence with the interior predicate relaxed to strictly positive
/// boundary distance. Boundary probes drive iterates closer to bd C than
/// the 1e-12 membership slack and rely on the overflow sentinel.
DivergenceValue bregman_raw(const Generator& gen, const Vec& y, const Vec& x);

}  // namespace bregman

#endif  // BREGMAN_DIVERGENCE_HPP
