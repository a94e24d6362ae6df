#ifndef BREGMAN_PROBES_HPP
#define BREGMAN_PROBES_HPP

#include <functional>
#include <string>
#include <vector>

#include "bregman/divergence.hpp"

namespace bregman {

enum class Verdict { HOLDS, FAILS, INCONCLUSIVE };

const char* to_string(Verdict v);

/// Interior curve x(t) approaching a boundary target; parameters follow a
/// geometric grid so samples concentrate where the divergence behavior is
/// asymptotic.
struct ApproachCurve {
  enum class Kind { Chord, TangentialDisk, Custom };

  Kind kind = Kind::Custom;
  std::string label;
  Vec target;
  std::vector<double> params;  // decreasing boundary-distance parameter
  std::function<Vec(double)> point;

  /// x(lambda) = y + lambda (anchor - y), lambda = 2^-j, j = j_min..j_max.
  static ApproachCurve chord(const Vec& target, const Vec& anchor,
                             int j_min = 4, int j_max = 40);

  /// The unit-disk curve x(r) = (r cos t(r), r sin t(r)) with
  /// t(r) = arccos(r - sqrt(1 - r^2)), approaching e1 along the boundary;
  /// parameterized by 1 - r = 2^-j, j = j_min..j_max.
  static ApproachCurve tangential_disk(int j_min = 4, int j_max = 40);
};

struct CurveSample {
  double param = 0.0;
  Vec point;
  double divergence = 0.0;
  double inner_gap = 0.0;
};

struct CurveResult {
  std::string label;
  std::vector<CurveSample> samples;
  Verdict verdict = Verdict::INCONCLUSIVE;
  double limit_estimate = 0.0;  // last-sample divergence
};

struct ProbeReport {
  std::vector<CurveResult> curves;
  Verdict verdict = Verdict::INCONCLUSIVE;
  Verdict predicted = Verdict::INCONCLUSIVE;
  bool matches_prediction = false;
  double limit_estimate = 0.0;
  double growth_exponent = 0.0;  // blow-up probe only
  std::string note;
};

/// Condition (B) at y: along every interior sequence x_k -> y the
/// divergence D_h(y, x_k) must vanish. Each curve is sampled and judged on
/// its finest five points (below tol: HOLDS; at least 10x tol or beyond
/// 1e6: FAILS); one failing curve decides the overall verdict. The
/// prediction column comes from the domain class (polyhedral: HOLDS,
/// ball: FAILS).
ProbeReport probe_condition_b(const Generator& gen, const Vec& y,
                              const std::vector<ApproachCurve>& curves,
                              double tol = 1e-4);

struct CounterexampleRow {
  double r = 0.0;
  Vec x;
  double divergence = 0.0;
};

/// The tangential disk counterexample table; divergence simplifies to
/// r + sqrt(1 - r^2) and tends to 1 as r -> 1. Grid values must lie in (0,1).
std::vector<CounterexampleRow> disk_counterexample(
    const std::vector<double>& r_grid);

/// Chord blow-up: D_h(y, (1-lambda) x + lambda y) -> +inf as lambda -> 0
/// for boundary x with interior midpoint. HOLDS when the column is
/// eventually increasing and the finest value clears blowup_bar.
ProbeReport probe_chord_blowup(const Generator& gen, const Vec& x_boundary,
                               const Vec& y,
                               const std::vector<double>& lambda_grid,
                               double blowup_bar = 1e6);

/// Condition (A) on a segment [x, y]: a strict midpoint gap means no
/// violation is constructible (HOLDS). When h is affine on the segment
/// (midpoint gap within 1e-10), the sequence z_k = z0/k + (k-1)/k z with
/// z the midpoint drives D_h(x, z_k) -> 0 while z_k stays away from x,
/// an explicit violation (FAILS).
ProbeReport probe_condition_a(const Generator& gen, const Vec& seg_x,
                              const Vec& seg_y, const Vec& z0, long k_max,
                              double tol = 1e-4);

struct UscReport {
  double target_value = 0.0;  // h'(y, d); -inf sentinel possible
  double tail_max = -kInf;    // max over tail of h'(x_k, d_k)
  double sup_gap = -kInf;     // tail_max - target_value (inf-safe)
  bool holds = false;
};

/// Upper semicontinuity of directional derivatives along (x_k, d_k) ->
/// (y, d): the tail of h'(x_k, d_k) must not exceed h'(y, d) + tol, or must
/// diverge below -1e2 when h'(y, d) is the -inf sentinel.
UscReport probe_usc(const Generator& gen, const Vec& y, const Vec& d,
                    const std::vector<std::pair<Vec, Vec>>& sequence,
                    double tol = 1e-3);

}  // namespace bregman

#endif  // BREGMAN_PROBES_HPP
