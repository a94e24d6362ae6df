#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bregman/probes.hpp"
#include "helpers.hpp"

using namespace bregman;
using bregman::testing::affine_face_generator;
using bregman::testing::vec2;

namespace {
Vec v1(double a) {
  Vec v(1);
  v << a;
  return v;
}

std::vector<double> geometric(int j_min, int j_max) {
  std::vector<double> g;
  for (int j = j_min; j <= j_max; ++j) g.push_back(std::ldexp(1.0, -j));
  return g;
}
}  // namespace

TEST_CASE("condition (B) holds on the fermi-dirac box via chords") {
  const Generator g = fermi_dirac(2);
  const Vec y = vec2(0, 0.5);
  std::vector<ApproachCurve> curves;
  for (const Vec& anchor : {vec2(0.5, 0.5), vec2(0.3, 0.8), vec2(0.7, 0.2)}) {
    curves.push_back(ApproachCurve::chord(y, anchor));
  }
  const auto rep = probe_condition_b(g, y, curves);
  CHECK(rep.verdict == Verdict::HOLDS);
  CHECK(rep.predicted == Verdict::HOLDS);
  CHECK(rep.matches_prediction);
  // Oracle: along the first chord the inner gap is t log((1-t)/t) -> 0.
  for (const auto& s : rep.curves[0].samples) {
    const double t = s.param * 0.5;  // x1 of target + lambda*(anchor-target)
    CHECK(s.inner_gap ==
          doctest::Approx(t * std::log((1.0 - t) / t)).epsilon(1e-6));
  }
}

TEST_CASE("condition (B) fails on the disk along the tangential curve") {
  const Generator g = ball_gen(2);
  Vec e1 = vec2(1, 0);
  const auto rep =
      probe_condition_b(g, e1, {ApproachCurve::tangential_disk()});
  CHECK(rep.verdict == Verdict::FAILS);
  CHECK(rep.predicted == Verdict::FAILS);
  CHECK(rep.matches_prediction);
  CHECK(rep.limit_estimate == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("radial approach alone looks fine; the tangential curve decides") {
  const Generator g = ball_gen(2);
  Vec e1 = vec2(1, 0);
  const auto radial_only =
      probe_condition_b(g, e1, {ApproachCurve::chord(e1, Vec::Zero(2))});
  CHECK(radial_only.verdict == Verdict::HOLDS);
  CHECK_FALSE(radial_only.matches_prediction);  // (B) is a for-all property

  const auto both = probe_condition_b(
      g, e1,
      {ApproachCurve::chord(e1, Vec::Zero(2)), ApproachCurve::tangential_disk()});
  CHECK(both.verdict == Verdict::FAILS);
  CHECK(both.matches_prediction);
  CHECK(both.limit_estimate == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("theorem probes reject non-Legendre generators") {
  const Generator g = half_squared_norm(Domain::unit_box(2));
  CHECK_THROWS_AS(
      probe_condition_b(g, vec2(0, 0.5),
                        {ApproachCurve::chord(vec2(0, 0.5), vec2(0.5, 0.5))}),
      std::invalid_argument);
}

TEST_CASE("disk counterexample table") {
  const double rt = std::sqrt(0.5);
  auto rows = disk_counterexample({rt, 0.99, 1.0 - std::ldexp(1.0, -30)});
  REQUIRE(rows.size() == 3);
  // r = sqrt(2)/2: theta = arccos(0) = pi/2, x = (0, r), D = r + s = sqrt(2).
  CHECK(rows[0].x[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rows[0].x[1] == doctest::Approx(rt).epsilon(1e-12));
  CHECK(rows[0].divergence == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // Closed form r + sqrt(1-r^2) at every grid point, and the r -> 1 limit.
  for (const auto& row : rows) {
    CHECK(std::abs(row.divergence -
                   (row.r + std::sqrt((1.0 - row.r) * (1.0 + row.r)))) <= 1e-9);
  }
  CHECK(std::abs(rows[2].divergence - 1.0) <= 1e-3);
  // Cross-check the stable column against the generic three-term divergence
  // where the latter is still accurate.
  const Generator g = ball_gen(2);
  Vec e1 = vec2(1, 0);
  for (const auto& row : {rows[0], rows[1]}) {
    CHECK(row.divergence ==
          doctest::Approx(bregman_raw(g, e1, row.x).value).epsilon(1e-10));
  }
}

TEST_CASE("disk counterexample rejects r outside (0,1)") {
  CHECK_THROWS_AS(disk_counterexample({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(disk_counterexample({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(disk_counterexample({-0.5}), std::invalid_argument);
}

TEST_CASE("chord blow-up on the disk clears 1e6 with exponent 1/2") {
  const Generator g = ball_gen(2);
  const auto rep =
      probe_chord_blowup(g, vec2(1, 0), Vec::Zero(2), geometric(4, 44));
  CHECK(rep.verdict == Verdict::HOLDS);
  CHECK(rep.matches_prediction);
  CHECK(rep.limit_estimate >= 1e6);
  CHECK(rep.growth_exponent == doctest::Approx(0.5).epsilon(1e-3));
  // Spec'd point check: at lambda ~ 1e-8 the divergence tops 1e3, and the
  // closed form -1 + s + r^2/s with r = 1-lambda matches the samples.
  for (const auto& s : rep.curves[0].samples) {
    const double r = 1.0 - s.param;
    if (s.param > 1e-6) {
      const double sq = std::sqrt((1.0 - r) * (1.0 + r));
      CHECK(s.divergence ==
            doctest::Approx(-1.0 + sq + r * r / sq).epsilon(1e-9));
    }
    if (s.param <= 1e-8) CHECK(s.divergence >= 1e3);
  }
}

TEST_CASE("chord blow-up needs no curvature: fermi-dirac on a box edge") {
  const Generator g = fermi_dirac(1);
  // D_h(1/2, 1-lambda) grows like |log lambda|/2; bar lowered accordingly.
  const auto rep =
      probe_chord_blowup(g, v1(1.0), v1(0.5), geometric(4, 40), /*bar=*/10.0);
  CHECK(rep.verdict == Verdict::HOLDS);
  // Closed-form oracle at x(l) = (1-l)*1 + l*0.5 = 1 - l/2:
  // D_h(1/2, x) = h(1/2) - h(x) - h'(x)(1/2 - x).
  const auto& samples = rep.curves[0].samples;
  for (const auto& s : samples) {
    if (s.param < 1e-6) continue;
    const double xl = 1.0 - 0.5 * s.param;
    const double expected = std::log(0.5) - bregman::testing::fd(xl) -
                            std::log(xl / (1.0 - xl)) * (0.5 - xl);
    CHECK(s.divergence == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("chord blow-up preconditions") {
  const Generator g = ball_gen(2);
  CHECK_THROWS_AS(
      probe_chord_blowup(g, vec2(0.5, 0), Vec::Zero(2), geometric(4, 10)),
      MembershipError);  // interior x
  const Generator fd2 = fermi_dirac(2);
  CHECK_THROWS_AS(
      probe_chord_blowup(fd2, vec2(1, 0.5), vec2(1, 0.9), geometric(4, 10)),
      MembershipError);  // midpoint (1, 0.7) still on bd C
}

TEST_CASE("condition (A) holds for strictly convex generators") {
  const Generator g = fermi_dirac(2);
  const auto rep = probe_condition_a(g, vec2(0, 0.2), vec2(0, 0.8),
                                     vec2(0.5, 0.5), 1000000);
  CHECK(rep.verdict == Verdict::HOLDS);
  CHECK(rep.matches_prediction);

  const Generator q = half_squared_norm(Domain::unit_box(2));
  const auto rep2 = probe_condition_a(q, vec2(0, 0.2), vec2(0, 0.8),
                                      vec2(0.5, 0.5), 1000000);
  CHECK(rep2.verdict == Verdict::HOLDS);
}

TEST_CASE("condition (A) fails on the affine boundary face") {
  const Generator g = affine_face_generator();
  const Vec seg_x = vec2(0.2, 0), seg_y = vec2(0.8, 0), z0 = vec2(0.5, 0.5);
  const auto rep = probe_condition_a(g, seg_x, seg_y, z0, 1000000);
  CHECK(rep.verdict == Verdict::FAILS);
  CHECK(rep.predicted == Verdict::FAILS);
  CHECK(rep.matches_prediction);
  CHECK(rep.limit_estimate < 1e-4);
  // Oracle: z_k = (0.5, 0.5/k) and D_h(seg_x, z_k) = -log(1 - 0.5/k).
  for (const auto& s : rep.curves[0].samples) {
    const double t = 0.5 * s.param;
    CHECK(s.divergence == doctest::Approx(-std::log1p(-t)).epsilon(1e-9));
    CHECK(s.point[1] == doctest::Approx(t).epsilon(1e-14));
  }
  // The sequence stays away from seg_x while the divergence dies.
  const auto& last = rep.curves[0].samples.back();
  CHECK((last.point - seg_x).norm() > 0.29);
}

TEST_CASE("usc probe: interior continuity") {
  const Generator g = fermi_dirac(2);
  const Vec y = vec2(0.4, 0.6), d = vec2(0.1, -0.2);
  std::vector<std::pair<Vec, Vec>> seq;
  for (int k = 1; k <= 60; ++k) {
    seq.emplace_back(y + Vec(vec2(0.1, 0.1) / k), d);
  }
  const auto rep = probe_usc(g, y, d, seq);
  CHECK(rep.holds);
  CHECK(std::abs(rep.sup_gap) < 1e-3);
}

TEST_CASE("usc probe: -inf target at the entropy corner") {
  const Generator g = fermi_dirac(1);
  std::vector<std::pair<Vec, Vec>> seq;
  for (int k = 10; k <= 400; k += 10) {
    seq.emplace_back(v1(std::ldexp(1.0, -k)), v1(0.5));
  }
  const auto rep = probe_usc(g, v1(0.0), v1(1.0), seq);
  CHECK(rep.target_value == -kInf);
  CHECK(rep.tail_max <= -1e2);
  CHECK(rep.holds);
}

TEST_CASE("usc probe: d = 0 gives h'(y,0) = 0 and nonpositive tail limsup") {
  const Generator g = fermi_dirac(2);
  const Vec y = vec2(0.0, 0.5);
  std::vector<std::pair<Vec, Vec>> seq;
  for (int k = 1; k <= 20; ++k) {
    seq.emplace_back(vec2(1.0 / (10.0 * k), 0.5), Vec(Vec::Zero(2)));
  }
  const auto rep = probe_usc(g, y, Vec(Vec::Zero(2)), seq);
  CHECK(rep.target_value == 0.0);
  CHECK(rep.tail_max <= 1e-12);
  CHECK(rep.holds);
}

TEST_CASE("usc probe validates membership") {
  const Generator g = fermi_dirac(1);
  CHECK_THROWS_AS(probe_usc(g, v1(0.9), v1(0.5), {{v1(0.9), v1(0.5)}}),
                  MembershipError);
}
