#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bregman/config.hpp"

using namespace bregman;

namespace {

bool mentions(const ConfigError& e, const std::string& needle) {
  return std::any_of(e.errors().begin(), e.errors().end(),
                     [&](const std::string& m) {
                       return m.find(needle) != std::string::npos;
                     });
}

const char* kMinimalRun = R"(
[experiment]
kind = run
seed = 42

[generator]
name = neg_entropy

[domain]
kind = simplex
dim = 3

[objective]
name = linear
c = 1, 0, 0

[algorithm]
name = mirror_descent
K = 1000
)";

}  // namespace

TEST_CASE("minimal run config parses") {
  const ExperimentConfig cfg = parse_config(kMinimalRun);
  CHECK(cfg.kind == "run");
  CHECK(cfg.seed == 42);
  CHECK(cfg.generator == "neg_entropy");
  CHECK(cfg.domain_kind == "simplex");
  CHECK(cfg.dim == 3);
  CHECK(cfg.objective == "linear");
  CHECK(cfg.objective_c.size() == 3);
  CHECK(cfg.objective_c[0] == 1.0);
  CHECK(cfg.algorithm == "mirror_descent");
  CHECK(cfg.iterations == 1000);
}

TEST_CASE("comments and blank lines are ignored; echo keeps content lines") {
  const ExperimentConfig cfg = parse_config(
      "# leading comment\n\n[experiment]\nkind = counterexample\n");
  CHECK(cfg.kind == "counterexample");
  CHECK(cfg.echo_lines.size() == 3);  // comment + section + key
}

TEST_CASE("K = 0 is rejected by name") {
  std::string text = kMinimalRun;
  text.replace(text.find("K = 1000"), 8, "K = 0");
  try {
    parse_config(text);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "K"));
  }
}

TEST_CASE("counterexample r_max = 1.0 violates the open interval") {
  try {
    parse_config("[experiment]\nkind = counterexample\n[probe]\nr_max = 1.0\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "r_max"));
    CHECK(mentions(e, "open interval"));
  }
}

TEST_CASE("unknown keys and sections are rejected by name") {
  try {
    parse_config("[experiment]\nkind = run\nbogus = 3\n[mystery]\nx = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "bogus"));
    CHECK(mentions(e, "mystery"));
  }
}

TEST_CASE("unresolvable component names are rejected") {
  try {
    parse_config(
        "[experiment]\nkind = run\n[generator]\nname = entropy_neg\n"
        "[algorithm]\nname = mirror_descent\nK = 10\n"
        "[objective]\nname = linear\nc = 1, 0\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "entropy_neg"));
  }
}

TEST_CASE("typed parse errors accumulate rather than abort") {
  try {
    parse_config(
        "[experiment]\nkind = run\nseed = soon\n[algorithm]\nK = many\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.errors().size() >= 3);  // seed, K, plus missing names
    CHECK(mentions(e, "seed"));
    CHECK(mentions(e, "expected an integer"));
  }
}

TEST_CASE("probe-a requires the segment") {
  try {
    parse_config("[experiment]\nkind = probe-a\n[generator]\nname = fermi_dirac\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "seg_x"));
    CHECK(mentions(e, "seg_y"));
  }
}

TEST_CASE("unknown curve kinds are rejected") {
  try {
    parse_config(
        "[experiment]\nkind = probe-b\n[generator]\nname = ball_gen\n"
        "[probe]\ntarget = 1, 0\ncurves = spiral\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "spiral"));
  }
}

TEST_CASE("half-space rows parse into normals and offsets") {
  const ExperimentConfig cfg = parse_config(
      "[experiment]\nkind = run\n[generator]\nname = fermi_dirac\n"
      "[domain]\nkind = box\ndim = 2\n"
      "[algorithm]\nname = alternating_projections\nK = 50\n"
      "halfspace = 1, 1, 0.8\nhalfspace = 1, -1, 0.1\nwitness = 0.3, 0.3\n");
  REQUIRE(cfg.halfspace_normals.size() == 2);
  CHECK(cfg.halfspace_normals[0].size() == 2);
  CHECK(cfg.halfspace_offsets[0] == 0.8);
  CHECK(cfg.halfspace_offsets[1] == 0.1);
  REQUIRE(cfg.witness.has_value());
  CHECK((*cfg.witness)[0] == 0.3);
}

TEST_CASE("alternating projections requires at least one half-space") {
  try {
    parse_config(
        "[experiment]\nkind = run\n[generator]\nname = fermi_dirac\n"
        "[algorithm]\nname = alternating_projections\nK = 10\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "halfspace"));
  }
}

TEST_CASE("kind is mandatory and must be known") {
  CHECK_THROWS_AS(parse_config("[probe]\ntol = 1e-3\n"), ConfigError);
  try {
    parse_config("[experiment]\nkind = probe-c\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "probe-c"));
  }
}

TEST_CASE("grid and tolerance sanity") {
  try {
    parse_config(
        "[experiment]\nkind = counterexample\n[probe]\nj_min = 9\nj_max = 4\n"
        "tol = -1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(mentions(e, "j_min"));
    CHECK(mentions(e, "tol"));
  }
}

TEST_CASE("probe defaults") {
  const ExperimentConfig cfg =
      parse_config("[experiment]\nkind = counterexample\n");
  CHECK(cfg.j_min == 4);
  CHECK(cfg.j_max == 40);
  CHECK(cfg.tol == 1e-4);
  CHECK(cfg.num_chords == 3);
  CHECK(cfg.blowup_bar == 1e6);
  CHECK_FALSE(cfg.r_max.has_value());
}
