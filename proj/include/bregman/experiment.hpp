#ifndef BREGMAN_EXPERIMENT_HPP
#define BREGMAN_EXPERIMENT_HPP

#include <filesystem>
#include <optional>
#include <random>

#include "bregman/algorithms.hpp"
#include "bregman/config.hpp"
#include "bregman/probes.hpp"
#include "bregman/record.hpp"

namespace bregman {

/// Component factories shared by the CLI and the tests.
Domain make_domain(const ExperimentConfig& cfg);
Generator make_generator(const ExperimentConfig& cfg);
Objective make_objective(const ExperimentConfig& cfg, const Domain& domain);

/// Deterministic interior sample (used for probe anchors; the seed governs
/// only this sampling).
Vec sample_interior(const Domain& d, std::mt19937_64& rng);

/// Runs the configured experiment, writes <outdir>/record.csv and
/// <outdir>/report.txt (plus plot.svg when a column is selected), and
/// returns the record. record.exit_status is 0 when the verdict matches
/// the theorem prediction, 2 on mismatch. The BREGMAN_LAB_SEED environment
/// variable overrides the config seed.
RunRecord run_experiment(const ExperimentConfig& cfg,
                         const std::filesystem::path& outdir,
                         const std::optional<std::string>& plot_column = {});

}  // namespace bregman

#endif  // BREGMAN_EXPERIMENT_HPP
