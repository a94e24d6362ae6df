// bregman-lab: experiment front end for the Bregman divergence lab.
//
// bregman-lab <run|probe-a|probe-b|counterexample|blowup|diagnose>
//     --config FILE [--config FILE ...] --out DIR [--jobs N] [--plot COLUMN]

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "bregman/experiment.hpp"

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_one(const std::string& kind, const std::filesystem::path& config_path,
            const std::filesystem::path& outdir,
            const std::optional<std::string>& plot) {
  const bregman::ExperimentConfig cfg =
      bregman::parse_config(slurp(config_path));
  if (cfg.kind != kind) {
    throw std::runtime_error("config kind '" + cfg.kind +
                             "' does not match subcommand '" + kind + "'");
  }
  const bregman::RunRecord rec = bregman::run_experiment(cfg, outdir, plot);
  return rec.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bregman divergence experiment lab"};
  app.require_subcommand(1);

  std::vector<std::string> config_files;
  std::string out_dir;
  std::string plot_column;
  int jobs = 1;

  const std::vector<std::string> kinds = {"run",            "probe-a",
                                          "probe-b",        "counterexample",
                                          "blowup",         "diagnose"};
  for (const auto& kind : kinds) {
    auto* sub = app.add_subcommand(kind);
    sub->add_option("--config", config_files, "experiment config file(s)")
        ->required();
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_option("--jobs", jobs, "run configs concurrently");
    sub->add_option("--plot", plot_column, "emit plot.svg of this column");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string kind = app.get_subcommands().front()->get_name();
  const std::optional<std::string> plot =
      plot_column.empty() ? std::nullopt
                          : std::optional<std::string>(plot_column);

  std::atomic<int> status{0};
  std::atomic<size_t> next{0};
  std::mutex io_mutex;
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= config_files.size()) return;
      const std::filesystem::path cfg_path = config_files[i];
      // Single config writes into --out directly; batches get subdirectories.
      const std::filesystem::path outdir =
          config_files.size() == 1
              ? std::filesystem::path(out_dir)
              : std::filesystem::path(out_dir) / cfg_path.stem();
      try {
        const int s = run_one(kind, cfg_path, outdir, plot);
        int expected = status.load();
        while (expected < s && !status.compare_exchange_weak(expected, s)) {
        }
      } catch (const std::exception& e) {
        std::scoped_lock lock(io_mutex);
        std::cerr << "error [" << cfg_path.string() << "]: " << e.what()
                  << "\n";
        status.store(1);
      }
    }
  };

  const int n_workers = std::max(
      1, std::min<int>(jobs, static_cast<int>(config_files.size())));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return status.load();
}
