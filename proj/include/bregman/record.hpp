#ifndef BREGMAN_RECORD_HPP
#define BREGMAN_RECORD_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace bregman {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Persisted result of one experiment: a numeric table plus the verdict
/// lines that go into report.txt.
struct RunRecord {
  std::vector<std::string> config_echo;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> verdict_lines;
  double wall_seconds = 0.0;
  std::string version = kLibraryVersion;
  bool log_x = false;     // first column is a boundary-distance parameter
  int exit_status = 0;    // 0 verdict matches prediction, 2 mismatch

  int column(const std::string& name) const;  // -1 when absent
};

/// Doubles serialized with 17 significant digits (round-trips bit-exactly).
std::string format_double(double v);

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void read_csv(const std::filesystem::path& path,
              std::vector<std::string>& header,
              std::vector<std::vector<double>>& rows);

void write_report(const std::filesystem::path& path, const RunRecord& record);

}  // namespace bregman

#endif  // BREGMAN_RECORD_HPP
