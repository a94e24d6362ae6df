#include "bregman/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bregman {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

const std::map<std::string, std::set<std::string>> kSchema = {
    {"experiment", {"kind", "seed"}},
    {"generator", {"name"}},
    {"domain", {"kind", "dim"}},
    {"objective", {"name", "c", "center"}},
    {"algorithm",
     {"name", "K", "alpha0", "exponent", "alpha", "halfspace", "witness"}},
    {"probe",
     {"target", "curves", "num_chords", "j_min", "j_max", "tol", "r_max",
      "blowup_x", "blowup_y", "blowup_bar", "seg_x", "seg_y", "z0", "k_max",
      "diagnose_tol"}},
};

const std::set<std::string> kKinds = {"run",            "probe-a", "probe-b",
                                      "counterexample", "blowup",  "diagnose"};
const std::set<std::string> kGenerators = {"neg_entropy", "fermi_dirac",
                                           "ball_gen", "half_squared_norm"};
const std::set<std::string> kObjectives = {"linear", "quadratic",
                                           "abs_deviation", "constant"};
const std::set<std::string> kAlgorithms = {"mirror_descent", "bregman_gradient",
                                           "proximal_d",
                                           "alternating_projections"};
const std::set<std::string> kDomains = {"simplex", "box", "ball"};
const std::set<std::string> kCurves = {"chord", "tangential"};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

struct Parser {
  std::vector<std::string> errors;

  bool parse_double(const std::string& key, const std::string& v, double& out) {
    try {
      size_t pos = 0;
      out = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return true;
    } catch (const std::exception&) {
      errors.push_back(key + ": expected a number, got '" + v + "'");
      return false;
    }
  }

  bool parse_int(const std::string& key, const std::string& v, long long& out) {
    try {
      size_t pos = 0;
      out = std::stoll(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return true;
    } catch (const std::exception&) {
      errors.push_back(key + ": expected an integer, got '" + v + "'");
      return false;
    }
  }

  bool parse_vec(const std::string& key, const std::string& v, Vec& out) {
    std::vector<double> vals;
    std::stringstream ss(v);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cell = trim(cell);
      if (cell.empty()) continue;
      double d;
      if (!parse_double(key, cell, d)) return false;
      vals.push_back(d);
    }
    if (vals.empty()) {
      errors.push_back(key + ": expected a comma-separated vector");
      return false;
    }
    out = Eigen::Map<Vec>(vals.data(), static_cast<Eigen::Index>(vals.size()));
    return true;
  }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> errors)
    : std::runtime_error("config errors: " + join(errors)),
      errors_(std::move(errors)) {}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  Parser p;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  bool have_kind = false, have_K = false;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (!line.empty()) cfg.echo_lines.push_back(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        p.errors.push_back("malformed section header: " + line);
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!kSchema.count(section)) {
        p.errors.push_back("unknown section [" + section + "]");
        section.clear();
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      p.errors.push_back("expected key=value, got: " + line);
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) {
      p.errors.push_back("key outside any section: " + key);
      continue;
    }
    if (!kSchema.at(section).count(key)) {
      p.errors.push_back("unknown key '" + key + "' in [" + section + "]");
      continue;
    }
    const std::string qual = "[" + section + "] " + key;
    long long i = 0;
    double d = 0.0;
    if (section == "experiment") {
      if (key == "kind") {
        cfg.kind = value;
        have_kind = true;
      } else if (key == "seed" && p.parse_int(qual, value, i)) {
        cfg.seed = static_cast<unsigned long long>(i);
      }
    } else if (section == "generator") {
      cfg.generator = value;
    } else if (section == "domain") {
      if (key == "kind") {
        cfg.domain_kind = value;
      } else if (key == "dim" && p.parse_int(qual, value, i)) {
        cfg.dim = static_cast<int>(i);
      }
    } else if (section == "objective") {
      if (key == "name") {
        cfg.objective = value;
      } else if (key == "c") {
        p.parse_vec(qual, value, cfg.objective_c);
      } else if (key == "center") {
        p.parse_vec(qual, value, cfg.objective_center);
      }
    } else if (section == "algorithm") {
      if (key == "name") {
        cfg.algorithm = value;
      } else if (key == "K") {
        if (p.parse_int(qual, value, i)) {
          cfg.iterations = static_cast<int>(i);
          have_K = true;
        }
      } else if (key == "alpha0" && p.parse_double(qual, value, d)) {
        cfg.alpha0 = d;
      } else if (key == "exponent" && p.parse_double(qual, value, d)) {
        cfg.exponent = d;
      } else if (key == "alpha" && p.parse_double(qual, value, d)) {
        cfg.alpha = d;
      } else if (key == "halfspace") {
        Vec v;
        if (p.parse_vec(qual, value, v)) {
          if (v.size() < 2) {
            p.errors.push_back(qual + ": need normal coefficients plus offset");
          } else {
            cfg.halfspace_normals.push_back(v.head(v.size() - 1));
            cfg.halfspace_offsets.push_back(v[v.size() - 1]);
          }
        }
      } else if (key == "witness") {
        Vec v;
        if (p.parse_vec(qual, value, v)) cfg.witness = v;
      }
    } else if (section == "probe") {
      if (key == "target") {
        p.parse_vec(qual, value, cfg.probe_target);
      } else if (key == "curves") {
        cfg.curves.clear();
        std::stringstream ss(value);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
          cell = trim(cell);
          if (cell.empty()) continue;
          if (!kCurves.count(cell)) {
            p.errors.push_back(qual + ": unknown curve kind '" + cell + "'");
          } else {
            cfg.curves.push_back(cell);
          }
        }
      } else if (key == "num_chords" && p.parse_int(qual, value, i)) {
        cfg.num_chords = static_cast<int>(i);
      } else if (key == "j_min" && p.parse_int(qual, value, i)) {
        cfg.j_min = static_cast<int>(i);
      } else if (key == "j_max" && p.parse_int(qual, value, i)) {
        cfg.j_max = static_cast<int>(i);
      } else if (key == "tol" && p.parse_double(qual, value, d)) {
        cfg.tol = d;
      } else if (key == "r_max" && p.parse_double(qual, value, d)) {
        cfg.r_max = d;
      } else if (key == "blowup_x") {
        p.parse_vec(qual, value, cfg.blowup_x);
      } else if (key == "blowup_y") {
        p.parse_vec(qual, value, cfg.blowup_y);
      } else if (key == "blowup_bar" && p.parse_double(qual, value, d)) {
        cfg.blowup_bar = d;
      } else if (key == "seg_x") {
        p.parse_vec(qual, value, cfg.seg_x);
      } else if (key == "seg_y") {
        p.parse_vec(qual, value, cfg.seg_y);
      } else if (key == "z0") {
        Vec v;
        if (p.parse_vec(qual, value, v)) cfg.z0 = v;
      } else if (key == "k_max" && p.parse_int(qual, value, i)) {
        cfg.k_max = i;
      } else if (key == "diagnose_tol" && p.parse_double(qual, value, d)) {
        cfg.diagnose_tol = d;
      }
    }
  }

  // Cross-field validation.
  if (!have_kind) {
    p.errors.push_back("[experiment] kind: required");
  } else if (!kKinds.count(cfg.kind)) {
    p.errors.push_back("[experiment] kind: unknown kind '" + cfg.kind + "'");
  }
  if (!cfg.generator.empty() && !kGenerators.count(cfg.generator)) {
    p.errors.push_back("[generator] name: unresolvable '" + cfg.generator + "'");
  }
  if (!cfg.objective.empty() && !kObjectives.count(cfg.objective)) {
    p.errors.push_back("[objective] name: unresolvable '" + cfg.objective + "'");
  }
  if (!cfg.algorithm.empty() && !kAlgorithms.count(cfg.algorithm)) {
    p.errors.push_back("[algorithm] name: unresolvable '" + cfg.algorithm + "'");
  }
  if (!cfg.domain_kind.empty() && !kDomains.count(cfg.domain_kind)) {
    p.errors.push_back("[domain] kind: unresolvable '" + cfg.domain_kind + "'");
  }
  if (have_K && cfg.iterations < 1) {
    p.errors.push_back("[algorithm] K: must be >= 1");
  }
  if (cfg.kind == "run" || cfg.kind == "diagnose") {
    if (cfg.generator.empty()) p.errors.push_back("[generator] name: required");
    if (cfg.algorithm.empty()) p.errors.push_back("[algorithm] name: required");
    if (cfg.objective.empty() && cfg.algorithm != "alternating_projections") {
      p.errors.push_back("[objective] name: required");
    }
    if (cfg.algorithm == "alternating_projections" &&
        cfg.halfspace_normals.empty()) {
      p.errors.push_back("[algorithm] halfspace: at least one required");
    }
  } else if (cfg.kind == "probe-b") {
    if (cfg.generator.empty()) p.errors.push_back("[generator] name: required");
    if (cfg.probe_target.size() == 0) {
      p.errors.push_back("[probe] target: required");
    }
  } else if (cfg.kind == "probe-a") {
    if (cfg.generator.empty()) p.errors.push_back("[generator] name: required");
    if (cfg.seg_x.size() == 0) p.errors.push_back("[probe] seg_x: required");
    if (cfg.seg_y.size() == 0) p.errors.push_back("[probe] seg_y: required");
  } else if (cfg.kind == "blowup") {
    if (cfg.generator.empty()) p.errors.push_back("[generator] name: required");
  } else if (cfg.kind == "counterexample") {
    if (cfg.r_max && *cfg.r_max >= 1.0) {
      p.errors.push_back("[probe] r_max: must be < 1 (open interval)");
    }
    if (cfg.r_max && *cfg.r_max <= 0.0) {
      p.errors.push_back("[probe] r_max: must be > 0");
    }
  }
  if (cfg.j_min < 1 || cfg.j_max < cfg.j_min) {
    p.errors.push_back("[probe] j_min/j_max: need 1 <= j_min <= j_max");
  }
  if (!(cfg.tol > 0.0)) p.errors.push_back("[probe] tol: must be positive");

  if (!p.errors.empty()) throw ConfigError(std::move(p.errors));
  return cfg;
}

}  // namespace bregman
