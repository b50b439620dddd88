#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <fracdtn/types.hpp>

namespace fracdtn {

// Flat key-value configuration, one "section.key = value" per line, '#'
// comments, later entries override earlier ones.
class Config {
 public:
  static Config parse(std::istream& in);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  long integer_or(const std::string& key, long fallback) const;
  // Comma-separated list of numbers.
  std::vector<double> list(const std::string& key) const;
  void set(const std::string& key, const std::string& value) { kv_[key] = value; }
  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Wall-clock accumulator for named pipeline stages.
class StageTimer {
 public:
  void start(const std::string& stage);
  void stop();
  const std::vector<std::pair<std::string, double>>& stages() const { return stages_; }
  // "stage,seconds" CSV; header only when no stage was recorded.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::pair<std::string, double>> stages_;
  std::string active_;
  double started_ = 0.0;
};

// Convergence study of the discrete map against the closed-form references.
// Emits CSV rows (s, N, T, gamma, error_spectral, error_bessel, rate), sorted
// by (s, N); '#' header lines echo the resolved configuration. Recognized
// keys, with defaults:
//   operator.source  (required)      operator.format = auto
//   study.s          (required list) study.mesh_n    = 64,128,256,512
//   mesh.t = auto                    mesh.gamma      = auto
//   quad.nodes = 700                 quad.u_min = -6.5   quad.u_max = 4
//   study.seed = 20240801            output.path     = study.csv
//   profile.path (optional)
void run_convergence_study(const Config& cfg, std::ostream& out, StageTimer* timer = nullptr);
// Writes output.path and, when set, profile.path.
void run_convergence_study(const Config& cfg);

}  // namespace fracdtn
