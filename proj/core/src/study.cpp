#include <fracdtn/study.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fracdtn/bessel.hpp>
#include <fracdtn/dtn.hpp>
#include <fracdtn/errors.hpp>
#include <fracdtn/extension.hpp>
#include <fracdtn/fractional.hpp>
#include <fracdtn/operators.hpp>

namespace fracdtn {

namespace {

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(text.substr(0, eq));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key");
    cfg.kv_[key] = trim(text.substr(eq + 1));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  return parse(in);
}

const std::string& Config::get(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw std::invalid_argument("config: missing key '" + key + "'");
  return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Config::number(const std::string& key) const {
  const std::string& v = get(key);
  std::size_t used = 0;
  const double out = std::stod(v, &used);
  if (trim(v.substr(used)).size())
    throw std::invalid_argument("config: key '" + key + "' is not a number: " + v);
  return out;
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

long Config::integer_or(const std::string& key, long fallback) const {
  if (!has(key)) return fallback;
  const double v = number(key);
  const long n = std::lround(v);
  if (static_cast<double>(n) != v)
    throw std::invalid_argument("config: key '" + key + "' is not an integer");
  return n;
}

std::vector<double> Config::list(const std::string& key) const {
  const std::string& v = get(key);
  std::vector<double> out;
  std::istringstream cells(v);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    const std::string t = trim(cell);
    if (t.empty()) throw std::invalid_argument("config: empty list entry in '" + key + "'");
    std::size_t used = 0;
    out.push_back(std::stod(t, &used));
    if (used != t.size())
      throw std::invalid_argument("config: bad list entry '" + t + "' in '" + key + "'");
  }
  return out;
}

void StageTimer::start(const std::string& stage) {
  if (!active_.empty()) stop();
  active_ = stage;
  started_ = now_seconds();
}

void StageTimer::stop() {
  if (active_.empty()) return;
  const double elapsed = now_seconds() - started_;
  for (auto& [name, secs] : stages_) {
    if (name == active_) {
      secs += elapsed;
      active_.clear();
      return;
    }
  }
  stages_.emplace_back(active_, elapsed);
  active_.clear();
}

void StageTimer::write_csv(std::ostream& out) const {
  out << "stage,seconds\n";
  for (const auto& [name, secs] : stages_) out << name << ',' << fmt17(secs) << "\n";
}

namespace {

struct StudyRow {
  double s;
  long N;
  double T;
  double gamma;
  bool have_spectral = false;
  double error_spectral = 0.0;
  bool have_bessel = false;
  double error_bessel = 0.0;
  bool have_rate = false;
  double rate = 0.0;
};

}  // namespace

void run_convergence_study(const Config& cfg, std::ostream& out, StageTimer* timer) {
  StageTimer local;
  if (!timer) timer = &local;

  timer->start("ingest");
  const std::string source = cfg.get("operator.source");
  const std::string format = cfg.get_or("operator.format", "auto");
  OperatorBundle bundle = ingest_operator(source, format);
  const SectorialOperator& op = bundle.op;
  const MeasureSpaceModel& model = bundle.model;
  timer->stop();

  std::vector<double> s_values = cfg.list("study.s");
  if (s_values.empty()) throw std::invalid_argument("study.s must be a non-empty list");
  for (double s : s_values)
    if (!(s > 0.0 && s < 1.0))
      throw std::invalid_argument("study.s entries must lie strictly inside (0,1)");
  std::sort(s_values.begin(), s_values.end());

  std::vector<long> mesh_n;
  if (cfg.has("study.mesh_n")) {
    for (double v : cfg.list("study.mesh_n")) {
      const long n = std::lround(v);
      if (n < 1 || static_cast<double>(n) != v)
        throw std::invalid_argument("study.mesh_n entries must be positive integers");
      mesh_n.push_back(n);
    }
  } else {
    mesh_n = {64, 128, 256, 512};
  }
  if (mesh_n.empty()) throw std::invalid_argument("study.mesh_n must be a non-empty list");
  std::sort(mesh_n.begin(), mesh_n.end());

  timer->start("calibration");
  const long quad_nodes = cfg.integer_or("quad.nodes", 700);
  const double u_min = cfg.number_or("quad.u_min", -6.5);
  const double u_max = cfg.number_or("quad.u_max", 4.0);
  const QuadratureRule rule =
      QuadratureRule::double_exponential(static_cast<int>(quad_nodes), u_min, u_max);
  timer->stop();

  const std::string mesh_t_str = cfg.get_or("mesh.t", "auto");
  const std::string mesh_gamma_str = cfg.get_or("mesh.gamma", "auto");

  // Diagonal operators admit a per-eigenvalue scalar reference.
  bool diagonal = true;
  for (Index i = 0; i < model.dim() && diagonal; ++i)
    for (Index j = 0; j < model.dim(); ++j)
      if (i != j && op.A(i, j) != Complex(0.0, 0.0)) {
        diagonal = false;
        break;
      }

  std::vector<StudyRow> rows;
  for (double s : s_values) {
    bool have_ref = true;
    Matrix ref;
    double ref_norm = 0.0;
    timer->start("verify");
    try {
      ref = fractional_constant(s) * frac_power_spectral_matrix(op, model, s);
      ref_norm = ref.norm();
    } catch (const ConvergenceError&) {
      have_ref = false;
    }
    timer->stop();

    double prev_err = 0.0;
    long prev_n = 0;
    for (long N : mesh_n) {
      StudyRow row;
      row.s = s;
      row.N = N;
      double T;
      if (mesh_t_str == "auto") {
        if (!(op.coercivity > 0.0))
          throw std::invalid_argument(
              "mesh.t = auto needs a coercive operator; set mesh.t explicitly");
        T = 8.0 / std::sqrt(op.coercivity);
      } else {
        T = cfg.number("mesh.t");
      }
      const double gamma = mesh_gamma_str == "auto"
                               ? std::max(1.0, 1.5 / std::min(s, 1.0 - s))
                               : cfg.number("mesh.gamma");
      row.T = T;
      row.gamma = gamma;
      const GradedMesh mesh(T, static_cast<int>(N), gamma);

      timer->start("solve");
      const Matrix dtn = dtn_matrix(op, model, s, mesh);
      timer->stop();

      timer->start("verify");
      if (have_ref && ref_norm > 0.0) {
        row.have_spectral = true;
        row.error_spectral = (dtn - ref).norm() / ref_norm;
        if (prev_n > 0 && N == 2 * prev_n && row.error_spectral > 0.0) {
          row.have_rate = true;
          row.rate = std::log2(prev_err / row.error_spectral);
        }
        prev_err = row.error_spectral;
        prev_n = N;
      }
      if (diagonal) {
        double worst = 0.0;
        bool ok = true;
        for (Index i = 0; i < model.dim() && ok; ++i) {
          const Complex lam = op.A(i, i);
          if (!(lam.imag() == 0.0) || !(lam.real() > 0.0)) {
            ok = false;
            break;
          }
          SectorialOperator scalar;
          scalar.A = Matrix::Constant(1, 1, lam);
          scalar.continuity = lam.real();
          scalar.coercivity = lam.real();
          scalar.sector_angle = 0.0;
          const MeasureSpaceModel unit = MeasureSpaceModel::unit(1);
          DtnOptions opts;
          opts.compute_energy = false;
          const ExtensionSolution sol =
              solve_dirichlet(scalar, unit, s, Vector::Ones(1), mesh, opts);
          for (int j = 0; j <= mesh.intervals(); ++j) {
            const double exact = scalar_bessel_normalized(lam.real(), s, mesh.node(j), rule);
            worst = std::max(worst, std::abs(sol.u.values()(j, 0) - exact));
          }
        }
        if (ok) {
          row.have_bessel = true;
          row.error_bessel = worst;
        }
      }
      timer->stop();
      rows.push_back(row);
    }
  }

  timer->start("output");
  std::map<std::string, std::string> resolved = cfg.entries();
  resolved["operator.source"] = source;
  resolved["operator.format"] = format;
  resolved.emplace("mesh.t", mesh_t_str);
  resolved.emplace("mesh.gamma", mesh_gamma_str);
  resolved["quad.nodes"] = std::to_string(quad_nodes);
  resolved["quad.u_min"] = fmt17(u_min);
  resolved["quad.u_max"] = fmt17(u_max);
  resolved["study.seed"] = std::to_string(cfg.integer_or("study.seed", 20240801));
  {
    std::string joined;
    for (std::size_t i = 0; i < s_values.size(); ++i)
      joined += (i ? "," : "") + std::string(fmt17(s_values[i]));
    resolved["study.s"] = joined;
    joined.clear();
    for (std::size_t i = 0; i < mesh_n.size(); ++i)
      joined += (i ? "," : "") + std::to_string(mesh_n[i]);
    resolved["study.mesh_n"] = joined;
  }
  out << "# convergence study\n";
  for (const auto& [k, v] : resolved) out << "# " << k << " = " << v << "\n";
  out << "s,N,T,gamma,error_spectral,error_bessel,rate\n";
  for (const auto& r : rows) {
    out << fmt17(r.s) << ',' << r.N << ',' << fmt17(r.T) << ',' << fmt17(r.gamma) << ',';
    if (r.have_spectral) out << fmt17(r.error_spectral);
    out << ',';
    if (r.have_bessel) out << fmt17(r.error_bessel);
    out << ',';
    if (r.have_rate) out << fmt17(r.rate);
    out << "\n";
  }
  timer->stop();
}

void run_convergence_study(const Config& cfg) {
  StageTimer timer;
  std::ostringstream buffer;
  run_convergence_study(cfg, buffer, &timer);
  const std::string path = cfg.get_or("output.path", "study.csv");
  {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << buffer.str();
    if (!out.good()) throw std::runtime_error("write to " + path + " failed");
  }
  if (cfg.has("profile.path")) {
    std::ofstream out(cfg.get("profile.path"));
    if (!out) throw std::runtime_error("cannot open " + cfg.get("profile.path") + " for writing");
    timer.write_csv(out);
  }
}

}  // namespace fracdtn
