#include "ftn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ftn {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

}  // namespace

std::string to_string(SweepVar var) {
  switch (var) {
    case SweepVar::block_length: return "N";
    case SweepVar::snr_db: return "snr_db";
    case SweepVar::delta: return "delta";
    case SweepVar::eps: return "eps";
  }
  return "?";
}

std::optional<SweepVar> sweep_var_from_string(std::string_view name) {
  if (name == "N") return SweepVar::block_length;
  if (name == "snr_db") return SweepVar::snr_db;
  if (name == "delta") return SweepVar::delta;
  if (name == "eps") return SweepVar::eps;
  return std::nullopt;
}

void SweepSpec::validate() const {
  if (curves.empty()) throw std::invalid_argument("sweep: empty curve list");
  if (values.empty()) throw std::invalid_argument("sweep: empty value list");
  const bool increasing = values.size() < 2 || values[1] > values[0];
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const bool step_up = values[i + 1] > values[i];
    if (step_up != increasing || values[i + 1] == values[i])
      throw std::invalid_argument("sweep: values must be strictly monotone");
  }
  for (const auto& c : curves) c.base.validate();
}

TrialConfig apply_sweep_value(TrialConfig base, SweepVar var, double value) {
  switch (var) {
    case SweepVar::block_length:
      base.block_length = static_cast<int>(std::lround(value));
      break;
    case SweepVar::snr_db: base.snr_db = value; break;
    case SweepVar::delta: base.delta = value; break;
    case SweepVar::eps: base.eps = value; break;
  }
  return base;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(spec.curves.size() * spec.values.size());
  for (const auto& curve : spec.curves)
    for (double value : spec.values) {
      SweepRow row;
      row.label = curve.label;
      row.var = spec.var;
      row.value = value;
      row.config = apply_sweep_value(curve.base, spec.var, value);
      try {
        row.result = run_ensemble(row.config, threads);
      } catch (const std::exception& e) {
        row.ok = false;
        row.status = sanitize(e.what());
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

namespace {

std::vector<double> default_block_lengths() { return {10, 20, 50, 100, 200, 300, 400, 500}; }

TrialConfig preset_base(int trials, std::uint64_t seed) {
  TrialConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.beta = 0.5;
  cfg.half_width = 10;
  return cfg;
}

}  // namespace

SweepSpec preset_fig1(int trials, std::uint64_t seed) {
  SweepSpec spec;
  spec.var = SweepVar::block_length;
  spec.values = default_block_lengths();
  TrialConfig base = preset_base(trials, seed);
  base.snr_db = 20.0;
  base.eps = 1e-6;

  auto curve = [&](std::string label, int ant, double delta, AllocationMode mode) {
    TrialConfig c = base;
    c.tx = c.rx = ant;
    c.delta = delta;
    c.allocation = mode;
    spec.curves.push_back({std::move(label), c});
  };
  curve("mimo-ftn", 2, 0.67, AllocationMode::optimal);
  curve("mimo-ftn-uniform", 2, 0.67, AllocationMode::uniform);
  curve("mimo-nyquist", 2, 1.0, AllocationMode::optimal);
  curve("siso-ftn", 1, 0.67, AllocationMode::optimal);
  curve("siso-nyquist", 1, 1.0, AllocationMode::optimal);
  return spec;
}

SweepSpec preset_fig2(int trials, std::uint64_t seed) {
  SweepSpec spec;
  spec.var = SweepVar::block_length;
  spec.values = default_block_lengths();
  TrialConfig base = preset_base(trials, seed);
  base.snr_db = 10.0;

  for (double delta : {0.67, 1.0})
    for (double eps : {1e-6, 1e-9}) {
      TrialConfig c = base;
      c.delta = delta;
      c.eps = eps;
      const std::string kind = delta < 1.0 ? "ftn" : "nyquist";
      spec.curves.push_back({kind + (eps < 1e-7 ? "-eps1e-9" : "-eps1e-6"), c});
    }
  return spec;
}

SweepSpec preset_fig3(int trials, std::uint64_t seed) {
  SweepSpec spec;
  spec.var = SweepVar::snr_db;
  for (int s = 0; s <= 30; s += 2) spec.values.push_back(s);
  TrialConfig base = preset_base(trials, seed);
  base.block_length = 100;
  base.eps = 1e-6;

  struct Shape { double delta, beta; const char* tag; };
  const Shape shapes[] = {{0.67, 0.5, "ftn-b0.5"}, {1.0, 0.5, "nyquist-b0.5"},
                          {0.67, 0.6, "ftn-b0.6"}};
  for (int ant : {1, 2})
    for (const auto& sh : shapes) {
      TrialConfig c = base;
      c.tx = c.rx = ant;
      c.delta = sh.delta;
      c.beta = sh.beta;
      spec.curves.push_back({std::string(ant == 1 ? "siso-" : "mimo-") + sh.tag, c});
    }
  return spec;
}

SweepSpec preset_fig4(int trials, std::uint64_t seed) {
  SweepSpec spec;
  spec.var = SweepVar::delta;
  spec.values = {0.67, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95, 1.0};
  TrialConfig base = preset_base(trials, seed);
  base.snr_db = 20.0;
  base.eps = 1e-6;
  base.capacity_bound = true;

  for (int n : {20, 200, 2000}) {
    TrialConfig c = base;
    c.block_length = n;
    spec.curves.push_back({"n" + std::to_string(n), c});
  }
  return spec;
}

std::optional<SweepSpec> preset(std::string_view name, int trials, std::uint64_t seed) {
  if (name == "fig1") return preset_fig1(trials, seed);
  if (name == "fig2") return preset_fig2(trials, seed);
  if (name == "fig3") return preset_fig3(trials, seed);
  if (name == "fig4") return preset_fig4(trials, seed);
  return std::nullopt;
}

DofSlope dof_slope(std::span<const SweepRow> curve_rows, double window_db) {
  double top = -1e300;
  for (const auto& r : curve_rows)
    if (r.var == SweepVar::snr_db && r.ok) top = std::max(top, r.value);
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : curve_rows)
    if (r.var == SweepVar::snr_db && r.ok && r.value >= top - window_db)
      pts.emplace_back(r.value, r.result.mean_se);
  if (pts.size() < 3)
    throw std::invalid_argument("dof_slope: need at least three points in the window");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  DofSlope out;
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.intercept = (sy - out.slope * sx) / n;
  out.points = static_cast<int>(pts.size());
  return out;
}

namespace {

const char* kCsvHeader =
    "sweep_var,sweep_value,K,M,N,L,delta,beta,eps,snr_db,allocation_mode,trials,seed,"
    "mean_mccr_bits_per_cu,mean_se_bits_per_s_hz,std_error,capacity_bound_bits_per_s_hz,"
    "status";

std::string row_to_csv(const SweepRow& r) {
  std::string line;
  line += to_string(r.var);
  line += ',' + fmt17(r.value);
  line += ',' + std::to_string(r.config.tx);
  line += ',' + std::to_string(r.config.rx);
  line += ',' + std::to_string(r.config.block_length);
  line += ',' + std::to_string(r.config.half_width);
  line += ',' + fmt17(r.config.delta);
  line += ',' + fmt17(r.config.beta);
  line += ',' + fmt17(r.config.eps);
  line += ',' + fmt17(r.config.snr_db);
  line += ',';
  line += r.config.allocation == AllocationMode::optimal ? "optimal" : "uniform";
  line += ',' + std::to_string(r.config.trials);
  line += ',' + std::to_string(r.config.seed);
  if (r.ok) {
    line += ',' + fmt17(r.result.mean_rate);
    line += ',' + fmt17(r.result.mean_se);
    line += ',' + fmt17(r.result.std_error);
    line += ',';
    if (r.config.capacity_bound) line += fmt17(r.result.mean_bound_se);
  } else {
    line += ",,,,";
  }
  line += ',' + sanitize(r.status);
  return line;
}

}  // namespace

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += row_to_csv(r);
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write output file: " + path);
  os << csv_string(rows);
  if (!os.flush()) throw std::runtime_error("cannot write output file: " + path);
}

void write_json(const std::vector<SweepRow>& rows, const std::string& path) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{
        {"sweep_var", to_string(r.var)},
        {"sweep_value", r.value},
        {"K", r.config.tx},
        {"M", r.config.rx},
        {"N", r.config.block_length},
        {"L", r.config.half_width},
        {"delta", r.config.delta},
        {"beta", r.config.beta},
        {"eps", r.config.eps},
        {"snr_db", r.config.snr_db},
        {"allocation_mode",
         r.config.allocation == AllocationMode::optimal ? "optimal" : "uniform"},
        {"trials", r.config.trials},
        {"seed", r.config.seed},
        {"status", r.status},
    };
    if (r.ok) {
      j["mean_mccr_bits_per_cu"] = r.result.mean_rate;
      j["mean_se_bits_per_s_hz"] = r.result.mean_se;
      j["std_error"] = r.result.std_error;
      if (r.config.capacity_bound)
        j["capacity_bound_bits_per_s_hz"] = r.result.mean_bound_se;
    }
    arr.push_back(std::move(j));
  }
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write output file: " + path);
  os << arr.dump(2) << '\n';
  if (!os.flush()) throw std::runtime_error("cannot write output file: " + path);
}

}  // namespace ftn
