// Sweep driver: runs figure presets or custom parameter sweeps of the
// finite-blocklength MIMO faster-than-Nyquist rate model and emits CSV/JSON.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ftn/sweep.hpp"

namespace {

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

// key=value file, one pair per line, '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) out[key] = value;
  }
  return out;
}

void print_summary(const std::vector<ftn::SweepRow>& rows) {
  std::printf("%-22s %10s %14s %14s %10s  %s\n", "curve", ftn::to_string(rows[0].var).c_str(),
              "mccr[b/cu]", "se[b/s/Hz]", "stderr", "status");
  for (const auto& r : rows)
    std::printf("%-22s %10g %14.6f %14.6f %10.2g  %s\n", r.label.c_str(), r.value,
                r.result.mean_rate, r.result.mean_se, r.result.std_error, r.status.c_str());
}

void print_dof_slopes(const std::vector<ftn::SweepRow>& rows) {
  std::map<std::string, std::vector<ftn::SweepRow>> curves;
  for (const auto& r : rows) curves[r.label].push_back(r);
  std::map<std::string, double> slopes;
  std::printf("\nhigh-SNR slopes (top 10 dB window):\n");
  for (const auto& [label, curve] : curves) {
    try {
      const ftn::DofSlope s = ftn::dof_slope(curve);
      slopes[label] = s.slope;
      std::printf("  %-22s %8.4f bits/s/Hz per dB (%d points)\n", label.c_str(), s.slope,
                  s.points);
    } catch (const std::exception& e) {
      std::printf("  %-22s slope unavailable: %s\n", label.c_str(), e.what());
    }
  }
  // ratios against the weakest natural baseline when present
  for (const char* base : {"siso-nyquist-b0.5", "siso-nyquist"}) {
    if (auto it = slopes.find(base); it != slopes.end()) {
      std::printf("slope ratios vs %s:\n", base);
      for (const auto& [label, s] : slopes)
        if (label != base) std::printf("  %-22s %8.4f\n", label.c_str(), s / it->second);
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-blocklength MIMO faster-than-Nyquist rate sweeps"};

  std::string preset_name, var_name, values_csv, out_path, format = "csv", config_path,
              alloc_name = "optimal";
  int trials = 1000, threads = 0;
  std::uint64_t seed = ftn::kDefaultSeed;
  bool capacity_bound = false, dof = false;
  ftn::TrialConfig base;

  app.add_option("--preset", preset_name, "figure preset: fig1, fig2, fig3 or fig4");
  app.add_option("--var", var_name, "sweep variable: N, snr_db, delta or eps");
  app.add_option("--values", values_csv, "comma-separated sweep values");
  app.add_option("--trials", trials, "Monte Carlo channel realizations per point");
  app.add_option("--seed", seed, "base seed of the trial family");
  app.add_option("--out", out_path, "output file (default <preset|sweep>.<format>)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--alloc", alloc_name, "power allocation: optimal or uniform")
      ->check(CLI::IsMember({"optimal", "uniform"}));
  app.add_flag("--capacity-bound", capacity_bound,
               "attach the infinite-blocklength capacity bound column");
  app.add_option("--config", config_path, "key=value config file (flags take precedence)");
  app.add_option("--threads", threads, "worker threads for trials (0 = auto, 1 = serial)");
  app.add_flag("--dof-slope", dof, "print high-SNR slope estimates after an snr_db sweep");
  app.add_option("--K", base.tx, "transmit antennas");
  app.add_option("--M", base.rx, "receive antennas");
  app.add_option("--N", base.block_length, "block length (symbols)");
  app.add_option("--L", base.half_width, "one-sided ISI taps kept");
  app.add_option("--delta", base.delta, "acceleration factor in (0,1]");
  app.add_option("--beta", base.beta, "raised-cosine roll-off in [0,1]");
  app.add_option("--T", base.symbol_period, "symbol period (time unit of the power budget)");
  app.add_option("--snr", base.snr_db, "SNR in dB");
  app.add_option("--eps", base.eps, "block error probability");

  // Config file first, then flags re-parse on top: precedence flags > file > defaults.
  try {
    for (int i = 1; i < argc - 1; ++i)
      if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (!config_path.empty()) {
      std::vector<std::string> injected;
      for (const auto& [k, v] : read_config_file(config_path)) {
        injected.push_back("--" + k);
        injected.push_back(v);
      }
      std::vector<const char*> cargs{argv[0]};
      for (const auto& s : injected) cargs.push_back(s.c_str());
      for (int i = 1; i < argc; ++i) cargs.push_back(argv[i]);
      app.parse(static_cast<int>(cargs.size()), cargs.data());
    } else {
      app.parse(argc, argv);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    base.trials = trials;
    base.seed = seed;
    base.capacity_bound = capacity_bound;
    base.allocation =
        alloc_name == "uniform" ? ftn::AllocationMode::uniform : ftn::AllocationMode::optimal;

    ftn::SweepSpec spec;
    std::string default_stem = "sweep";
    if (!preset_name.empty()) {
      auto p = ftn::preset(preset_name, trials, seed);
      if (!p) {
        std::fprintf(stderr, "unknown preset '%s'\n", preset_name.c_str());
        return 1;
      }
      spec = *p;
      if (capacity_bound)
        for (auto& c : spec.curves) c.base.capacity_bound = true;
      default_stem = preset_name;
    } else {
      ftn::SweepVar var = ftn::SweepVar::block_length;
      if (!var_name.empty()) {
        auto v = ftn::sweep_var_from_string(var_name);
        if (!v) {
          std::fprintf(stderr, "unknown sweep variable '%s'\n", var_name.c_str());
          return 1;
        }
        var = *v;
        spec.values = parse_values(values_csv);
      } else {
        // no sweep requested: a single point at the configured block length
        spec.values = {static_cast<double>(base.block_length)};
      }
      spec.var = var;
      spec.curves.push_back({"custom", base});
    }

    const std::vector<ftn::SweepRow> rows = ftn::run_sweep(spec, threads);
    print_summary(rows);
    if (dof && spec.var == ftn::SweepVar::snr_db) print_dof_slopes(rows);

    if (out_path.empty()) out_path = default_stem + "." + format;
    if (format == "json")
      ftn::write_json(rows, out_path);
    else
      ftn::write_csv(rows, out_path);
    std::printf("wrote %s\n", out_path.c_str());

    for (const auto& r : rows)
      if (!r.ok) return 2;
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
