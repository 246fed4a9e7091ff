#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftn/ensemble.hpp"

namespace ftn {

enum class SweepVar { block_length, snr_db, delta, eps };

std::string to_string(SweepVar var);
std::optional<SweepVar> sweep_var_from_string(std::string_view name);

struct CurveSpec {
  std::string label;
  TrialConfig base;
};

struct SweepSpec {
  SweepVar var = SweepVar::block_length;
  std::vector<double> values;  ///< nonempty, strictly monotone
  std::vector<CurveSpec> curves;

  void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
  std::string label;
  SweepVar var = SweepVar::block_length;
  double value = 0.0;
  TrialConfig config;  ///< effective per-point configuration
  EnsembleResult result;
  std::string status = "ok";
  bool ok = true;
};

TrialConfig apply_sweep_value(TrialConfig base, SweepVar var, double value);

/// One row per (curve, value), curves outermost, values in sweep order.
/// Per-point failures are recorded in the row status; the sweep continues.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 0);

/// Figure presets. fig1: rate vs block length at 20 dB comparing accelerated
/// and Nyquist signaling, MIMO/SISO, optimal/uniform allocation. fig2: rate
/// vs block length at 10 dB for eps = 1e-6 and 1e-9. fig3: rate vs SNR at
/// N=100 for three (delta, beta) pairs, SISO and MIMO. fig4: rate vs delta
/// for N in {20, 200, 2000} with the infinite-block-length bound attached.
SweepSpec preset_fig1(int trials = 1000, std::uint64_t seed = kDefaultSeed);
SweepSpec preset_fig2(int trials = 1000, std::uint64_t seed = kDefaultSeed);
SweepSpec preset_fig3(int trials = 1000, std::uint64_t seed = kDefaultSeed);
SweepSpec preset_fig4(int trials = 1000, std::uint64_t seed = kDefaultSeed);
std::optional<SweepSpec> preset(std::string_view name, int trials = 1000,
                                std::uint64_t seed = kDefaultSeed);

struct DofSlope {
  double slope = 0.0;      ///< bits/s/Hz per dB
  double intercept = 0.0;
  int points = 0;
};

/// Least-squares slope of mean spectral efficiency against SNR over the top
/// window_db of the sweep. Rows must belong to one curve swept over snr_db;
/// throws if fewer than three points fall in the window.
DofSlope dof_slope(std::span<const SweepRow> curve_rows, double window_db = 10.0);

/// CSV with the fixed column set; floating-point fields carry 17 significant
/// digits so emitted files are byte-reproducible and round-trip exactly.
std::string csv_string(const std::vector<SweepRow>& rows);
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);
void write_json(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace ftn
