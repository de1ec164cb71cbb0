#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nuflavor/params.hpp"
#include "nuflavor/types.hpp"

namespace nuflavor {

enum class GridScale { Log, Linear };

const char* grid_name(GridScale g);
GridScale parse_grid(const std::string& name);

/// Distance-sweep configuration. Defaults bracket the interesting range
/// of the reference parameter set: 600 log-spaced points in [1, 1e12] m.
struct SweepConfig {
  Flavor source_flavor = Flavor::Electron;
  double x_min = 1.0;    // meters, > 0
  double x_max = 1e12;   // meters, > x_min
  int points = 600;      // >= 2
  GridScale grid = GridScale::Log;
  bool cross_validate = false;
  OscillationParams params;

  SweepConfig();
};

/// One grid point: distance, the three transition probabilities from the
/// source flavor, the three pairwise concurrences, the three bipartition
/// log-negativities and their average.
struct SweepRow {
  double x = 0.0;
  double p_e = 0.0, p_mu = 0.0, p_tau = 0.0;
  double c_e_mu = 0.0, c_e_tau = 0.0, c_mu_tau = 0.0;
  double en_emu_tau = 0.0, en_etau_mu = 0.0, en_mutau_e = 0.0;
  double avg_en = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
};

/// The CSV header emitted by emit_csv.
inline constexpr const char* kCsvHeader =
    "x_m,P_e,P_mu,P_tau,C_e_mu,C_e_tau,C_mu_tau,"
    "EN_emu_tau,EN_etau_mu,EN_mutau_e,avg_EN";

/// Grid points in increasing order; both endpoints are exact.
std::vector<double> grid_points(const SweepConfig& config);

/// Throws std::invalid_argument on x_min <= 0, x_min >= x_max or
/// points < 2.
void validate_config(const SweepConfig& config);

/// Evaluates every grid point in order. With cross_validate set, each row
/// is checked against the general algorithms (CrossValidationError on
/// disagreement beyond 1e-9).
SweepResult run_sweep(const SweepConfig& config);

/// Shortest round-trip decimal form of a double (locale-independent).
std::string format_double(double v);

/// Header plus one line per row; every number in round-trippable decimal
/// form, so identical configs produce byte-identical output.
void emit_csv(const SweepResult& result, std::ostream& os);

/// {"config": {...resolved parameters and sweep keys...},
///  "rows": [[x, P_e, ...], ...]}
void emit_json(const SweepResult& result, std::ostream& os);

/// Sweep keys (flavor, x_min_m, x_max_m, points, grid, cross_validate)
/// plus the parameter schema of params_from_json; missing keys fall back
/// to defaults, unknown keys are rejected.
SweepConfig config_from_json(const nlohmann::json& doc);

nlohmann::json config_to_json(const SweepConfig& config);

}  // namespace nuflavor
