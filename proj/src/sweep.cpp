#include "nuflavor/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "nuflavor/entanglement.hpp"
#include "nuflavor/wavepacket.hpp"

namespace nuflavor {

const char* grid_name(GridScale g) {
  return g == GridScale::Log ? "log" : "linear";
}

GridScale parse_grid(const std::string& name) {
  if (name == "log") return GridScale::Log;
  if (name == "linear") return GridScale::Linear;
  throw std::invalid_argument("unknown grid '" + name +
                              "' (expected log or linear)");
}

SweepConfig::SweepConfig() : params(default_params()) {}

void validate_config(const SweepConfig& config) {
  if (!(config.x_min > 0.0)) {
    throw std::invalid_argument("x_min must be positive");
  }
  if (!(config.x_min < config.x_max)) {
    throw std::invalid_argument("x_min must be smaller than x_max");
  }
  if (config.points < 2) {
    throw std::invalid_argument("points must be at least 2");
  }
}

std::vector<double> grid_points(const SweepConfig& config) {
  validate_config(config);
  const int n = config.points;
  std::vector<double> xs(n);
  if (config.grid == GridScale::Log) {
    const double la = std::log(config.x_min);
    const double lb = std::log(config.x_max);
    for (int i = 0; i < n; ++i) {
      xs[i] = std::exp(la + (lb - la) * i / (n - 1));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      xs[i] = config.x_min + (config.x_max - config.x_min) * i / (n - 1);
    }
  }
  xs.front() = config.x_min;
  xs.back() = config.x_max;
  return xs;
}

SweepResult run_sweep(const SweepConfig& config) {
  SweepResult result;
  result.config = config;
  const std::vector<double> xs = grid_points(config);
  result.rows.reserve(xs.size());
  for (double x : xs) {
    const FlavorKernel kernel = flavor_kernel(config.source_flavor, x,
                                              config.params);
    const EntanglementReport rep =
        report_from_kernel(kernel, config.cross_validate);
    SweepRow row;
    row.x = x;
    row.p_e = kernel.entries(0, 0).real();
    row.p_mu = kernel.entries(1, 1).real();
    row.p_tau = kernel.entries(2, 2).real();
    row.c_e_mu = rep.concurrence[0];
    row.c_e_tau = rep.concurrence[1];
    row.c_mu_tau = rep.concurrence[2];
    row.en_emu_tau = rep.log_negativity[0];
    row.en_etau_mu = rep.log_negativity[1];
    row.en_mutau_e = rep.log_negativity[2];
    row.avg_en = rep.average_log_negativity;
    result.rows.push_back(row);
  }
  return result;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit_csv(const SweepResult& result, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const SweepRow& r : result.rows) {
    os << format_double(r.x) << ',' << format_double(r.p_e) << ','
       << format_double(r.p_mu) << ',' << format_double(r.p_tau) << ','
       << format_double(r.c_e_mu) << ',' << format_double(r.c_e_tau) << ','
       << format_double(r.c_mu_tau) << ',' << format_double(r.en_emu_tau)
       << ',' << format_double(r.en_etau_mu) << ','
       << format_double(r.en_mutau_e) << ',' << format_double(r.avg_en)
       << '\n';
  }
  os.flush();
  if (!os.good()) throw std::ios_base::failure("failed to write CSV output");
}

nlohmann::json config_to_json(const SweepConfig& config) {
  nlohmann::json doc = params_to_json(config.params);
  doc["flavor"] = flavor_name(config.source_flavor);
  doc["x_min_m"] = config.x_min;
  doc["x_max_m"] = config.x_max;
  doc["points"] = config.points;
  doc["grid"] = grid_name(config.grid);
  doc["cross_validate"] = config.cross_validate;
  return doc;
}

void emit_json(const SweepResult& result, std::ostream& os) {
  nlohmann::json doc;
  doc["config"] = config_to_json(result.config);
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRow& r : result.rows) {
    rows.push_back({r.x, r.p_e, r.p_mu, r.p_tau, r.c_e_mu, r.c_e_tau,
                    r.c_mu_tau, r.en_emu_tau, r.en_etau_mu, r.en_mutau_e,
                    r.avg_en});
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
  os.flush();
  if (!os.good()) throw std::ios_base::failure("failed to write JSON output");
}

SweepConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("sweep config must be a JSON object");
  }
  static const char* kKnownKeys[] = {
      "flavor",       "x_min_m",      "x_max_m",      "points",
      "grid",         "cross_validate",
      "sin2_theta12", "sin2_theta13", "sin2_theta23", "delta_cp_rad",
      "dm2_21_ev2",   "dm2_atm_ev2",  "dm2_31_ev2",   "dm2_32_ev2",
      "energy_gev",   "sigma_p_gev"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const char* key : kKnownKeys) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument("unknown config key '" + it.key() + "'");
    }
  }

  SweepConfig config;
  config.params = params_from_json(doc);
  if (auto it = doc.find("flavor"); it != doc.end()) {
    config.source_flavor = parse_flavor(it->get<std::string>());
  }
  if (auto it = doc.find("x_min_m"); it != doc.end()) {
    config.x_min = it->get<double>();
  }
  if (auto it = doc.find("x_max_m"); it != doc.end()) {
    config.x_max = it->get<double>();
  }
  if (auto it = doc.find("points"); it != doc.end()) {
    config.points = it->get<int>();
  }
  if (auto it = doc.find("grid"); it != doc.end()) {
    config.grid = parse_grid(it->get<std::string>());
  }
  if (auto it = doc.find("cross_validate"); it != doc.end()) {
    config.cross_validate = it->get<bool>();
  }
  validate_config(config);
  return config;
}

}  // namespace nuflavor
