// Command-line front end: distance sweeps of transition probabilities and
// entanglement measures, emitted as CSV or JSON.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nuflavor/entanglement.hpp"
#include "nuflavor/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCrossValidation = 2;
constexpr int kExitIo = 3;

struct CliOptions {
  std::string flavor;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<int> points;
  std::string grid;
  std::optional<double> delta;
  std::string config_path;
  std::string format = "csv";
  bool cross_validate = false;
  std::string out_path;
};

void add_common_options(CLI::App* sub, CliOptions& opt, bool with_measures) {
  sub->add_option("--flavor", opt.flavor, "Source flavor: e, mu or tau");
  sub->add_option("--xmin", opt.x_min, "Smallest distance in meters (> 0)");
  sub->add_option("--xmax", opt.x_max, "Largest distance in meters");
  sub->add_option("--points", opt.points, "Number of grid points (>= 2)");
  sub->add_option("--grid", opt.grid, "Grid spacing: log or linear");
  sub->add_option("--delta", opt.delta, "CP-violating phase in radians");
  sub->add_option("--config", opt.config_path, "JSON config file");
  sub->add_option("--format", opt.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", opt.out_path,
                  "Output file (default: standard output)");
  if (with_measures) {
    sub->add_flag("--cross-validate", opt.cross_validate,
                  "Re-derive every measure with the general algorithms and "
                  "require agreement");
  }
}

nuflavor::SweepConfig resolve_config(const CliOptions& opt) {
  nuflavor::SweepConfig config;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) {
      throw std::invalid_argument("cannot open config file '" +
                                  opt.config_path + "'");
    }
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("cannot parse config file: " +
                                  std::string(e.what()));
    }
    config = nuflavor::config_from_json(doc);
  }
  if (!opt.flavor.empty()) {
    config.source_flavor = nuflavor::parse_flavor(opt.flavor);
  }
  if (opt.x_min) config.x_min = *opt.x_min;
  if (opt.x_max) config.x_max = *opt.x_max;
  if (opt.points) config.points = *opt.points;
  if (!opt.grid.empty()) config.grid = nuflavor::parse_grid(opt.grid);
  if (opt.cross_validate) config.cross_validate = true;
  if (opt.delta) {
    const auto& p = config.params;
    config.params = nuflavor::make_params(p.angles, *opt.delta, p.dm2_21,
                                          p.dm2_atm, p.energy, p.sigma_p);
  }
  nuflavor::validate_config(config);
  return config;
}

// Column subsets for the prob / measures subcommands; 0 is the x column.
const std::vector<int> kAllColumns = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
const std::vector<int> kProbColumns = {0, 1, 2, 3};
const std::vector<int> kMeasureColumns = {0, 4, 5, 6, 7, 8, 9, 10};

double row_value(const nuflavor::SweepRow& r, int col) {
  const double values[11] = {r.x,        r.p_e,       r.p_mu,      r.p_tau,
                             r.c_e_mu,   r.c_e_tau,   r.c_mu_tau,
                             r.en_emu_tau, r.en_etau_mu, r.en_mutau_e,
                             r.avg_en};
  return values[col];
}

std::vector<std::string> header_names() {
  std::vector<std::string> names;
  std::stringstream ss(nuflavor::kCsvHeader);
  std::string item;
  while (std::getline(ss, item, ',')) names.push_back(item);
  return names;
}

void write_csv(const nuflavor::SweepResult& result,
               const std::vector<int>& cols, std::ostream& os) {
  if (cols.size() == kAllColumns.size()) {
    nuflavor::emit_csv(result, os);
    return;
  }
  const auto names = header_names();
  for (size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << names[cols[i]];
  }
  os << '\n';
  for (const auto& r : result.rows) {
    for (size_t i = 0; i < cols.size(); ++i) {
      os << (i ? "," : "") << nuflavor::format_double(row_value(r, cols[i]));
    }
    os << '\n';
  }
  os.flush();
  if (!os.good()) throw std::ios_base::failure("failed to write CSV output");
}

void write_json(const nuflavor::SweepResult& result,
                const std::vector<int>& cols, std::ostream& os) {
  if (cols.size() == kAllColumns.size()) {
    nuflavor::emit_json(result, os);
    return;
  }
  const auto names = header_names();
  nlohmann::json doc;
  doc["config"] = nuflavor::config_to_json(result.config);
  nlohmann::json columns = nlohmann::json::array();
  for (int c : cols) columns.push_back(names[c]);
  doc["columns"] = std::move(columns);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : result.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (int c : cols) row.push_back(row_value(r, c));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
  os.flush();
  if (!os.good()) throw std::ios_base::failure("failed to write JSON output");
}

void emit(const nuflavor::SweepResult& result, const CliOptions& opt,
          const std::vector<int>& cols) {
  if (opt.out_path.empty()) {
    if (opt.format == "csv") {
      write_csv(result, cols, std::cout);
    } else {
      write_json(result, cols, std::cout);
    }
    return;
  }
  std::ofstream out(opt.out_path);
  if (!out) {
    throw std::ios_base::failure("cannot open output file '" + opt.out_path +
                                 "'");
  }
  if (opt.format == "csv") {
    write_csv(result, cols, out);
  } else {
    write_json(result, cols, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-flavor neutrino oscillations in the time-averaged "
               "wave-packet description: transition probabilities and "
               "flavor-entanglement measures as a function of distance"};
  app.require_subcommand(1);

  CliOptions sweep_opt, prob_opt, measures_opt, params_opt_cli;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Probabilities and all entanglement measures per grid point");
  add_common_options(sweep, sweep_opt, true);
  CLI::App* prob =
      app.add_subcommand("prob", "Transition probabilities only");
  add_common_options(prob, prob_opt, false);
  CLI::App* measures = app.add_subcommand(
      "measures", "Concurrences and logarithmic negativities only");
  add_common_options(measures, measures_opt, true);
  CLI::App* params_cmd = app.add_subcommand(
      "params", "Print the resolved parameter set as JSON");
  params_cmd->add_option("--config", params_opt_cli.config_path,
                         "JSON config file");
  params_cmd->add_option("--delta", params_opt_cli.delta,
                         "CP-violating phase in radians");
  params_cmd->add_option("--out", params_opt_cli.out_path,
                         "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*params_cmd) {
      const nuflavor::SweepConfig config = resolve_config(params_opt_cli);
      const std::string text =
          nuflavor::params_to_json(config.params).dump(2) + "\n";
      if (params_opt_cli.out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(params_opt_cli.out_path);
        if (!out) {
          throw std::ios_base::failure("cannot open output file '" +
                                       params_opt_cli.out_path + "'");
        }
        out << text;
        if (!out.good()) {
          throw std::ios_base::failure("failed to write output");
        }
      }
      return kExitOk;
    }

    const CliOptions& opt = *sweep ? sweep_opt : (*prob ? prob_opt
                                                        : measures_opt);
    const std::vector<int>& cols =
        *sweep ? kAllColumns : (*prob ? kProbColumns : kMeasureColumns);
    const nuflavor::SweepConfig config = resolve_config(opt);
    const nuflavor::SweepResult result = nuflavor::run_sweep(config);
    emit(result, opt, cols);
    return kExitOk;
  } catch (const nuflavor::CrossValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCrossValidation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
