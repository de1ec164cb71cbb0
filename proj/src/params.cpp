#include "nuflavor/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace nuflavor {

namespace {

void check_sin2(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) +
                                " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

}  // namespace

double OscillationParams::dm2(int j, int k) const {
  if (j < 1 || j > 3 || k < 1 || k > 3) {
    throw std::invalid_argument("mass index outside {1,2,3}");
  }
  if (j == k) return 0.0;
  if (j < k) return -dm2(k, j);
  if (j == 2) return dm2_21;          // (2,1)
  return k == 1 ? dm2_31 : dm2_32;    // (3,1), (3,2)
}

OscillationParams make_params(const MixingAngles& angles, double delta_cp,
                              double dm2_21, double dm2_atm, double energy,
                              double sigma_p) {
  check_sin2(angles.sin2_theta12, "sin2_theta12");
  check_sin2(angles.sin2_theta13, "sin2_theta13");
  check_sin2(angles.sin2_theta23, "sin2_theta23");
  if (!(energy > 0.0)) throw std::invalid_argument("energy must be positive");
  if (!(sigma_p > 0.0)) throw std::invalid_argument("sigma_p must be positive");

  OscillationParams p;
  p.angles = angles;
  p.delta_cp = delta_cp;
  p.dm2_21 = dm2_21;
  p.dm2_atm = dm2_atm;
  p.dm2_31 = dm2_atm + 0.5 * dm2_21;
  // Derived as a difference so the closure dm2_31 - dm2_32 = dm2_21 holds
  // to within one rounding of the atmospheric scale.
  p.dm2_32 = p.dm2_31 - dm2_21;
  p.energy = energy;
  p.sigma_p = sigma_p;
  return p;
}

OscillationParams default_params() {
  return make_params({0.314, 0.8e-2, 0.45}, 0.0, 7.92e-5, 2.6e-3, 10e9, 1e9);
}

Matrix3c pmns_matrix(const MixingAngles& angles, double delta_cp) {
  check_sin2(angles.sin2_theta12, "sin2_theta12");
  check_sin2(angles.sin2_theta13, "sin2_theta13");
  check_sin2(angles.sin2_theta23, "sin2_theta23");

  const double s12 = std::sqrt(angles.sin2_theta12);
  const double s13 = std::sqrt(angles.sin2_theta13);
  const double s23 = std::sqrt(angles.sin2_theta23);
  const double c12 = std::sqrt(1.0 - angles.sin2_theta12);
  const double c13 = std::sqrt(1.0 - angles.sin2_theta13);
  const double c23 = std::sqrt(1.0 - angles.sin2_theta23);
  const Complex eid = std::exp(Complex(0.0, delta_cp));
  const Complex emid = std::exp(Complex(0.0, -delta_cp));

  Matrix3c u;
  u << c12 * c13, s12 * c13, s13 * emid,
      -s12 * c23 - c12 * s23 * s13 * eid,
      c12 * c23 - s12 * s23 * s13 * eid, s23 * c13,
      s12 * s23 - c12 * c23 * s13 * eid,
      -c12 * s23 - s12 * c23 * s13 * eid, c23 * c13;
  return u;
}

double phase_argument(double dm2, double x_m, double energy_ev) {
  if (!(energy_ev > 0.0)) {
    throw std::invalid_argument("energy must be positive");
  }
  return dm2 * x_m / (2.0 * energy_ev * kHbarC);
}

namespace {

double number_or(const nlohmann::json& doc, const char* key, double fallback) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number()) {
    throw std::invalid_argument(std::string("key '") + key +
                                "' must be a number");
  }
  return it->get<double>();
}

}  // namespace

OscillationParams params_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("parameter document must be a JSON object");
  }
  const OscillationParams def = default_params();
  MixingAngles angles;
  angles.sin2_theta12 = number_or(doc, "sin2_theta12", def.angles.sin2_theta12);
  angles.sin2_theta13 = number_or(doc, "sin2_theta13", def.angles.sin2_theta13);
  angles.sin2_theta23 = number_or(doc, "sin2_theta23", def.angles.sin2_theta23);
  const double delta = number_or(doc, "delta_cp_rad", def.delta_cp);
  const double dm2_21 = number_or(doc, "dm2_21_ev2", def.dm2_21);
  const double dm2_atm = number_or(doc, "dm2_atm_ev2", def.dm2_atm);
  const double energy = number_or(doc, "energy_gev", def.energy / 1e9) * 1e9;
  const double sigma_p = number_or(doc, "sigma_p_gev", def.sigma_p / 1e9) * 1e9;
  return make_params(angles, delta, dm2_21, dm2_atm, energy, sigma_p);
}

nlohmann::json params_to_json(const OscillationParams& params) {
  return nlohmann::json{
      {"sin2_theta12", params.angles.sin2_theta12},
      {"sin2_theta13", params.angles.sin2_theta13},
      {"sin2_theta23", params.angles.sin2_theta23},
      {"delta_cp_rad", params.delta_cp},
      {"dm2_21_ev2", params.dm2_21},
      {"dm2_atm_ev2", params.dm2_atm},
      {"dm2_31_ev2", params.dm2_31},
      {"dm2_32_ev2", params.dm2_32},
      {"energy_gev", params.energy / 1e9},
      {"sigma_p_gev", params.sigma_p / 1e9},
  };
}

}  // namespace nuflavor
