#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "nuflavor/types.hpp"

namespace nuflavor {

/// hbar*c in eV*m; converts natural-unit phases to a meter axis.
inline constexpr double kHbarC = 1.973269804e-7;

/// Mixing angles stored as sin^2(theta_ij), each in [0, 1]. Angles are
/// recovered as theta = asin(sqrt(s2)) in the first quadrant, so every
/// sin(theta_ij) and cos(theta_ij) is non-negative.
struct MixingAngles {
  double sin2_theta12 = 0.0;
  double sin2_theta13 = 0.0;
  double sin2_theta23 = 0.0;
};

/// Full physical configuration of the oscillating system.
///
/// The two independent squared-mass inputs are dm2_21 (solar) and dm2_atm
/// (atmospheric); dm2_31 = dm2_atm + dm2_21/2 and dm2_32 = dm2_31 - dm2_21
/// are derived at construction so the closure dm2_31 - dm2_32 = dm2_21
/// holds to the last representable bit (see make_params).
struct OscillationParams {
  MixingAngles angles;
  double delta_cp = 0.0;  // CP phase, radians
  double dm2_21 = 0.0;    // eV^2
  double dm2_atm = 0.0;   // eV^2, atmospheric input the 31/32 pair derives from
  double dm2_31 = 0.0;    // eV^2
  double dm2_32 = 0.0;    // eV^2
  double energy = 0.0;    // eV
  double sigma_p = 0.0;   // eV, momentum spread of the Gaussian packets

  /// Signed squared-mass difference m_j^2 - m_k^2 for 1-based mass
  /// indices; antisymmetric, zero on the diagonal.
  double dm2(int j, int k) const;
};

/// Builds a parameter set from the independent inputs, validating
/// sin^2 ranges and positivity of energy and sigma_p.
OscillationParams make_params(const MixingAngles& angles, double delta_cp,
                              double dm2_21, double dm2_atm, double energy,
                              double sigma_p);

/// Reference parameter set: sin^2(th12)=0.314, sin^2(th13)=0.008,
/// sin^2(th23)=0.45, delta=0, dm2_21=7.92e-5 eV^2, dm2_atm=2.6e-3 eV^2,
/// E=10 GeV, sigma_p=1 GeV.
OscillationParams default_params();

/// PMNS matrix in the standard parameterization; rows are flavors
/// (e, mu, tau), columns mass indices (1, 2, 3).
Matrix3c pmns_matrix(const MixingAngles& angles, double delta_cp);

inline Matrix3c pmns_matrix(const OscillationParams& params) {
  return pmns_matrix(params.angles, params.delta_cp);
}

/// Dimensionless oscillation phase dm2 * x / (2 E hbar c) for x in meters,
/// dm2 in eV^2 and energy in eV. Rejects non-positive energy.
double phase_argument(double dm2, double x_m, double energy_ev);

/// Spatial width of the wave packet in meters, sigma_x = hbar c / (2 sigma_p).
inline double sigma_x_m(const OscillationParams& params) {
  return kHbarC / (2.0 * params.sigma_p);
}

/// Reads a parameter set from a JSON object with keys sin2_theta12,
/// sin2_theta13, sin2_theta23, delta_cp_rad, dm2_21_ev2, dm2_atm_ev2,
/// energy_gev, sigma_p_gev. Missing keys fall back to default_params().
OscillationParams params_from_json(const nlohmann::json& doc);

/// Serializes the resolved parameter set, including the derived
/// dm2_31_ev2 / dm2_32_ev2 (ignored on load; they are re-derived).
nlohmann::json params_to_json(const OscillationParams& params);

}  // namespace nuflavor
