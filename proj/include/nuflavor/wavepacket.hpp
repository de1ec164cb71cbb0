#pragma once

#include "nuflavor/params.hpp"
#include "nuflavor/types.hpp"

namespace nuflavor {

/// Flavor-basis kernel F^(alpha)_{beta gamma}(x): a 3x3 Hermitian,
/// unit-trace, positive semidefinite matrix carrying the full state of a
/// neutrino born with flavor `source` after propagating `distance` meters.
/// Rows and columns are indexed by flavor in (e, mu, tau) order.
struct FlavorKernel {
  Flavor source = Flavor::Electron;
  double distance = 0.0;  // meters
  Matrix3c entries = Matrix3c::Zero();
};

/// Decoherence factor f_jk(x) = exp(-i phi - d^2) for mass indices
/// j, k in {1,2,3}, where phi is the oscillation phase of dm2_jk and
/// d = dm2_jk * x / (4 sqrt(2) E^2 sigma_x) the Gaussian separation of the
/// j and k wave packets. Satisfies f_jk = conj(f_kj) and |f_jk| <= 1.
Complex decoherence_factor(int j, int k, double x_m,
                           const OscillationParams& params);

/// Time-averaged kernel at distance x:
/// F_{beta gamma} = sum_{j,k} U*_{alpha j} U_{alpha k} f_jk(x)
///                  U_{beta j} U*_{gamma k}.
FlavorKernel flavor_kernel(Flavor alpha, double x_m,
                           const OscillationParams& params);

/// Fully decohered limit (f_jk -> delta_jk):
/// F_{beta gamma} = sum_j |U_{alpha j}|^2 U_{beta j} U*_{gamma j}.
/// Serves as the x -> infinity oracle for sweeps and plateaus.
FlavorKernel asymptotic_kernel(Flavor alpha, const OscillationParams& params);

/// Embeds a kernel into the 8x8 three-qubit flavor register. Basis index
/// b = 4 q_e + 2 q_mu + q_tau; the state lives on the single-excitation
/// subspace {|100>, |010>, |001>} = indices {4, 2, 1}, all other rows and
/// columns exactly zero.
Matrix8c embed_kernel(const FlavorKernel& kernel);

/// Three-qubit flavor-basis density matrix rho_alpha(x).
Matrix8c density_matrix(Flavor alpha, double x_m,
                        const OscillationParams& params);

/// P_{nu_alpha -> nu_eta}(x) = F^(alpha)_{eta eta}(x).
double transition_probability(Flavor alpha, Flavor eta, double x_m,
                              const OscillationParams& params);

}  // namespace nuflavor
