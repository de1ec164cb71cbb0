#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "nuflavor/qubit_ops.hpp"
#include "nuflavor/types.hpp"
#include "nuflavor/wavepacket.hpp"

namespace nuflavor {

/// Raised when the closed-form and general-algorithm routes disagree
/// beyond tolerance; signals an implementation bug, not bad input.
struct CrossValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Wootters concurrence of a two-qubit mixed state: the lambda_i are the
/// square roots of the eigenvalues of rho * spin_flip(rho) in decreasing
/// order and C = max(0, l1 - l2 - l3 - l4). Eigenvalues acquire only tiny
/// imaginary or negative parts numerically (the exact spectrum is
/// non-negative real); real parts are clamped at zero before the square
/// root and imaginary parts beyond 1e-10 are an error.
double concurrence_general(const Matrix4c& rho);

/// Closed form for single-excitation states: C = 2 |F_{beta gamma}|.
double concurrence_closed(const FlavorKernel& kernel, Flavor beta,
                          Flavor gamma);

double concurrence_closed(Flavor alpha, Flavor beta, Flavor gamma, double x_m,
                          const OscillationParams& params);

/// log2 of the trace norm of the partial transpose with respect to the
/// singleton side of the bipartition.
double log_negativity_general(const Matrix8c& rho, const Bipartition& bip);

/// Closed form for single-excitation states with bipartition (beta,gamma;eta):
/// E_N = log2[1 + 2 sqrt(|F_{beta eta}|^2 + |F_{gamma eta}|^2)].
double log_negativity_closed(const FlavorKernel& kernel,
                             const Bipartition& bip);

double log_negativity_closed(Flavor alpha, const Bipartition& bip, double x_m,
                             const OscillationParams& params);

/// Mean of the three 2:1 bipartition log-negativities.
double average_log_negativity(const Matrix8c& rho);

/// All entanglement measures of rho_alpha(x) at one distance.
/// `concurrence` follows flavor_pairs() order, `log_negativity` follows
/// standard_bipartitions() order.
struct EntanglementReport {
  double distance = 0.0;  // meters
  std::array<double, 3> concurrence{};
  std::array<double, 3> log_negativity{};
  double average_log_negativity = 0.0;
};

/// Builds the report from an existing kernel via the closed forms. With
/// cross_validate set, every measure is recomputed with the general
/// algorithms on the embedded 8x8 state and must agree within 1e-9.
EntanglementReport report_from_kernel(const FlavorKernel& kernel,
                                      bool cross_validate = false);

EntanglementReport report(Flavor alpha, double x_m,
                          const OscillationParams& params,
                          bool cross_validate = false);

}  // namespace nuflavor
