#pragma once

#include <array>
#include <span>

#include "nuflavor/types.hpp"

namespace nuflavor {

/// 2:1 split of the three flavor qubits. `pair` is the kept two-qubit
/// side, `singleton` the one-qubit side the partial transpose acts on
/// (the trace norm is the same either way).
struct Bipartition {
  std::array<Flavor, 2> pair{Flavor::Electron, Flavor::Muon};
  Flavor singleton = Flavor::Tau;

  /// The bipartition whose singleton side is `eta`; the pair keeps the
  /// global (e, mu, tau) order.
  static Bipartition isolating(Flavor eta);
};

/// The three 2:1 bipartitions in the canonical order
/// (e,mu;tau), (e,tau;mu), (mu,tau;e).
std::array<Bipartition, 3> standard_bipartitions();

/// Flavor pairs in the canonical order (e,mu), (e,tau), (mu,tau).
std::array<std::array<Flavor, 2>, 3> flavor_pairs();

/// Throws if the bipartition does not split {e, mu, tau} into a distinct
/// pair plus singleton.
void validate_bipartition(const Bipartition& bip);

/// Reduced 4x4 state over the two kept qubits, which keep the global
/// (e, mu, tau) order; the standard two-qubit basis {|00>,|01>,|10>,|11>}.
Matrix4c partial_trace(const Matrix8c& rho, Flavor traced_qubit);

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y), with
/// sigma_y = [[0, -i], [i, 0]] and conjugation in the standard basis.
Matrix4c spin_flip(const Matrix4c& rho);

/// Transposes the stated qubits only; one or two distinct qubits (one
/// side of a 2:1 bipartition).
Matrix8c partial_transpose(const Matrix8c& rho,
                           std::span<const Flavor> qubits);

Matrix8c partial_transpose(const Matrix8c& rho,
                           std::initializer_list<Flavor> qubits);

/// Sum of absolute eigenvalues of a Hermitian matrix. Rejects input whose
/// anti-Hermitian part exceeds 1e-10 entrywise.
double trace_norm(const Eigen::MatrixXcd& m);

}  // namespace nuflavor
