#include "nuflavor/qubit_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace nuflavor {

namespace {

// Qubit q occupies bit position 2 - q of the basis index (e is the most
// significant bit).
int bit_mask(Flavor q) { return 1 << (2 - flavor_index(q)); }

}  // namespace

Bipartition Bipartition::isolating(Flavor eta) {
  Bipartition bip;
  bip.singleton = eta;
  int n = 0;
  for (Flavor f : kFlavors) {
    if (f != eta) bip.pair[n++] = f;
  }
  return bip;
}

std::array<Bipartition, 3> standard_bipartitions() {
  return {Bipartition::isolating(Flavor::Tau),
          Bipartition::isolating(Flavor::Muon),
          Bipartition::isolating(Flavor::Electron)};
}

std::array<std::array<Flavor, 2>, 3> flavor_pairs() {
  return {{{Flavor::Electron, Flavor::Muon},
           {Flavor::Electron, Flavor::Tau},
           {Flavor::Muon, Flavor::Tau}}};
}

void validate_bipartition(const Bipartition& bip) {
  const int a = flavor_index(bip.pair[0]);
  const int b = flavor_index(bip.pair[1]);
  const int c = flavor_index(bip.singleton);
  if (a == b || a == c || b == c || a + b + c != 3) {
    throw std::invalid_argument(
        "bipartition must split {e, mu, tau} into a distinct pair and "
        "singleton");
  }
}

Matrix4c partial_trace(const Matrix8c& rho, Flavor traced_qubit) {
  const int t = flavor_index(traced_qubit);
  if (t < 0 || t > 2) throw std::invalid_argument("invalid qubit label");
  int kept[2];
  int n = 0;
  for (int q = 0; q < 3; ++q) {
    if (q != t) kept[n++] = q;
  }
  const int m0 = 1 << (2 - kept[0]);
  const int m1 = 1 << (2 - kept[1]);
  const int mt = 1 << (2 - t);

  Matrix4c out = Matrix4c::Zero();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int i = ((r >> 1) & 1) * m0 + (r & 1) * m1;
      const int j = ((c >> 1) & 1) * m0 + (c & 1) * m1;
      out(r, c) = rho(i, j) + rho(i + mt, j + mt);
    }
  }
  return out;
}

Matrix4c spin_flip(const Matrix4c& rho) {
  static const Matrix4c s = [] {
    Matrix4c m = Matrix4c::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return s * rho.conjugate() * s;
}

Matrix8c partial_transpose(const Matrix8c& rho,
                           std::span<const Flavor> qubits) {
  if (qubits.empty() || qubits.size() > 2) {
    throw std::invalid_argument(
        "partial transpose side must hold one or two qubits");
  }
  int mask = 0;
  for (Flavor q : qubits) {
    const int m = bit_mask(q);
    if (mask & m) throw std::invalid_argument("repeated qubit label");
    mask |= m;
  }
  Matrix8c out;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      out(i, j) = rho((i & ~mask) | (j & mask), (j & ~mask) | (i & mask));
    }
  }
  return out;
}

Matrix8c partial_transpose(const Matrix8c& rho,
                           std::initializer_list<Flavor> qubits) {
  return partial_transpose(rho, std::span<const Flavor>(qubits.begin(),
                                                        qubits.size()));
}

double trace_norm(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("trace norm requires a square matrix");
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    throw std::invalid_argument("matrix is not Hermitian within 1e-10");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace nuflavor
