#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace nuflavor {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix8c = Eigen::Matrix<Complex, 8, 8>;

/// Neutrino flavor, also used as the qubit label of the three-qubit
/// flavor register |q_e q_mu q_tau>.
enum class Flavor : int { Electron = 0, Muon = 1, Tau = 2 };

inline constexpr Flavor kFlavors[3] = {Flavor::Electron, Flavor::Muon,
                                       Flavor::Tau};

inline int flavor_index(Flavor f) { return static_cast<int>(f); }

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Electron: return "e";
    case Flavor::Muon: return "mu";
    case Flavor::Tau: return "tau";
  }
  throw std::invalid_argument("unknown flavor");
}

inline Flavor parse_flavor(const std::string& name) {
  if (name == "e") return Flavor::Electron;
  if (name == "mu") return Flavor::Muon;
  if (name == "tau") return Flavor::Tau;
  throw std::invalid_argument("unknown flavor '" + name +
                              "' (expected e, mu or tau)");
}

}  // namespace nuflavor
