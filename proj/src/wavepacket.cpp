#include "nuflavor/wavepacket.hpp"

#include <cmath>
#include <stdexcept>

namespace nuflavor {

Complex decoherence_factor(int j, int k, double x_m,
                           const OscillationParams& params) {
  const double dm2 = params.dm2(j, k);  // validates j, k
  const double phase = phase_argument(dm2, x_m, params.energy);
  const double separation =
      dm2 * x_m /
      (4.0 * std::sqrt(2.0) * params.energy * params.energy * sigma_x_m(params));
  return std::exp(Complex(-separation * separation, -phase));
}

FlavorKernel flavor_kernel(Flavor alpha, double x_m,
                           const OscillationParams& params) {
  Matrix3c f;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      f(j, k) = decoherence_factor(j + 1, k + 1, x_m, params);
    }
  }
  const Matrix3c u = pmns_matrix(params);
  // F = U ((c c^H) .* f) U^H with c_j = U*_{alpha j} is the double sum
  // over mass indices written as matrix products.
  const Eigen::Vector3cd c = u.row(flavor_index(alpha)).conjugate();
  const Matrix3c weights = (c * c.adjoint()).cwiseProduct(f);

  FlavorKernel kernel;
  kernel.source = alpha;
  kernel.distance = x_m;
  kernel.entries = u * weights * u.adjoint();
  return kernel;
}

FlavorKernel asymptotic_kernel(Flavor alpha, const OscillationParams& params) {
  const Matrix3c u = pmns_matrix(params);
  const Eigen::Vector3d weights =
      u.row(flavor_index(alpha)).cwiseAbs2().transpose();

  FlavorKernel kernel;
  kernel.source = alpha;
  kernel.distance = std::numeric_limits<double>::infinity();
  kernel.entries = u * weights.cast<Complex>().asDiagonal() * u.adjoint();
  return kernel;
}

Matrix8c embed_kernel(const FlavorKernel& kernel) {
  // |nu_e> = |100>, |nu_mu> = |010>, |nu_tau> = |001> with b = 4q_e+2q_mu+q_tau.
  static constexpr int kBasisIndex[3] = {4, 2, 1};
  Matrix8c rho = Matrix8c::Zero();
  for (int b = 0; b < 3; ++b) {
    for (int g = 0; g < 3; ++g) {
      rho(kBasisIndex[b], kBasisIndex[g]) = kernel.entries(b, g);
    }
  }
  return rho;
}

Matrix8c density_matrix(Flavor alpha, double x_m,
                        const OscillationParams& params) {
  return embed_kernel(flavor_kernel(alpha, x_m, params));
}

double transition_probability(Flavor alpha, Flavor eta, double x_m,
                              const OscillationParams& params) {
  const int i = flavor_index(eta);
  return flavor_kernel(alpha, x_m, params).entries(i, i).real();
}

}  // namespace nuflavor
