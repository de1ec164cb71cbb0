#include "nuflavor/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace nuflavor {

double concurrence_general(const Matrix4c& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("state is not Hermitian within 1e-12");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-12) {
    throw std::invalid_argument("state trace differs from 1 beyond 1e-12");
  }

  const Matrix4c product = rho * spin_flip(rho);
  Eigen::ComplexEigenSolver<Matrix4c> solver(product, false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue computation did not converge");
  }

  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) {
    const Complex ev = solver.eigenvalues()(i);
    if (std::abs(ev.imag()) > 1e-10) {
      throw std::runtime_error(
          "rho * spin_flip(rho) produced a non-real eigenvalue");
    }
    lambdas[i] = std::sqrt(std::max(0.0, ev.real()));
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<double>());
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

double concurrence_closed(const FlavorKernel& kernel, Flavor beta,
                          Flavor gamma) {
  if (beta == gamma) {
    throw std::invalid_argument("concurrence requires two distinct flavors");
  }
  return 2.0 * std::abs(kernel.entries(flavor_index(beta),
                                       flavor_index(gamma)));
}

double concurrence_closed(Flavor alpha, Flavor beta, Flavor gamma, double x_m,
                          const OscillationParams& params) {
  return concurrence_closed(flavor_kernel(alpha, x_m, params), beta, gamma);
}

double log_negativity_general(const Matrix8c& rho, const Bipartition& bip) {
  validate_bipartition(bip);
  const Matrix8c pt = partial_transpose(rho, {bip.singleton});
  return std::max(0.0, std::log2(trace_norm(pt)));
}

double log_negativity_closed(const FlavorKernel& kernel,
                             const Bipartition& bip) {
  validate_bipartition(bip);
  const int b = flavor_index(bip.pair[0]);
  const int g = flavor_index(bip.pair[1]);
  const int e = flavor_index(bip.singleton);
  const double cross = std::hypot(std::abs(kernel.entries(b, e)),
                                  std::abs(kernel.entries(g, e)));
  return std::log2(1.0 + 2.0 * cross);
}

double log_negativity_closed(Flavor alpha, const Bipartition& bip, double x_m,
                             const OscillationParams& params) {
  return log_negativity_closed(flavor_kernel(alpha, x_m, params), bip);
}

double average_log_negativity(const Matrix8c& rho) {
  double sum = 0.0;
  for (const Bipartition& bip : standard_bipartitions()) {
    sum += log_negativity_general(rho, bip);
  }
  return sum / 3.0;
}

namespace {

constexpr double kCrossValidationTol = 1e-9;

void check_agreement(double general, double closed, const char* label,
                     const FlavorKernel& kernel) {
  if (std::abs(general - closed) > kCrossValidationTol) {
    std::ostringstream msg;
    msg << "cross-validation failed for " << label << " (source "
        << flavor_name(kernel.source) << ", x = " << kernel.distance
        << " m): general " << general << " vs closed " << closed;
    throw CrossValidationError(msg.str());
  }
}

}  // namespace

EntanglementReport report_from_kernel(const FlavorKernel& kernel,
                                      bool cross_validate) {
  EntanglementReport rep;
  rep.distance = kernel.distance;

  const auto pairs = flavor_pairs();
  const auto bips = standard_bipartitions();
  for (int i = 0; i < 3; ++i) {
    rep.concurrence[i] = concurrence_closed(kernel, pairs[i][0], pairs[i][1]);
    rep.log_negativity[i] = log_negativity_closed(kernel, bips[i]);
  }
  rep.average_log_negativity =
      (rep.log_negativity[0] + rep.log_negativity[1] + rep.log_negativity[2]) /
      3.0;

  if (cross_validate) {
    const Matrix8c rho = embed_kernel(kernel);
    for (int i = 0; i < 3; ++i) {
      // The traced qubit is the flavor missing from the pair, which is the
      // singleton of the same-index bipartition.
      const double c_gen =
          concurrence_general(partial_trace(rho, bips[i].singleton));
      check_agreement(c_gen, rep.concurrence[i], "concurrence", kernel);
      const double en_gen = log_negativity_general(rho, bips[i]);
      check_agreement(en_gen, rep.log_negativity[i], "log-negativity", kernel);
    }
    check_agreement(average_log_negativity(rho), rep.average_log_negativity,
                    "average log-negativity", kernel);
  }
  return rep;
}

EntanglementReport report(Flavor alpha, double x_m,
                          const OscillationParams& params,
                          bool cross_validate) {
  return report_from_kernel(flavor_kernel(alpha, x_m, params), cross_validate);
}

}  // namespace nuflavor
