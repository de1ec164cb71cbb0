#include <cmath>
#include <random>

#include <doctest.h>

#include "nuflavor/entanglement.hpp"
#include "test_helpers.hpp"

using namespace nuflavor;
using nuflavor::testing::log_spaced;

namespace {

Matrix4c bell_state() {
  Matrix4c rho = Matrix4c::Zero();
  rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = 0.5;
  return rho;
}

FlavorKernel w_state_kernel() {
  FlavorKernel kernel;
  kernel.entries = Matrix3c::Constant(Complex(1.0 / 3.0, 0.0));
  return kernel;
}

const double kWStateLogNegativity = std::log2(1.0 + 2.0 * std::sqrt(2.0) / 3.0);

}  // namespace

TEST_SUITE_BEGIN("entanglement");

TEST_CASE("known two-qubit concurrences") {
  CHECK(concurrence_general(Matrix4c::Identity() / 4.0) == 0.0);
  CHECK(concurrence_general(bell_state()) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("concurrence_general rejects bad states") {
  Matrix4c not_hermitian = Matrix4c::Identity() / 4.0;
  not_hermitian(0, 1) = Complex(0.0, 1e-3);
  CHECK_THROWS_AS(concurrence_general(not_hermitian), std::invalid_argument);
  CHECK_THROWS_AS(concurrence_general(Matrix4c(Matrix4c::Identity())),
                  std::invalid_argument);
}

TEST_CASE("general concurrence matches the closed form on reduced states") {
  const OscillationParams p = default_params();
  const Matrix8c rho = density_matrix(Flavor::Electron, 1e7, p);
  const FlavorKernel kernel = flavor_kernel(Flavor::Electron, 1e7, p);
  const double general =
      concurrence_general(partial_trace(rho, Flavor::Tau));
  CHECK(std::abs(general - concurrence_closed(kernel, Flavor::Electron,
                                              Flavor::Muon)) <= 1e-9);
}

TEST_CASE("closed-form concurrence basics") {
  const OscillationParams p = default_params();
  CHECK(concurrence_closed(Flavor::Electron, Flavor::Electron, Flavor::Muon,
                           0.0, p) <= 1e-12);
  CHECK(concurrence_closed(Flavor::Electron, Flavor::Muon, Flavor::Tau, 0.0,
                           p) <= 1e-12);
  const FlavorKernel limit = asymptotic_kernel(Flavor::Electron, p);
  CHECK(concurrence_closed(flavor_kernel(Flavor::Electron, 1e12, p),
                           Flavor::Electron, Flavor::Muon) ==
        doctest::Approx(2.0 * std::abs(limit.entries(0, 1))).epsilon(1e-6));
  CHECK_THROWS_AS(
      concurrence_closed(Flavor::Electron, Flavor::Muon, Flavor::Muon, 1.0, p),
      std::invalid_argument);
}

TEST_CASE("log-negativity of product and W states") {
  const OscillationParams p = default_params();
  const Matrix8c product = density_matrix(Flavor::Electron, 0.0, p);
  for (const Bipartition& bip : standard_bipartitions()) {
    CHECK(log_negativity_general(product, bip) <= 1e-12);
  }

  const Matrix8c w = embed_kernel(w_state_kernel());
  for (const Bipartition& bip : standard_bipartitions()) {
    CHECK(std::abs(log_negativity_general(w, bip) - kWStateLogNegativity) <=
          1e-10);
    CHECK(std::abs(log_negativity_closed(w_state_kernel(), bip) -
                   kWStateLogNegativity) <= 1e-10);
  }
  CHECK(std::abs(average_log_negativity(w) - kWStateLogNegativity) <= 1e-10);
}

TEST_CASE("general log-negativity matches the closed form") {
  const OscillationParams p = default_params();
  const Bipartition bip = standard_bipartitions()[0];  // (e,mu;tau)
  CHECK(std::abs(log_negativity_general(
                     density_matrix(Flavor::Electron, 1e7, p), bip) -
                 log_negativity_closed(Flavor::Electron, bip, 1e7, p)) <=
        1e-9);
  CHECK(std::abs(log_negativity_general(density_matrix(Flavor::Muon, 1e8, p),
                                        bip) -
                 log_negativity_closed(Flavor::Muon, bip, 1e8, p)) <= 1e-9);
}

TEST_CASE("log_negativity rejects invalid bipartitions") {
  const OscillationParams p = default_params();
  Bipartition bad;
  bad.pair = {Flavor::Electron, Flavor::Muon};
  bad.singleton = Flavor::Muon;
  CHECK_THROWS_AS(
      log_negativity_general(density_matrix(Flavor::Electron, 1.0, p), bad),
      std::invalid_argument);
  CHECK_THROWS_AS(log_negativity_closed(Flavor::Electron, bad, 1.0, p),
                  std::invalid_argument);
}

TEST_CASE("closed and general routes agree across the sweep range") {
  const OscillationParams p = default_params();
  const auto pairs = flavor_pairs();
  const auto bips = standard_bipartitions();
  for (Flavor alpha : kFlavors) {
    for (double x : log_spaced(1.0, 1e12, 200)) {
      const FlavorKernel kernel = flavor_kernel(alpha, x, p);
      const Matrix8c rho = embed_kernel(kernel);
      for (int i = 0; i < 3; ++i) {
        const double closed =
            concurrence_closed(kernel, pairs[i][0], pairs[i][1]);
        const double general =
            concurrence_general(partial_trace(rho, bips[i].singleton));
        CHECK(std::abs(general - closed) <= 1e-9);
        CHECK(std::abs(log_negativity_general(rho, bips[i]) -
                       log_negativity_closed(kernel, bips[i])) <= 1e-9);
      }
    }
  }
}

TEST_CASE("measures vanish at the origin for every source flavor") {
  const OscillationParams p = default_params();
  for (Flavor alpha : kFlavors) {
    const EntanglementReport rep = report(alpha, 0.0, p);
    for (double c : rep.concurrence) CHECK(std::abs(c) <= 1e-12);
    for (double en : rep.log_negativity) CHECK(std::abs(en) <= 1e-12);
    CHECK(std::abs(rep.average_log_negativity) <= 1e-12);
  }
}

TEST_CASE("measures plateau at the asymptotic kernel values") {
  const OscillationParams p = default_params();
  for (Flavor alpha : kFlavors) {
    const EntanglementReport far = report(alpha, 1e12, p);
    const EntanglementReport limit =
        report_from_kernel(asymptotic_kernel(alpha, p));
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(far.concurrence[i] - limit.concurrence[i]) <= 1e-6);
      CHECK(std::abs(far.log_negativity[i] - limit.log_negativity[i]) <= 1e-6);
    }
    CHECK(std::abs(far.average_log_negativity -
                   limit.average_log_negativity) <= 1e-6);
  }
}

TEST_CASE("report values stay in their analytic ranges") {
  const OscillationParams p = default_params();
  const double max_en = std::log2(3.0);
  for (Flavor alpha : kFlavors) {
    for (double x : log_spaced(1.0, 1e12, 60)) {
      const EntanglementReport rep = report(alpha, x, p);
      double lo = 1e300, hi = -1e300;
      for (double c : rep.concurrence) {
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
      }
      for (double en : rep.log_negativity) {
        CHECK(en >= 0.0);
        CHECK(en <= max_en + 1e-12);
        lo = std::min(lo, en);
        hi = std::max(hi, en);
      }
      const double avg = (rep.log_negativity[0] + rep.log_negativity[1] +
                          rep.log_negativity[2]) /
                         3.0;
      CHECK(std::abs(rep.average_log_negativity - avg) <= 1e-12);
      CHECK(rep.average_log_negativity >= lo - 1e-12);
      CHECK(rep.average_log_negativity <= hi + 1e-12);
    }
  }
}

TEST_CASE("concurrence and log-negativity obey the linking identity") {
  // 2^EN(beta,gamma;eta) - 1 = sqrt(C(beta,eta)^2 + C(gamma,eta)^2)
  const OscillationParams p = default_params();
  const auto bips = standard_bipartitions();
  for (Flavor alpha : kFlavors) {
    for (double x : log_spaced(1.0, 1e12, 100)) {
      const FlavorKernel kernel = flavor_kernel(alpha, x, p);
      for (const Bipartition& bip : bips) {
        const double en = log_negativity_closed(kernel, bip);
        const double c1 =
            concurrence_closed(kernel, bip.pair[0], bip.singleton);
        const double c2 =
            concurrence_closed(kernel, bip.pair[1], bip.singleton);
        CHECK(std::abs(std::exp2(en) - 1.0 - std::hypot(c1, c2)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("cross-validated reports run clean on the reference parameters") {
  const OscillationParams p = default_params();
  for (Flavor alpha : kFlavors) {
    for (double x : {0.0, 1e6, 1e7, 1e9}) {
      CHECK_NOTHROW(report(alpha, x, p, true));
    }
  }
}

TEST_CASE("cross-validation trips on an inconsistent kernel") {
  // A corrupted Hermitian kernel whose embedded state no longer matches
  // the closed forms is rejected by the gates or the comparison.
  FlavorKernel kernel = w_state_kernel();
  kernel.entries(0, 0) = 0.5;  // trace now exceeds one
  CHECK_THROWS(report_from_kernel(kernel, true));
}

TEST_SUITE_END();
