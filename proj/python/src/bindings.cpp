#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nuflavor/entanglement.hpp"
#include "nuflavor/sweep.hpp"

namespace py = pybind11;
using namespace nuflavor;

namespace {

Flavor as_flavor(const std::string& name) { return parse_flavor(name); }

OscillationParams params_or_default(const std::optional<OscillationParams>& p) {
  return p ? *p : default_params();
}

Bipartition make_bipartition(const std::string& beta, const std::string& gamma,
                             const std::string& eta) {
  Bipartition bip;
  bip.pair = {as_flavor(beta), as_flavor(gamma)};
  bip.singleton = as_flavor(eta);
  validate_bipartition(bip);
  return bip;
}

py::dict report_dict(const EntanglementReport& rep) {
  py::dict out;
  out["distance_m"] = rep.distance;
  py::dict conc, logneg;
  conc["e_mu"] = rep.concurrence[0];
  conc["e_tau"] = rep.concurrence[1];
  conc["mu_tau"] = rep.concurrence[2];
  logneg["emu_tau"] = rep.log_negativity[0];
  logneg["etau_mu"] = rep.log_negativity[1];
  logneg["mutau_e"] = rep.log_negativity[2];
  out["concurrence"] = conc;
  out["log_negativity"] = logneg;
  out["average_log_negativity"] = rep.average_log_negativity;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Three-flavor neutrino oscillations in the time-averaged wave-packet "
      "description: flavor-basis density matrices, transition probabilities "
      "and mixed-state entanglement measures.";

  m.attr("HBAR_C_EV_M") = kHbarC;
  m.attr("SWEEP_COLUMNS") =
      py::make_tuple("x_m", "P_e", "P_mu", "P_tau", "C_e_mu", "C_e_tau",
                     "C_mu_tau", "EN_emu_tau", "EN_etau_mu", "EN_mutau_e",
                     "avg_EN");

  py::class_<MixingAngles>(m, "MixingAngles")
      .def(py::init<double, double, double>(), py::arg("sin2_theta12"),
           py::arg("sin2_theta13"), py::arg("sin2_theta23"))
      .def_readonly("sin2_theta12", &MixingAngles::sin2_theta12)
      .def_readonly("sin2_theta13", &MixingAngles::sin2_theta13)
      .def_readonly("sin2_theta23", &MixingAngles::sin2_theta23);

  py::class_<OscillationParams>(m, "OscillationParams")
      .def_readonly("angles", &OscillationParams::angles)
      .def_readonly("delta_cp", &OscillationParams::delta_cp)
      .def_readonly("dm2_21", &OscillationParams::dm2_21)
      .def_readonly("dm2_atm", &OscillationParams::dm2_atm)
      .def_readonly("dm2_31", &OscillationParams::dm2_31)
      .def_readonly("dm2_32", &OscillationParams::dm2_32)
      .def_readonly("energy", &OscillationParams::energy)
      .def_readonly("sigma_p", &OscillationParams::sigma_p)
      .def("dm2", &OscillationParams::dm2, py::arg("j"), py::arg("k"))
      .def("__repr__", [](const OscillationParams& p) {
        return "OscillationParams(dm2_21=" + std::to_string(p.dm2_21) +
               ", dm2_31=" + std::to_string(p.dm2_31) +
               ", energy_eV=" + std::to_string(p.energy) + ")";
      });

  m.def("default_params", &default_params,
        "Reference experimental parameter set");
  m.def(
      "make_params",
      [](double s12, double s13, double s23, double delta, double dm2_21,
         double dm2_atm, double energy_gev, double sigma_p_gev) {
        return make_params({s12, s13, s23}, delta, dm2_21, dm2_atm,
                           energy_gev * 1e9, sigma_p_gev * 1e9);
      },
      py::arg("sin2_theta12"), py::arg("sin2_theta13"), py::arg("sin2_theta23"),
      py::arg("delta_cp") = 0.0, py::arg("dm2_21") = 7.92e-5,
      py::arg("dm2_atm") = 2.6e-3, py::arg("energy_gev") = 10.0,
      py::arg("sigma_p_gev") = 1.0,
      "Build a parameter set; energies in GeV, squared masses in eV^2");

  m.def(
      "pmns_matrix",
      [](const std::optional<OscillationParams>& p) {
        return Matrix3c(pmns_matrix(params_or_default(p)));
      },
      py::arg("params") = py::none(), "3x3 complex PMNS matrix");

  m.def(
      "phase_argument",
      [](double dm2, double x_m, double energy_ev) {
        return phase_argument(dm2, x_m, energy_ev);
      },
      py::arg("dm2"), py::arg("x_m"), py::arg("energy_ev"));

  m.def(
      "decoherence_factor",
      [](int j, int k, double x, const std::optional<OscillationParams>& p) {
        return decoherence_factor(j, k, x, params_or_default(p));
      },
      py::arg("j"), py::arg("k"), py::arg("x_m"),
      py::arg("params") = py::none());

  m.def(
      "flavor_kernel",
      [](const std::string& alpha, double x,
         const std::optional<OscillationParams>& p) {
        return Matrix3c(
            flavor_kernel(as_flavor(alpha), x, params_or_default(p)).entries);
      },
      py::arg("alpha"), py::arg("x_m"), py::arg("params") = py::none(),
      "3x3 flavor-basis kernel F^(alpha)(x)");

  m.def(
      "asymptotic_kernel",
      [](const std::string& alpha, const std::optional<OscillationParams>& p) {
        return Matrix3c(
            asymptotic_kernel(as_flavor(alpha), params_or_default(p)).entries);
      },
      py::arg("alpha"), py::arg("params") = py::none());

  m.def(
      "density_matrix",
      [](const std::string& alpha, double x,
         const std::optional<OscillationParams>& p) {
        return Matrix8c(
            density_matrix(as_flavor(alpha), x, params_or_default(p)));
      },
      py::arg("alpha"), py::arg("x_m"), py::arg("params") = py::none(),
      "8x8 three-qubit flavor-basis density matrix");

  m.def(
      "transition_probability",
      [](const std::string& alpha, const std::string& eta, double x,
         const std::optional<OscillationParams>& p) {
        return transition_probability(as_flavor(alpha), as_flavor(eta), x,
                                      params_or_default(p));
      },
      py::arg("alpha"), py::arg("eta"), py::arg("x_m"),
      py::arg("params") = py::none());

  m.def(
      "partial_trace",
      [](const Matrix8c& rho, const std::string& traced) {
        return Matrix4c(partial_trace(rho, as_flavor(traced)));
      },
      py::arg("rho"), py::arg("traced_qubit"));

  m.def(
      "partial_transpose",
      [](const Matrix8c& rho, const std::vector<std::string>& qubits) {
        std::vector<Flavor> side;
        side.reserve(qubits.size());
        for (const auto& q : qubits) side.push_back(as_flavor(q));
        return Matrix8c(partial_transpose(rho, side));
      },
      py::arg("rho"), py::arg("qubits"));

  m.def("spin_flip",
        [](const Matrix4c& rho) { return Matrix4c(spin_flip(rho)); },
        py::arg("rho"));

  m.def("trace_norm",
        [](const Eigen::MatrixXcd& mat) { return trace_norm(mat); },
        py::arg("m"));

  m.def("concurrence_general", &concurrence_general, py::arg("rho"),
        "Wootters concurrence of a 4x4 two-qubit state");

  m.def(
      "concurrence",
      [](const std::string& alpha, const std::string& beta,
         const std::string& gamma, double x,
         const std::optional<OscillationParams>& p) {
        return concurrence_closed(as_flavor(alpha), as_flavor(beta),
                                  as_flavor(gamma), x, params_or_default(p));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("x_m"),
      py::arg("params") = py::none(),
      "Closed-form pairwise concurrence 2|F_bg| of rho_alpha(x)");

  m.def(
      "log_negativity_general",
      [](const Matrix8c& rho, const std::string& beta,
         const std::string& gamma, const std::string& eta) {
        return log_negativity_general(rho, make_bipartition(beta, gamma, eta));
      },
      py::arg("rho"), py::arg("beta"), py::arg("gamma"), py::arg("eta"));

  m.def(
      "log_negativity",
      [](const std::string& alpha, const std::string& beta,
         const std::string& gamma, const std::string& eta, double x,
         const std::optional<OscillationParams>& p) {
        return log_negativity_closed(as_flavor(alpha),
                                     make_bipartition(beta, gamma, eta), x,
                                     params_or_default(p));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("eta"),
      py::arg("x_m"), py::arg("params") = py::none(),
      "Closed-form log-negativity of the (beta,gamma;eta) bipartition");

  m.def("average_log_negativity",
        [](const Matrix8c& rho) { return average_log_negativity(rho); },
        py::arg("rho"));

  m.def(
      "report",
      [](const std::string& alpha, double x,
         const std::optional<OscillationParams>& p, bool cross_validate) {
        return report_dict(
            report(as_flavor(alpha), x, params_or_default(p), cross_validate));
      },
      py::arg("alpha"), py::arg("x_m"), py::arg("params") = py::none(),
      py::arg("cross_validate") = false,
      "All entanglement measures of rho_alpha(x) as a dict");

  m.def(
      "sweep",
      [](const std::string& flavor, double x_min, double x_max, int points,
         const std::string& grid, bool cross_validate,
         const std::optional<OscillationParams>& p) {
        SweepConfig config;
        config.source_flavor = as_flavor(flavor);
        config.x_min = x_min;
        config.x_max = x_max;
        config.points = points;
        config.grid = parse_grid(grid);
        config.cross_validate = cross_validate;
        config.params = params_or_default(p);
        const SweepResult result = run_sweep(config);
        py::array_t<double> out({static_cast<py::ssize_t>(result.rows.size()),
                                 static_cast<py::ssize_t>(11)});
        auto view = out.mutable_unchecked<2>();
        for (py::ssize_t i = 0;
             i < static_cast<py::ssize_t>(result.rows.size()); ++i) {
          const SweepRow& r = result.rows[i];
          const double values[11] = {r.x,        r.p_e,       r.p_mu,
                                     r.p_tau,    r.c_e_mu,    r.c_e_tau,
                                     r.c_mu_tau, r.en_emu_tau, r.en_etau_mu,
                                     r.en_mutau_e, r.avg_en};
          for (py::ssize_t c = 0; c < 11; ++c) view(i, c) = values[c];
        }
        return out;
      },
      py::arg("flavor") = "e", py::arg("x_min") = 1.0, py::arg("x_max") = 1e12,
      py::arg("points") = 600, py::arg("grid") = "log",
      py::arg("cross_validate") = false, py::arg("params") = py::none(),
      "Distance sweep as an (N, 11) array; columns in SWEEP_COLUMNS order");

  py::register_exception<CrossValidationError>(m, "CrossValidationError");
}
