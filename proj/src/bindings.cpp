#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "screwspec/critical.hpp"
#include "screwspec/oracle.hpp"
#include "screwspec/params.hpp"
#include "screwspec/spectrum.hpp"
#include "screwspec/validation.hpp"
#include "screwspec/wavefunction.hpp"

namespace py = pybind11;
using namespace screwspec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bound states of a magnetic quadrupole moment in a rotating frame "
              "with a screw dislocation: closed-form spectra, critical angular "
              "velocities, Laguerre wave functions and a finite-difference "
              "cross-validation oracle.";

    const auto domain_error = py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<NegativeDiscriminant>(m, "NegativeDiscriminant", domain_error);
    py::register_exception<NoSignChange>(m, "NoSignChange", domain_error);
    py::register_exception<SpuriousRoot>(m, "SpuriousRoot", domain_error);
    py::register_exception<DegenerateDenominator>(m, "DegenerateDenominator", domain_error);
    py::register_exception<TruncationTooSmall>(m, "TruncationTooSmall", domain_error);

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init([](double mass, double quadrupole, double lambda, double omega,
                         double k, double beta) {
                 SystemParams p{mass, quadrupole, lambda, omega, k, beta};
                 p.validate();
                 return p;
             }),
             py::arg("mass") = 1.0, py::arg("quadrupole") = 1.0, py::arg("lambda_") = 1.0,
             py::arg("omega") = 0.0, py::arg("k") = 0.5, py::arg("beta") = 0.5)
        .def_readwrite("mass", &SystemParams::mass)
        .def_readwrite("quadrupole", &SystemParams::quadrupole)
        .def_readwrite("lambda_", &SystemParams::lambda)
        .def_readwrite("omega", &SystemParams::omega)
        .def_readwrite("k", &SystemParams::wave_number)
        .def_readwrite("beta", &SystemParams::beta)
        .def("__repr__", [](const SystemParams& p) {
            return "SystemParams(mass=" + std::to_string(p.mass) +
                   ", quadrupole=" + std::to_string(p.quadrupole) +
                   ", lambda_=" + std::to_string(p.lambda) +
                   ", omega=" + std::to_string(p.omega) +
                   ", k=" + std::to_string(p.wave_number) +
                   ", beta=" + std::to_string(p.beta) + ")";
        });

    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init([](double c1, double c2, double c3) {
                 PotentialParams v{c1, c2, c3};
                 v.validate();
                 return v;
             }),
             py::arg("c1") = 0.0, py::arg("c2") = 0.0, py::arg("c3") = 0.0)
        .def_readwrite("c1", &PotentialParams::c1)
        .def_readwrite("c2", &PotentialParams::c2)
        .def_readwrite("c3", &PotentialParams::c3)
        .def("is_zero", &PotentialParams::is_zero);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init([](int n, int ell) {
                 QuantumNumbers q{n, ell};
                 q.validate();
                 return q;
             }),
             py::arg("n") = 0, py::arg("ell") = 0)
        .def_readwrite("n", &QuantumNumbers::n)
        .def_readwrite("ell", &QuantumNumbers::ell);

    py::class_<EffectiveQuantities>(m, "EffectiveQuantities")
        .def_readonly("nu", &EffectiveQuantities::nu)
        .def_readonly("b_eff", &EffectiveQuantities::b_eff)
        .def_readonly("omega_sq", &EffectiveQuantities::omega_sq);

    m.def("effective_angular_index", &effective_angular_index, py::arg("params"),
          py::arg("qn"), "nu = ell - beta k");
    m.def("effective_magnetic_field", &effective_magnetic_field, py::arg("params"),
          "2 M lambda");
    m.def("effective_frequency_sq", &effective_frequency_sq, py::arg("params"),
          py::arg("potential") = PotentialParams{},
          "M^2 l^2 + 2 m M l omega + 2 m c1; raises NegativeDiscriminant when negative");
    m.def("effective_quantities", &effective_quantities, py::arg("params"),
          py::arg("potential"), py::arg("qn"));

    py::enum_<PotentialCase>(m, "PotentialCase")
        .value("free", PotentialCase::free_case)
        .value("pseudo_harmonic", PotentialCase::pseudo_harmonic);

    py::class_<EnergyLevel>(m, "EnergyLevel")
        .def_readonly("qn", &EnergyLevel::qn)
        .def_readonly("energy", &EnergyLevel::energy)
        .def_readonly("which", &EnergyLevel::which);

    m.def("energy_free", &energy_free, py::arg("params"), py::arg("qn"));
    m.def("energy_pseudoharmonic", &energy_pseudoharmonic, py::arg("params"),
          py::arg("potential"), py::arg("qn"));

    py::class_<DegeneracyClass>(m, "DegeneracyClass")
        .def_readonly("energy", &DegeneracyClass::energy)
        .def_readonly("members", &DegeneracyClass::members);

    m.def(
        "degeneracy_classes",
        [](const SystemParams& p, const PotentialParams& v,
           const std::vector<QuantumNumbers>& levels, double tol) {
            return degeneracy_classes(p, v, levels, tol);
        },
        py::arg("params"), py::arg("potential"), py::arg("levels"), py::arg("tol") = 1e-9);

    py::enum_<Branch>(m, "Branch").value("plus", Branch::plus).value("minus", Branch::minus);
    py::enum_<RootMethod>(m, "RootMethod")
        .value("closed_form", RootMethod::closed_form)
        .value("bisection", RootMethod::bisection);

    py::class_<CriticalResult>(m, "CriticalResult")
        .def_readonly("omega_c", &CriticalResult::omega_c)
        .def_readonly("branch", &CriticalResult::branch)
        .def_readonly("residual", &CriticalResult::residual)
        .def_readonly("method", &CriticalResult::method);

    m.def("omega_c_closed", &omega_c_closed, py::arg("params"), py::arg("potential"),
          py::arg("qn"), py::arg("branch") = Branch::plus);
    m.def("omega_c_bisect", &omega_c_bisect, py::arg("params"), py::arg("potential"),
          py::arg("qn"), py::arg("omega_lo"), py::arg("omega_hi"), py::arg("tol") = 1e-10);
    m.def("omega_c_auto_bisect", &omega_c_auto_bisect, py::arg("params"),
          py::arg("potential"), py::arg("qn"), py::arg("tol") = 1e-10);

    py::class_<BetaKink>(m, "BetaKink")
        .def_readonly("beta_star", &BetaKink::beta_star)
        .def_readonly("reciprocal", &BetaKink::reciprocal);
    m.def("beta_kink", &beta_kink, py::arg("params"), py::arg("ell"));
    m.def("beta_confinement_threshold", &beta_confinement_threshold, py::arg("params"),
          py::arg("potential"), py::arg("qn"), py::arg("beta_lo"), py::arg("beta_hi"),
          py::arg("tol") = 1e-10);

    py::enum_<Measure>(m, "Measure")
        .value("rho_weighted", Measure::rho_weighted)
        .value("flat", Measure::flat);

    py::class_<RadialSolution>(m, "RadialSolution")
        .def_readonly("nu_abs", &RadialSolution::nu_abs)
        .def_readonly("width", &RadialSolution::width)
        .def_readonly("laguerre_alpha", &RadialSolution::laguerre_alpha)
        .def_readonly("n", &RadialSolution::n)
        .def_readonly("norm", &RadialSolution::norm)
        .def_readonly("measure", &RadialSolution::measure);

    m.def("laguerre", &laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"),
          "generalized Laguerre polynomial via the three-term recurrence");
    m.def("build_solution", &build_solution, py::arg("params"), py::arg("potential"),
          py::arg("qn"), py::arg("measure") = Measure::rho_weighted);
    m.def("normalization", &normalization, py::arg("solution"));
    m.def("radial_psi", &radial_psi, py::arg("solution"), py::arg("rho"));
    m.def(
        "probability_density",
        [](const RadialSolution& sol, const std::vector<double>& grid) {
            return probability_density(sol, grid);
        },
        py::arg("solution"), py::arg("rho_grid"));

    py::class_<OracleConfig>(m, "OracleConfig")
        .def(py::init([](double rho_max, int grid_points, int eigs_requested) {
                 return OracleConfig{rho_max, grid_points, eigs_requested};
             }),
             py::arg("rho_max") = 0.0, py::arg("grid_points") = 4000,
             py::arg("eigs_requested") = 6)
        .def_readwrite("rho_max", &OracleConfig::rho_max)
        .def_readwrite("grid_points", &OracleConfig::grid_points)
        .def_readwrite("eigs_requested", &OracleConfig::eigs_requested);

    py::class_<OracleSpectrum>(m, "OracleSpectrum")
        .def_readonly("eigenvalues", &OracleSpectrum::eigenvalues)
        .def_readonly("richardson_error", &OracleSpectrum::richardson_error)
        .def_readonly("rho_max", &OracleSpectrum::rho_max)
        .def_readonly("grid_points", &OracleSpectrum::grid_points);

    m.def("solve_radial", &solve_radial, py::arg("params"), py::arg("potential"),
          py::arg("ell"), py::arg("config") = OracleConfig{},
          "finite-difference eigenvalues of the radial equation (the oracle)");

    py::class_<GridEntry>(m, "GridEntry")
        .def(py::init([](const SystemParams& p, const PotentialParams& v, int ell) {
                 return GridEntry{p, v, ell};
             }),
             py::arg("params"), py::arg("potential") = PotentialParams{}, py::arg("ell") = 1)
        .def_readwrite("params", &GridEntry::params)
        .def_readwrite("potential", &GridEntry::potential)
        .def_readwrite("ell", &GridEntry::ell);

    py::enum_<EntryStatus>(m, "EntryStatus")
        .value("ok", EntryStatus::ok)
        .value("mismatch", EntryStatus::mismatch)
        .value("failed_precondition", EntryStatus::failed_precondition);

    py::class_<EntryResult>(m, "EntryResult")
        .def_readonly("status", &EntryResult::status)
        .def_readonly("max_rel_err", &EntryResult::max_rel_err)
        .def_readonly("message", &EntryResult::message);

    py::class_<OracleValidation>(m, "OracleValidation")
        .def_readonly("entries", &OracleValidation::entries)
        .def_readonly("tolerance", &OracleValidation::tolerance)
        .def_readonly("n_max", &OracleValidation::n_max)
        .def("all_ok", &OracleValidation::all_ok);

    m.def(
        "validate_closed_forms",
        [](const std::vector<GridEntry>& grid, double tol, int n_max,
           const OracleConfig& cfg) { return validate_closed_forms(grid, tol, n_max, cfg); },
        py::arg("grid"), py::arg("tol") = 1e-5, py::arg("n_max") = 3,
        py::arg("config") = OracleConfig{});

    py::class_<Check>(m, "Check")
        .def_readonly("id", &Check::id)
        .def_readonly("description", &Check::description)
        .def_readonly("computed", &Check::computed)
        .def_readonly("reference", &Check::reference)
        .def_readonly("tolerance", &Check::tolerance)
        .def_readonly("pass_", &Check::pass)
        .def_readonly("informational", &Check::informational)
        .def_readonly("detail", &Check::detail);

    m.def(
        "run_validation",
        [](double oracle_tol, int oracle_grid_points) {
            return run_validation({oracle_tol, oracle_grid_points});
        },
        py::arg("oracle_tol") = 1e-5, py::arg("oracle_grid_points") = 4000,
        "the full self-check battery behind `screwspec validate`");
}
