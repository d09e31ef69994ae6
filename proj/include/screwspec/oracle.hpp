#pragma once

#include <vector>

#include "screwspec/params.hpp"

namespace screwspec {

// Finite-difference eigensolver for the radial equation, written against the
// ODE alone. It must stay free of the closed-form spectrum and wavefunction
// headers so that agreement between the two paths is genuine cross-validation.

struct OracleConfig {
    double rho_max = 0.0;    ///< domain truncation; <= 0 selects 10 / sqrt(width)
    int grid_points = 4000;  ///< interior points of the coarse grid, >= 200
    int eigs_requested = 6;  ///< >= 1
};

struct OracleSpectrum {
    std::vector<double> eigenvalues;       ///< energies E, ascending, Richardson extrapolated
    std::vector<double> richardson_error;  ///< |E_fine - E_coarse| / 3 per eigenvalue
    double rho_max = 0.0;
    int grid_points = 0;                   ///< coarse-grid interior points actually used
};

/// Solves the substituted form -u'' + W(rho) u = 2 m E u, u = sqrt(rho) psi,
///   W = (nu^2 - 1/4 + 2 m c2)/rho^2 + (M^2 l^2 + 2 m M l w + 2 m c1) rho^2
///       + k^2 - 2 (M l + m w) nu + 2 m c3,
/// on a uniform Dirichlet grid with the second-difference stencil, then
/// Richardson-extrapolates eigenvalues over the (N, 2N) grid pair.
/// Throws NegativeDiscriminant when no bound family exists and
/// TruncationTooSmall when the domain clips the ground state.
OracleSpectrum solve_radial(const SystemParams& p, const PotentialParams& v, int ell,
                            const OracleConfig& cfg = {});

/// One eigenpair on the fine grid, for node counting and boundary diagnostics.
struct RadialMode {
    std::vector<double> rho;  ///< grid points
    std::vector<double> u;    ///< normalized u(rho) = sqrt(rho) psi(rho)
    double energy;            ///< unextrapolated fine-grid energy
};

RadialMode solve_radial_mode(const SystemParams& p, const PotentialParams& v, int ell,
                             int state, const OracleConfig& cfg = {});

/// Single-grid energies without extrapolation, for convergence studies.
/// rho_max must be positive and is used as given.
std::vector<double> solve_radial_raw(const SystemParams& p, const PotentialParams& v,
                                     int ell, double rho_max, int grid_points, int count);

/// Interior sign changes of a grid function, ignoring entries below
/// 1e-8 * max|u| (Sturm oscillation test support).
int count_nodes(const std::vector<double>& u);

}  // namespace screwspec
