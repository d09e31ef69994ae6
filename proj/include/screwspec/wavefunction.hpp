#pragma once

#include <span>
#include <vector>

#include "screwspec/params.hpp"

namespace screwspec {

/// Normalization measure for the radial states. The spatial volume element of
/// the dislocated metric carries sqrt(det g) = rho, so rho_weighted
/// (int |psi|^2 rho drho = 1) is the default; flat (int |psi|^2 drho = 1) is
/// kept as an alternative plotting convention.
enum class Measure { rho_weighted, flat };

/// Radial bound state
///   psi(rho) = norm * rho^{nu_abs} * exp(-width rho^2 / 2) * L^{nu_abs}_n(width rho^2).
struct RadialSolution {
    double nu_abs;          ///< power-law index: |nu| (free) or sqrt(2 m c2 + nu^2)
    double width;           ///< Gaussian decay rate, sqrt of the squared effective frequency
    double laguerre_alpha;  ///< upper Laguerre index; equals nu_abs
    int n;                  ///< polynomial degree = number of radial nodes
    double norm;            ///< normalization constant under `measure`
    Measure measure;
};

/// Generalized Laguerre polynomial L^alpha_n(x) by the three-term recurrence
///   L^a_j = ((2j - 1 + a - x) L^a_{j-1} - (j - 1 + a) L^a_{j-2}) / j.
double laguerre(int n, double alpha, double x);

/// Assembles the normalized radial solution for the given configuration.
/// Throws NegativeDiscriminant when no normalizable family exists.
RadialSolution build_solution(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, Measure measure = Measure::rho_weighted);

/// Normalization constant for sol under its measure. The rho-weighted value is
/// the closed Gamma form sqrt(2 width^{nu_abs+1} n! / Gamma(n + nu_abs + 1));
/// the flat value comes from adaptive quadrature. Either path is cross-checked
/// against Gauss-Laguerre quadrature to 1e-10 relative.
double normalization(const RadialSolution& sol);

/// Signed radial wave function at rho.
double radial_psi(const RadialSolution& sol, double rho);

/// |psi(rho)|^2 evaluated pointwise on rho_grid.
std::vector<double> probability_density(const RadialSolution& sol,
                                        std::span<const double> rho_grid);

}  // namespace screwspec
