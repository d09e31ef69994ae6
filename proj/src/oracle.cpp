#include "screwspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "screwspec/tridiag.hpp"

namespace screwspec {

namespace {

struct RadialProblem {
    double inv_sq;         // coefficient of 1/rho^2: nu^2 - 1/4 + 2 m c2
    double singular_power; // s with s(s-1) = inv_sq; u ~ rho^s at the origin
    double quad;           // coefficient of rho^2
    double shift;          // constant: k^2 - 2 (M l + m w) nu + 2 m c3
    double two_m;
    double rho_max;
};

// Lattice value of the inverse-square coefficient at node i (1-based): chosen
// so the second-difference stencil annihilates rho^s exactly, the same
// property that makes the continuum term s(s-1)/rho^2 annihilate it. Naive
// pointwise sampling loses the second-order convergence for fractional s.
double lattice_inverse_sq(double s, int i) {
    if (i >= 200) {
        // Even Taylor series of i^2 ((1+1/i)^s + (1-1/i)^s - 2); the direct
        // difference cancels catastrophically at large i.
        const double c2 = s * (s - 1.0);
        const double c4 = c2 * (s - 2.0) * (s - 3.0) / 12.0;
        const double c6 = c4 * (s - 4.0) * (s - 5.0) / 30.0;
        const double inv_i2 = 1.0 / (static_cast<double>(i) * i);
        return c2 + inv_i2 * (c4 + inv_i2 * c6);
    }
    const double id = i;
    return std::pow(id, 2.0 - s) *
           (std::pow(id + 1.0, s) - 2.0 * std::pow(id, s) + std::pow(id - 1.0, s));
}

RadialProblem make_problem(const SystemParams& p, const PotentialParams& v, int ell,
                           const OracleConfig& cfg) {
    p.validate();
    v.validate();
    const double nu = effective_angular_index(p, {0, ell});
    const double wsq = effective_frequency_sq(p, v);
    if (wsq <= 0.0) {
        // Zero quadratic confinement leaves a continuum; no discrete family to find.
        throw NegativeDiscriminant(wsq);
    }
    const double ml = p.quadrupole * p.lambda;
    RadialProblem prob;
    prob.inv_sq = nu * nu - 0.25 + 2.0 * p.mass * v.c2;
    prob.singular_power = 0.5 + std::sqrt(prob.inv_sq + 0.25);
    prob.quad = wsq;
    prob.shift = p.wave_number * p.wave_number - 2.0 * (ml + p.mass * p.omega) * nu +
                 2.0 * p.mass * v.c3;
    prob.two_m = 2.0 * p.mass;
    const double sqrt_width = std::pow(wsq, 0.25);  // sqrt of the Gaussian decay rate
    const double auto_max = 10.0 / sqrt_width;
    if (cfg.rho_max > 0.0) {
        if (cfg.rho_max <= 3.0 / sqrt_width) {
            throw TruncationTooSmall("rho_max = " + std::to_string(cfg.rho_max) +
                                     " is below 3/sqrt(width) = " +
                                     std::to_string(3.0 / sqrt_width));
        }
        prob.rho_max = cfg.rho_max;
    } else {
        prob.rho_max = auto_max;
    }
    return prob;
}

// Discrete operator for `points` interior nodes on the uniform Dirichlet grid.
void assemble(const RadialProblem& prob, int points, std::vector<double>& diag,
              std::vector<double>& off) {
    const double h = prob.rho_max / (points + 1);
    diag.resize(points);
    off.assign(points - 1, -1.0 / (h * h));
    for (int i = 0; i < points; ++i) {
        const double rho = (i + 1) * h;
        diag[i] = 2.0 / (h * h) +
                  lattice_inverse_sq(prob.singular_power, i + 1) / (rho * rho) +
                  prob.quad * rho * rho + prob.shift;
    }
}

// Operator eigenvalues (of -u'' + W u) for the lowest `count` states on a grid
// with `points` interior nodes.
std::vector<double> grid_eigenvalues(const RadialProblem& prob, int points, int count) {
    std::vector<double> diag, off;
    assemble(prob, points, diag, off);
    return tridiag::lowest_eigenvalues(diag, off, count);
}

}  // namespace

OracleSpectrum solve_radial(const SystemParams& p, const PotentialParams& v, int ell,
                            const OracleConfig& cfg) {
    if (cfg.grid_points < 200) {
        throw std::invalid_argument("oracle: grid_points must be >= 200");
    }
    if (cfg.eigs_requested < 1) {
        throw std::invalid_argument("oracle: eigs_requested must be >= 1");
    }
    const RadialProblem prob = make_problem(p, v, ell, cfg);

    const int n_coarse = cfg.grid_points;
    const int n_fine = 2 * n_coarse + 1;  // exactly halves the spacing
    const auto coarse = grid_eigenvalues(prob, n_coarse, cfg.eigs_requested);
    const auto fine = grid_eigenvalues(prob, n_fine, cfg.eigs_requested);

    OracleSpectrum spectrum;
    spectrum.rho_max = prob.rho_max;
    spectrum.grid_points = n_coarse;
    spectrum.eigenvalues.reserve(coarse.size());
    spectrum.richardson_error.reserve(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        spectrum.eigenvalues.push_back((4.0 * fine[i] - coarse[i]) / 3.0 / prob.two_m);
        spectrum.richardson_error.push_back(std::abs(fine[i] - coarse[i]) / 3.0 / prob.two_m);
    }

    // Ground-state mass near the truncation boundary signals a clipped domain.
    {
        const double h = prob.rho_max / (n_fine + 1);
        std::vector<double> diag, off;
        assemble(prob, n_fine, diag, off);
        const auto u = tridiag::eigenvector(diag, off, fine[0]);
        double tail = 0.0, total = 0.0;
        for (int i = 0; i < n_fine; ++i) {
            const double w = u[i] * u[i];
            total += w;
            if ((i + 1) * h >= 0.95 * prob.rho_max) tail += w;
        }
        if (tail >= 1e-8 * total) {
            throw TruncationTooSmall("ground-state mass fraction " + std::to_string(tail / total) +
                                     " within 5% of rho_max = " + std::to_string(prob.rho_max));
        }
    }
    return spectrum;
}

RadialMode solve_radial_mode(const SystemParams& p, const PotentialParams& v, int ell,
                             int state, const OracleConfig& cfg) {
    if (state < 0) throw std::invalid_argument("oracle: state index must be >= 0");
    if (cfg.grid_points < 200) {
        throw std::invalid_argument("oracle: grid_points must be >= 200");
    }
    const RadialProblem prob = make_problem(p, v, ell, cfg);
    const int n = 2 * cfg.grid_points + 1;
    const double h = prob.rho_max / (n + 1);
    std::vector<double> diag, off;
    assemble(prob, n, diag, off);
    RadialMode mode;
    mode.rho.resize(n);
    for (int i = 0; i < n; ++i) mode.rho[i] = (i + 1) * h;
    const auto eigs = tridiag::lowest_eigenvalues(diag, off, state + 1);
    mode.energy = eigs[state] / prob.two_m;
    mode.u = tridiag::eigenvector(diag, off, eigs[state]);
    return mode;
}

std::vector<double> solve_radial_raw(const SystemParams& p, const PotentialParams& v,
                                     int ell, double rho_max, int grid_points, int count) {
    if (!(rho_max > 0.0)) throw std::invalid_argument("oracle: rho_max must be positive");
    if (grid_points < 2) throw std::invalid_argument("oracle: grid_points must be >= 2");
    OracleConfig cfg;
    cfg.rho_max = rho_max;
    const RadialProblem prob = make_problem(p, v, ell, cfg);
    auto eigs = grid_eigenvalues(prob, grid_points, count);
    for (double& e : eigs) e /= prob.two_m;
    return eigs;
}

int count_nodes(const std::vector<double>& u) {
    double peak = 0.0;
    for (double x : u) peak = std::max(peak, std::abs(x));
    const double floor = 1e-8 * peak;
    int nodes = 0;
    int last_sign = 0;
    for (double x : u) {
        if (std::abs(x) <= floor) continue;
        const int sign = x > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

}  // namespace screwspec
