#include "screwspec/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "screwspec/quadrature.hpp"

namespace screwspec {

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
    if (n == 0) return 1.0;
    double lm1 = 1.0;             // L_0
    double l = 1.0 + alpha - x;   // L_1
    for (int j = 2; j <= n; ++j) {
        const double lm2 = lm1;
        lm1 = l;
        l = ((2.0 * j - 1.0 + alpha - x) * lm1 - (j - 1.0 + alpha) * lm2) / j;
    }
    return l;
}

double radial_psi(const RadialSolution& sol, double rho) {
    const double t = sol.width * rho * rho;
    return sol.norm * std::pow(rho, sol.nu_abs) * std::exp(-0.5 * t) *
           laguerre(sol.n, sol.laguerre_alpha, t);
}

namespace {

// int_0^inf rho^{2S} e^{-w rho^2} L^S_n(w rho^2)^2 * rho^{eta} drho with
// eta = 1 (rho-weighted) or 0 (flat), via the substitution t = w rho^2. The
// Gauss-Laguerre weight exponent becomes S + (eta - 1)/2.
double squared_integral_gl(const RadialSolution& sol, int eta) {
    const double a = sol.nu_abs + 0.5 * (eta - 1);
    const auto rule = quad::gauss_laguerre(sol.n + 2, a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double l = laguerre(sol.n, sol.laguerre_alpha, rule.nodes[i]);
        acc += rule.weights[i] * l * l;
    }
    return acc / (2.0 * std::pow(sol.width, a + 1.0));
}

}  // namespace

double normalization(const RadialSolution& sol) {
    if (!(sol.width > 0.0)) {
        throw std::invalid_argument("normalization: width must be positive");
    }
    const double s = sol.nu_abs;
    double integral;  // of |psi/norm|^2 under the measure
    if (sol.measure == Measure::rho_weighted) {
        // Laguerre orthogonality gives the closed form; log-Gamma avoids
        // overflow at large n + nu_abs.
        integral = std::exp(std::lgamma(sol.n + s + 1.0) - std::lgamma(sol.n + 1.0) -
                            (s + 1.0) * std::log(sol.width)) /
                   2.0;
    } else {
        const double scale = squared_integral_gl(sol, 0);
        const double t_cut = 50.0 + 10.0 * sol.n + 5.0 * s;
        const double rho_cut = std::sqrt(t_cut / sol.width);
        integral = quad::adaptive_simpson(
            [&sol](double rho) {
                const double t = sol.width * rho * rho;
                const double psi = std::pow(rho, sol.nu_abs) * std::exp(-0.5 * t) *
                                   laguerre(sol.n, sol.laguerre_alpha, t);
                return psi * psi;
            },
            0.0, rho_cut, 1e-13 * scale);
    }
    const double check = squared_integral_gl(sol, sol.measure == Measure::rho_weighted ? 1 : 0);
    if (std::abs(integral - check) > 1e-10 * std::abs(check)) {
        throw QuadratureNonConvergent(
            "normalization: quadrature cross-check failed, integral = " +
            std::to_string(integral) + " vs Gauss-Laguerre " + std::to_string(check));
    }
    return 1.0 / std::sqrt(integral);
}

RadialSolution build_solution(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, Measure measure) {
    p.validate();
    v.validate();
    q.validate();
    const double nu = effective_angular_index(p, q);
    const double wsq = effective_frequency_sq(p, v);
    if (wsq == 0.0) {
        // Zero Gaussian width: the Laguerre family degenerates, nothing to normalize.
        throw NegativeDiscriminant(0.0);
    }
    const double c2m = 2.0 * p.mass * v.c2;
    const double s = (c2m == 0.0) ? std::abs(nu) : std::sqrt(c2m + nu * nu);
    RadialSolution sol{s, std::sqrt(wsq), s, q.n, 1.0, measure};
    sol.norm = normalization(sol);
    return sol;
}

std::vector<double> probability_density(const RadialSolution& sol,
                                        std::span<const double> rho_grid) {
    std::vector<double> out;
    out.reserve(rho_grid.size());
    for (double rho : rho_grid) {
        if (!(rho >= 0.0) || !std::isfinite(rho)) {
            throw std::invalid_argument("probability_density: grid values must be finite and >= 0");
        }
        const double psi = radial_psi(sol, rho);
        out.push_back(psi * psi);
    }
    return out;
}

}  // namespace screwspec
