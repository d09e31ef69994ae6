#include "screwspec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "screwspec/errors.hpp"

namespace screwspec::quad {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureNonConvergent("adaptive Simpson recursion limit reached on [" +
                                      std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 60);
}

GaussLaguerre gauss_laguerre(int q, double alpha) {
    if (q < 1) throw std::invalid_argument("gauss_laguerre: need at least one node");
    if (!(alpha > -1.0)) throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");

    GaussLaguerre rule;
    rule.nodes.resize(q);
    rule.weights.resize(q);

    double z = 0.0;
    for (int i = 0; i < q; ++i) {
        // Stroud-Secrest style initial guesses, then Newton on the recurrence.
        if (i == 0) {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * q + 1.8 * alpha);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * q);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
                  1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
                 (z - rule.nodes[i - 2]) / (1.0 + 0.3 * alpha);
        }
        double p1 = 0.0, p2 = 0.0, pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= q; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0 + alpha - z) * p2 - (j - 1.0 + alpha) * p3) / j;
            }
            pp = (q * p1 - (q + alpha) * p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw QuadratureNonConvergent("gauss_laguerre: Newton failed for node " +
                                          std::to_string(i));
        }
        rule.nodes[i] = z;
        rule.weights[i] =
            -std::exp(std::lgamma(alpha + q) - std::lgamma(static_cast<double>(q))) /
            (pp * q * p2);
    }
    return rule;
}

}  // namespace screwspec::quad
