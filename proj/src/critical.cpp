#include "screwspec/critical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace screwspec {

namespace {

// Sum of the absolute magnitudes of the energy terms, used to scale the
// residual acceptance threshold.
double energy_scale(const SystemParams& p, const PotentialParams& v, const QuantumNumbers& q) {
    const double nu = effective_angular_index(p, q);
    const double ml = p.quadrupole * p.lambda;
    const double c2m = 2.0 * p.mass * v.c2;
    const double s = (c2m == 0.0) ? std::abs(nu) : std::sqrt(c2m + nu * nu);
    const double wsq = effective_frequency_sq(p, v);
    return std::abs(v.c3) + p.wave_number * p.wave_number / (2.0 * p.mass) +
           std::abs((ml / p.mass + p.omega) * nu) +
           (1.0 + 2.0 * q.n + s) * std::sqrt(wsq) / p.mass;
}

double energy_at_omega(SystemParams p, const PotentialParams& v, const QuantumNumbers& q,
                       double omega) {
    p.omega = omega;
    return energy_pseudoharmonic(p, v, q).energy;
}

}  // namespace

CriticalResult omega_c_closed(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, Branch branch) {
    p.validate();
    v.validate();
    q.validate();
    const double nu = effective_angular_index(p, q);
    if (nu == 0.0) throw DegenerateDenominator();

    const double m = p.mass;
    const double ml = p.quadrupole * p.lambda;
    const double c2m = 2.0 * m * v.c2;
    const double s = (c2m == 0.0) ? std::abs(nu) : std::sqrt(c2m + nu * nu);
    const double poly = 1.0 + 2.0 * q.n + s;

    // E(w) = a0 - nu w + (poly/m) sqrt(qc + rc w); squaring E = 0 gives
    // nu^2 w^2 - (2 a0 nu + poly^2 rc / m^2) w + (a0^2 - poly^2 qc / m^2) = 0.
    const double a0 = v.c3 + p.wave_number * p.wave_number / (2.0 * m) - (ml / m) * nu;
    const double qc = 2.0 * m * v.c1 + ml * ml;
    const double rc = 2.0 * m * ml;

    const double qa = nu * nu;
    const double qb = -(2.0 * a0 * nu + poly * poly * rc / (m * m));
    const double qcoef = a0 * a0 - poly * poly * qc / (m * m);
    const double disc = qb * qb - 4.0 * qa * qcoef;
    if (disc < 0.0) throw NegativeInnerRadical(disc);

    const double root = (branch == Branch::plus) ? (-qb + std::sqrt(disc)) / (2.0 * qa)
                                                 : (-qb - std::sqrt(disc)) / (2.0 * qa);

    double residual;
    SystemParams at_root = p;
    at_root.omega = root;
    try {
        residual = std::abs(energy_pseudoharmonic(at_root, v, q).energy);
    } catch (const NegativeDiscriminant&) {
        throw SpuriousRoot(root, std::numeric_limits<double>::infinity());
    }
    const double scale = energy_scale(at_root, v, q);
    if (residual > 1e-8 * std::max(1.0, scale)) {
        throw SpuriousRoot(root, residual);
    }
    return {root, branch, residual, RootMethod::closed_form};
}

CriticalResult omega_c_bisect(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, double omega_lo, double omega_hi,
                              double tol) {
    p.validate();
    v.validate();
    q.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (omega_lo > omega_hi) std::swap(omega_lo, omega_hi);

    for (double end : {omega_lo, omega_hi}) {
        SystemParams pe = p;
        pe.omega = end;
        try {
            effective_frequency_sq(pe, v);
        } catch (const NegativeDiscriminant&) {
            throw RealityViolatedInBracket(end);
        }
    }
    // omega_sq is affine in omega, so validity at both ends covers the interior.

    double flo = energy_at_omega(p, v, q, omega_lo);
    double fhi = energy_at_omega(p, v, q, omega_hi);
    if (flo == 0.0) return {omega_lo, std::nullopt, 0.0, RootMethod::bisection};
    if (fhi == 0.0) return {omega_hi, std::nullopt, 0.0, RootMethod::bisection};
    if ((flo < 0.0) == (fhi < 0.0)) throw NoSignChange(omega_lo, omega_hi);

    double lo = omega_lo, hi = omega_hi;
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = energy_at_omega(p, v, q, mid);
        if (fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    const double residual = std::abs(energy_at_omega(p, v, q, root));
    return {root, std::nullopt, residual, RootMethod::bisection};
}

CriticalResult omega_c_auto_bisect(const SystemParams& p, const PotentialParams& v,
                                   const QuantumNumbers& q, double tol) {
    p.validate();
    v.validate();
    q.validate();
    const double f0 = energy_at_omega(p, v, q, 0.0);
    double hi = 1.0;
    while (hi <= 1e6) {
        const double fhi = energy_at_omega(p, v, q, hi);
        if (fhi == 0.0 || (fhi < 0.0) != (f0 < 0.0)) {
            return omega_c_bisect(p, v, q, 0.0, hi, tol);
        }
        hi *= 2.0;
    }
    throw NoSignChange(0.0, 1e6);
}

BetaKink beta_kink(const SystemParams& p, int ell) {
    p.validate();
    if (p.wave_number == 0.0) throw ZeroWaveNumber();
    return {static_cast<double>(ell) / p.wave_number,
            p.wave_number / static_cast<double>(ell)};
}

double beta_confinement_threshold(const SystemParams& p, const PotentialParams& v,
                                  const QuantumNumbers& q, double beta_lo, double beta_hi,
                                  double tol) {
    p.validate();
    v.validate();
    q.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    if (beta_lo > beta_hi) std::swap(beta_lo, beta_hi);
    if (beta_lo < 0.0) throw std::invalid_argument("beta bracket must be non-negative");

    auto energy_at_beta = [&](double beta) {
        SystemParams pb = p;
        pb.beta = beta;
        return energy_pseudoharmonic(pb, v, q).energy;
    };
    double flo = energy_at_beta(beta_lo);
    double fhi = energy_at_beta(beta_hi);
    if (flo == 0.0) return beta_lo;
    if (fhi == 0.0) return beta_hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw NoSignChange(beta_lo, beta_hi);

    double lo = beta_lo, hi = beta_hi;
    for (int it = 0; it < 400 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = energy_at_beta(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace screwspec
