#include "screwspec/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "screwspec/critical.hpp"
#include "screwspec/quadrature.hpp"
#include "screwspec/spectrum.hpp"
#include "screwspec/wavefunction.hpp"

namespace screwspec {

bool OracleValidation::all_ok() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const EntryResult& e) { return e.status == EntryStatus::ok; });
}

OracleValidation validate_closed_forms(std::span<const GridEntry> grid, double tol, int n_max,
                                       const OracleConfig& cfg) {
    if (grid.empty()) {
        throw std::invalid_argument("validate_closed_forms: empty parameter grid");
    }
    OracleValidation report;
    report.tolerance = tol;
    report.n_max = n_max;
    for (const GridEntry& entry : grid) {
        EntryResult result;
        result.entry = entry;
        try {
            OracleConfig local = cfg;
            local.eigs_requested = std::max(local.eigs_requested, n_max + 1);
            const OracleSpectrum spectrum =
                solve_radial(entry.params, entry.potential, entry.ell, local);
            double worst = 0.0;
            for (int n = 0; n <= n_max; ++n) {
                const double closed =
                    energy_pseudoharmonic(entry.params, entry.potential, {n, entry.ell}).energy;
                const double rel =
                    std::abs(spectrum.eigenvalues[n] - closed) / std::max(1e-30, std::abs(closed));
                worst = std::max(worst, rel);
            }
            result.max_rel_err = worst;
            result.status = worst <= tol ? EntryStatus::ok : EntryStatus::mismatch;
            if (result.status == EntryStatus::mismatch) {
                result.message = "max relative error " + std::to_string(worst) +
                                 " exceeds tolerance " + std::to_string(tol);
            }
        } catch (const DomainError& err) {
            result.status = EntryStatus::failed_precondition;
            result.message = err.what();
        }
        report.entries.push_back(std::move(result));
    }
    return report;
}

bool all_hard_pass(std::span<const Check> checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.informational || c.pass; });
}

namespace {

constexpr double kBaseK = 0.5;

SystemParams base_params(double beta, double omega = 0.0) {
    SystemParams p;
    p.mass = 1.0;
    p.quadrupole = 1.0;
    p.lambda = 1.0;
    p.omega = omega;
    p.wave_number = kBaseK;
    p.beta = beta;
    return p;
}

struct CriticalRef {
    const char* pot;  // "free" | "ph" | "harm" | "invsq"
    double c1, c2, c3;
    double beta;
    int n;
    double omega_ref;
    double tol;
};

// Reference zero-energy thresholds for ell = lambda = m = M = 1, k = 0.5.
constexpr CriticalRef kCriticalRefs[] = {
    {"free", 0, 0, 0, 0.5, 0, 9.71, 0.01},    {"free", 0, 0, 0, 0.5, 1, 48.83, 0.01},
    {"free", 0, 0, 0, 0.5, 2, 116.39, 0.01},  {"free", 0, 0, 0, 0.5, 3, 212.39, 0.01},
    {"free", 0, 0, 0, 0.0, 0, 6.73, 0.01},
    {"ph", 1, 1, 1, 0.5, 0, 26.41, 0.02},     {"ph", 1, 1, 1, 0.5, 1, 77.71, 0.02},
    {"ph", 1, 1, 1, 0.5, 2, 157.39, 0.02},    {"ph", 1, 1, 1, 0.5, 3, 265.50, 0.02},
    {"harm", 1, 0, 0, 0.5, 0, 10.69, 0.02},   {"harm", 1, 0, 0, 0.5, 1, 49.82, 0.02},
    {"harm", 1, 0, 0, 0.5, 2, 117.39, 0.02},  {"harm", 1, 0, 0, 0.5, 3, 213.39, 0.02},
    {"invsq", 0, 1, 0, 0.5, 0, 22.88, 0.02},  {"invsq", 0, 1, 0, 0.5, 1, 74.09, 0.02},
    {"invsq", 0, 1, 0, 0.5, 2, 153.75, 0.02}, {"invsq", 0, 1, 0, 0.5, 3, 261.85, 0.02},
    {"ph", 1, 1, 1, 0.0, 1, 46.48, 0.02},     {"ph", 1, 1, 1, 0.8, 1, 117.52, 0.05},
    {"harm", 1, 0, 0, 0.0, 1, 31.74, 0.02},   {"harm", 1, 0, 0, 0.8, 1, 71.91, 0.02},
    {"invsq", 0, 1, 0, 0.0, 1, 43.53, 0.05},  {"invsq", 0, 1, 0, 0.8, 1, 113.24, 0.05},
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

void critical_reference_checks(std::vector<Check>& checks) {
    double worst_gap = 0.0;
    for (const CriticalRef& ref : kCriticalRefs) {
        const SystemParams p = base_params(ref.beta);
        const PotentialParams v{ref.c1, ref.c2, ref.c3};
        const QuantumNumbers q{ref.n, 1};

        Check check;
        check.id = std::string("critical.") + ref.pot + ".beta" + fmt(ref.beta) + ".n" +
                   std::to_string(ref.n);
        check.description = "zero-energy threshold omega_c";
        check.reference = ref.omega_ref;
        check.tolerance = ref.tol;
        try {
            const CriticalResult closed = omega_c_closed(p, v, q, Branch::plus);
            const CriticalResult bisect = omega_c_auto_bisect(p, v, q, 1e-10);
            check.computed = closed.omega_c;
            check.pass = std::abs(closed.omega_c - ref.omega_ref) <= ref.tol;
            worst_gap = std::max(worst_gap, std::abs(closed.omega_c - bisect.omega_c));
            check.detail = "bisection " + fmt(bisect.omega_c);
        } catch (const DomainError& err) {
            check.pass = false;
            check.detail = err.what();
        }
        checks.push_back(std::move(check));
    }
    Check agree;
    agree.id = "critical.closed_vs_bisection";
    agree.description = "max |closed-form - bisection| over the reference set";
    agree.computed = worst_gap;
    agree.tolerance = 1e-6;
    agree.pass = worst_gap < 1e-6;
    checks.push_back(std::move(agree));

    // Thresholds increase with n in every reference family.
    Check mono;
    mono.id = "critical.monotone_in_n";
    mono.description = "omega_c strictly increasing in n per configuration";
    bool ok = true;
    for (const char* pot : {"free", "ph", "harm", "invsq"}) {
        double prev = -1.0;
        for (const CriticalRef& ref : kCriticalRefs) {
            if (std::string(ref.pot) != pot || ref.beta != 0.5) continue;
            const CriticalResult closed = omega_c_closed(
                base_params(ref.beta), {ref.c1, ref.c2, ref.c3}, {ref.n, 1}, Branch::plus);
            ok = ok && closed.omega_c > prev;
            prev = closed.omega_c;
        }
    }
    mono.computed = ok ? 1.0 : 0.0;
    mono.reference = 1.0;
    mono.pass = ok;
    checks.push_back(std::move(mono));
}

void oracle_checks(std::vector<Check>& checks, const ValidationOptions& opts) {
    struct PotCase {
        const char* name;
        PotentialParams v;
    };
    const PotCase pots[] = {
        {"free", {0, 0, 0}}, {"ph", {1, 1, 1}}, {"harm", {1, 0, 0}}, {"invsq", {0, 1, 0}}};

    OracleConfig cfg;
    cfg.grid_points = opts.oracle_grid_points;
    cfg.eigs_requested = 4;

    for (const PotCase& pot : pots) {
        std::vector<GridEntry> grid;
        for (double beta : {0.0, 0.5, 0.8}) {
            grid.push_back({base_params(beta, 20.0), pot.v, 1});
        }
        const OracleValidation report = validate_closed_forms(grid, opts.oracle_tol, 3, cfg);
        Check check;
        check.id = std::string("oracle.match.") + pot.name;
        check.description = "finite-difference eigenvalues vs closed form, n=0..3, beta in {0,0.5,0.8}";
        double worst = 0.0;
        for (const EntryResult& e : report.entries) worst = std::max(worst, e.max_rel_err);
        check.computed = worst;
        check.tolerance = opts.oracle_tol;
        check.pass = report.all_ok();
        checks.push_back(std::move(check));
    }

    // Order of accuracy from three dyadic refinements of the raw grids.
    for (const PotCase& pot : {pots[0], pots[1]}) {
        const SystemParams p = base_params(0.5, 20.0);
        const double wsq = effective_frequency_sq(p, pot.v);
        const double rho_max = 10.0 / std::pow(wsq, 0.25);
        const double closed = energy_pseudoharmonic(p, pot.v, {0, 1}).energy;
        std::vector<double> log_h, log_err;
        for (int n : {500, 1000, 2000}) {
            const double e0 = solve_radial_raw(p, pot.v, 1, rho_max, n, 1)[0];
            log_h.push_back(std::log(rho_max / (n + 1)));
            log_err.push_back(std::log(std::abs(e0 - closed)));
        }
        const double xm = (log_h[0] + log_h[1] + log_h[2]) / 3.0;
        const double ym = (log_err[0] + log_err[1] + log_err[2]) / 3.0;
        double num = 0.0, den = 0.0;
        for (int i = 0; i < 3; ++i) {
            num += (log_h[i] - xm) * (log_err[i] - ym);
            den += (log_h[i] - xm) * (log_h[i] - xm);
        }
        const double slope = num / den;
        Check check;
        check.id = std::string("oracle.order.") + pot.name;
        check.description = "finite-difference convergence order";
        check.computed = slope;
        check.reference = 2.0;
        check.tolerance = 0.2;
        check.pass = std::abs(slope - 2.0) <= 0.2;
        checks.push_back(std::move(check));
    }
}

void reduction_identity_check(std::vector<Check>& checks) {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> mass_d(0.2, 3.0), mm_d(0.2, 3.0),
        lambda_d(-2.0, 2.0), omega_d(-1.0, 30.0), k_d(-2.0, 2.0), beta_d(0.0, 2.0);
    std::uniform_int_distribution<int> n_d(0, 5), ell_d(-5, 5);

    Check check;
    check.id = "spectrum.reduction_identity";
    check.description = "pseudo-harmonic energy with c1=c2=c3=0 equals the free energy";
    int done = 0;
    double worst = 0.0;
    while (done < 10000) {
        SystemParams p;
        p.mass = mass_d(rng);
        p.quadrupole = mm_d(rng);
        p.lambda = lambda_d(rng);
        p.omega = omega_d(rng);
        p.wave_number = k_d(rng);
        p.beta = beta_d(rng);
        const QuantumNumbers q{n_d(rng), ell_d(rng)};
        const double ml = p.quadrupole * p.lambda;
        if (ml * ml + 2.0 * p.mass * ml * p.omega < 0.0) continue;  // keep valid draws only
        const double free_e = energy_free(p, q).energy;
        const double ph_e = energy_pseudoharmonic(p, PotentialParams{}, q).energy;
        worst = std::max(worst, std::abs(ph_e - free_e));
        ++done;
    }
    check.computed = worst;
    check.tolerance = 0.0;
    check.pass = worst == 0.0;
    checks.push_back(std::move(check));
}

void degeneracy_checks(std::vector<Check>& checks) {
    SystemParams p = base_params(0.0);
    p.wave_number = 0.0;

    std::vector<QuantumNumbers> levels;
    for (int n = 0; n <= 5; ++n)
        for (int ell = -5; ell <= 5; ++ell) levels.push_back({n, ell});

    // ell-independence on ell >= 0 at fixed n, exact equality.
    {
        Check check;
        check.id = "spectrum.ell_independence";
        check.description = "E independent of ell >= 0 at omega = 0 (exact)";
        double worst = 0.0;
        for (int n = 0; n <= 5; ++n) {
            const double e0 = energy_free(p, {n, 0}).energy;
            for (int ell = 1; ell <= 5; ++ell) {
                worst = std::max(worst, std::abs(energy_free(p, {n, ell}).energy - e0));
            }
        }
        check.computed = worst;
        check.pass = worst == 0.0;
        checks.push_back(std::move(check));
    }

    // Static classes follow n (ell >= 0) resp. n + |ell| (ell < 0).
    {
        Check check;
        check.id = "spectrum.degeneracy_static";
        check.description = "degeneracy classes at omega=0, beta=0, k=0 match n resp. n+|ell|";
        const auto classes = degeneracy_classes(p, {}, levels, 1e-9);
        auto key = [](const QuantumNumbers& q) { return q.ell >= 0 ? q.n : q.n - q.ell; };
        int mismatches = 0;
        for (const DegeneracyClass& cls : classes) {
            for (const QuantumNumbers& member : cls.members) {
                if (key(member) != key(cls.members.front())) ++mismatches;
            }
        }
        // every pair with equal key must share a class
        std::map<int, int> class_of_key;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const int k = key(classes[i].members.front());
            if (class_of_key.count(k)) ++mismatches;
            class_of_key[k] = static_cast<int>(i);
        }
        check.computed = mismatches;
        check.pass = mismatches == 0;
        checks.push_back(std::move(check));
    }

    // Rotation splits every static class into singletons.
    {
        Check check;
        check.id = "spectrum.degeneracy_split";
        check.description = "omega != 0 splits the static degeneracy classes";
        SystemParams rotating = p;
        rotating.omega = 5.0;
        const auto classes = degeneracy_classes(rotating, {}, levels, 1e-9);
        std::size_t biggest = 0;
        for (const DegeneracyClass& cls : classes) biggest = std::max(biggest, cls.members.size());
        check.computed = static_cast<double>(biggest);
        check.reference = 1.0;
        check.pass = biggest == 1;
        checks.push_back(std::move(check));
    }
}

// Numerical integral of |psi|^2 under the solution's measure by adaptive Simpson.
double measure_integral(const RadialSolution& sol) {
    const double t_cut = 50.0 + 10.0 * sol.n + 5.0 * sol.nu_abs;
    const double rho_cut = std::sqrt(t_cut / sol.width);
    return quad::adaptive_simpson(
        [&sol](double rho) {
            const double psi = radial_psi(sol, rho);
            const double weight = sol.measure == Measure::rho_weighted ? rho : 1.0;
            return psi * psi * weight;
        },
        0.0, rho_cut, 1e-12);
}

void wavefunction_checks(std::vector<Check>& checks) {
    const SystemParams p = base_params(0.5, 20.0);
    const PotentialParams ph{1, 1, 1};
    const PotentialParams free_v{};

    // Unit norm under both measures, numerically.
    {
        Check check;
        check.id = "wavefunction.norm_quadrature";
        check.description = "normalized |psi|^2 integrates to 1 under its measure";
        double worst = 0.0;
        for (const PotentialParams* v : {&free_v, &ph}) {
            for (int n = 0; n <= 3; ++n) {
                for (Measure meas : {Measure::rho_weighted, Measure::flat}) {
                    const RadialSolution sol = build_solution(p, *v, {n, 1}, meas);
                    worst = std::max(worst, std::abs(measure_integral(sol) - 1.0));
                }
            }
        }
        check.computed = worst;
        check.tolerance = 1e-9;
        check.pass = worst < 1e-9;
        checks.push_back(std::move(check));
    }

    // Closed Gamma form against Gauss-Laguerre quadrature.
    {
        Check check;
        check.id = "wavefunction.norm_closed_vs_quadrature";
        check.description = "closed-form normalization vs Gauss-Laguerre";
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const RadialSolution sol = build_solution(p, ph, {n, 1}, Measure::rho_weighted);
            const double s = sol.nu_abs;
            const double closed =
                std::sqrt(2.0 * std::pow(sol.width, s + 1.0) *
                          std::exp(std::lgamma(n + 1.0) - std::lgamma(n + s + 1.0)));
            const auto rule = quad::gauss_laguerre(n + 2, s);
            double integral = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double l = laguerre(n, s, rule.nodes[i]);
                integral += rule.weights[i] * l * l;
            }
            integral /= 2.0 * std::pow(sol.width, s + 1.0);
            const double quad_norm = 1.0 / std::sqrt(integral);
            worst = std::max(worst, std::abs(closed - quad_norm) / quad_norm);
        }
        check.computed = worst;
        check.tolerance = 1e-10;
        check.pass = worst < 1e-10;
        checks.push_back(std::move(check));
    }

    // Orthogonality under the rho-weighted measure.
    {
        Check check;
        check.id = "wavefunction.orthogonality";
        check.description = "rho-weighted inner products between different n";
        double worst = 0.0;
        std::vector<RadialSolution> sols;
        for (int n = 0; n <= 3; ++n) sols.push_back(build_solution(p, ph, {n, 1}));
        const double s = sols[0].nu_abs;
        const auto rule = quad::gauss_laguerre(8, s);
        for (int a = 0; a <= 3; ++a) {
            for (int b = a + 1; b <= 3; ++b) {
                double acc = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    acc += rule.weights[i] * laguerre(a, s, rule.nodes[i]) *
                           laguerre(b, s, rule.nodes[i]);
                }
                acc *= sols[a].norm * sols[b].norm / (2.0 * std::pow(sols[0].width, s + 1.0));
                worst = std::max(worst, std::abs(acc));
            }
        }
        check.computed = worst;
        check.tolerance = 1e-8;
        check.pass = worst < 1e-8;
        checks.push_back(std::move(check));
    }

    // Residual of the radial equation with the paired closed-form energy.
    {
        Check check;
        check.id = "wavefunction.ode_residual";
        check.description = "5-point stencil residual of the radial equation";
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> rho_d(0.15, 1.6);
        double worst = 0.0;
        for (const PotentialParams* v : {&free_v, &ph}) {
            for (int n = 0; n <= 2; ++n) {
                const RadialSolution sol = build_solution(p, *v, {n, 1});
                const double energy = energy_pseudoharmonic(p, *v, {n, 1}).energy;
                const double nu = effective_angular_index(p, {n, 1});
                const double wsq = effective_frequency_sq(p, *v);
                const double ml = p.quadrupole * p.lambda;
                const double h = 1e-4;
                for (int trial = 0; trial < 100; ++trial) {
                    const double rho = rho_d(rng);
                    const double f2 = radial_psi(sol, rho - 2 * h), f1 = radial_psi(sol, rho - h),
                                 f0 = radial_psi(sol, rho), g1 = radial_psi(sol, rho + h),
                                 g2 = radial_psi(sol, rho + 2 * h);
                    const double d1 = (f2 - 8.0 * f1 + 8.0 * g1 - g2) / (12.0 * h);
                    const double d2 =
                        (-f2 + 16.0 * f1 - 30.0 * f0 + 16.0 * g1 - g2) / (12.0 * h * h);
                    const double coef = 2.0 * p.mass * (energy - v->c3) -
                                        p.wave_number * p.wave_number +
                                        2.0 * (ml + p.mass * p.omega) * nu -
                                        (nu * nu + 2.0 * p.mass * v->c2) / (rho * rho) -
                                        wsq * rho * rho;
                    const double residual = d2 + d1 / rho + coef * f0;
                    const double scale =
                        std::abs(d2) + std::abs(d1 / rho) + std::abs(coef * f0);
                    worst = std::max(worst, std::abs(residual) / scale);
                }
            }
        }
        check.computed = worst;
        check.tolerance = 1e-5;
        check.pass = worst < 1e-5;
        checks.push_back(std::move(check));
    }

    // The n-th state has exactly n interior density zeros.
    {
        Check check;
        check.id = "wavefunction.node_count";
        check.description = "number of interior zeros equals n";
        int mismatches = 0;
        for (const PotentialParams* v : {&free_v, &ph}) {
            for (int n = 0; n <= 3; ++n) {
                const RadialSolution sol = build_solution(p, *v, {n, 1});
                const double rho_max = 6.0 / std::sqrt(sol.width);
                std::vector<double> psi(4001);
                for (int i = 0; i < 4001; ++i) {
                    psi[i] = radial_psi(sol, (i + 1) * rho_max / 4002.0);
                }
                if (count_nodes(psi) != n) ++mismatches;
            }
        }
        check.computed = mismatches;
        check.pass = mismatches == 0;
        checks.push_back(std::move(check));
    }
}

void discrepancy_checks(std::vector<Check>& checks) {
    // Kink location of E(beta) versus the k/ell convention of published tables.
    {
        const SystemParams p = base_params(0.5);
        const BetaKink kink = beta_kink(p, 1);
        Check check;
        check.id = "info.beta_kink";
        check.description = "slope discontinuity of E(beta) at ell/k; published value uses k/ell";
        check.computed = kink.beta_star;
        check.reference = kink.reciprocal;
        check.informational = true;
        check.pass = true;
        check.detail = "computed kink at beta = " + fmt(kink.beta_star) +
                       "; published convention k/ell = " + fmt(kink.reciprocal);
        checks.push_back(std::move(check));
    }

    // Confinement thresholds in beta at omega = 20 versus the published 1.43 / 0.30.
    {
        const SystemParams p = base_params(0.5, 20.0);
        Check check;
        check.id = "info.beta_threshold";
        check.description = "beta zero crossings of E at omega = 20 (published: 1.43, 0.30)";
        check.informational = true;
        check.pass = true;
        std::string detail;
        try {
            const double root0 = beta_confinement_threshold(p, {}, {0, 1}, 0.0, 1.99);
            check.computed = root0;
            detail = "n=0 crossing at beta = " + fmt(root0) + " (published 1.43)";
        } catch (const DomainError& err) {
            detail = std::string("n=0: ") + err.what();
        }
        try {
            const double root1 = beta_confinement_threshold(p, {}, {1, 1}, 0.0, 1.99);
            detail += "; n=1 crossing at beta = " + fmt(root1) + " (published 0.30)";
        } catch (const DomainError&) {
            detail += "; n=1: no sign change on [0, 1.99], E stays positive (published 0.30)";
        }
        check.reference = 1.43;
        check.detail = detail;
        checks.push_back(std::move(check));
    }

    // Published normalization constants 2.10 / 1.62 / 1.35 for beta = 0.5.
    // The quoted parameters are under-determined, so fit the only free knob
    // (the Gaussian width) per measure and per reading of "first three states"
    // and report which combination, if any, reproduces all three within 0.02.
    {
        const double refs[3] = {2.10, 1.62, 1.35};
        const SystemParams p = base_params(0.5);
        const PotentialParams ph{1, 1, 1};
        const double nu = effective_angular_index(p, {0, 1});
        const double s = std::sqrt(2.0 * p.mass * ph.c2 + nu * nu);

        Check check;
        check.id = "info.norm_constants";
        check.description = "published normalization constants under both measures and state sets";
        check.informational = true;
        double best_dev = std::numeric_limits<double>::infinity();
        std::string detail;
        for (int first_n : {0, 1}) {
            for (Measure meas : {Measure::rho_weighted, Measure::flat}) {
                double slope, c[3];
                if (meas == Measure::rho_weighted) {
                    slope = 0.5 * (s + 1.0);
                    for (int i = 0; i < 3; ++i) {
                        const int n = first_n + i;
                        c[i] = 0.5 * (std::log(2.0) + std::lgamma(n + 1.0) -
                                      std::lgamma(n + s + 1.0));
                    }
                } else {
                    slope = 0.5 * (s + 0.5);
                    const auto rule = quad::gauss_laguerre(first_n + 5, s - 0.5);
                    for (int i = 0; i < 3; ++i) {
                        const int n = first_n + i;
                        double integral = 0.0;
                        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                            const double l = laguerre(n, s, rule.nodes[j]);
                            integral += rule.weights[j] * l * l;
                        }
                        c[i] = 0.5 * (std::log(2.0) - std::log(integral));
                    }
                }
                double mean = 0.0;
                for (int i = 0; i < 3; ++i) mean += std::log(refs[i]) - c[i];
                const double x = mean / (3.0 * slope);  // ln(width) of the best fit
                double dev = 0.0;
                for (int i = 0; i < 3; ++i) {
                    dev = std::max(dev, std::abs(std::exp(c[i] + slope * x) - refs[i]));
                }
                const double width = std::exp(x);
                const double omega_fit = (width * width - (2.0 * ph.c1 + 1.0)) / 2.0;
                detail += std::string(detail.empty() ? "" : "; ") +
                          (meas == Measure::rho_weighted ? "rho" : "flat") + ",n=" +
                          std::to_string(first_n) + ".." + std::to_string(first_n + 2) +
                          ": max dev " + fmt(dev) + " at omega = " + fmt(omega_fit);
                best_dev = std::min(best_dev, dev);
            }
        }
        check.computed = best_dev;
        check.tolerance = 0.02;
        if (best_dev <= 0.02) {
            check.informational = false;  // a genuine match upgrades this to a hard PASS
            check.pass = true;
        } else {
            check.pass = false;
        }
        check.detail = detail;
        checks.push_back(std::move(check));
    }
}

}  // namespace

std::vector<Check> run_validation(const ValidationOptions& opts) {
    std::vector<Check> checks;
    critical_reference_checks(checks);
    oracle_checks(checks, opts);
    reduction_identity_check(checks);
    degeneracy_checks(checks);
    wavefunction_checks(checks);
    discrepancy_checks(checks);
    return checks;
}

}  // namespace screwspec
