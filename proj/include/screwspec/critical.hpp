#pragma once

#include <optional>

#include "screwspec/params.hpp"
#include "screwspec/spectrum.hpp"

namespace screwspec {

/// Sign choice inside the closed-form radical. The plus branch is the
/// physically documented one; minus is exposed for completeness but
/// should be treated as experimental.
enum class Branch { plus, minus };

enum class RootMethod { closed_form, bisection };

struct CriticalResult {
    double omega_c;
    std::optional<Branch> branch;  ///< set for closed-form results only
    double residual;               ///< |E(omega_c)| after re-substitution
    RootMethod method;
};

/// Zero-energy rotation threshold by the closed-form inversion of E(omega) = 0.
/// Squaring the radical can manufacture roots, so every candidate is
/// re-substituted into the energy formula and rejected as SpuriousRoot when the
/// residual exceeds 1e-8 * max(1, |energy terms|).
/// Throws DegenerateDenominator when nu = 0 and NegativeInnerRadical when the
/// quadratic has no real root.
CriticalResult omega_c_closed(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, Branch branch = Branch::plus);

/// Independent check of the closed form: bracketed bisection on
/// omega -> E(omega). Both bracket ends must satisfy the reality condition.
CriticalResult omega_c_bisect(const SystemParams& p, const PotentialParams& v,
                              const QuantumNumbers& q, double omega_lo, double omega_hi,
                              double tol = 1e-10);

/// Bisection with automatic bracketing: the upper end grows geometrically
/// from [0, 1] until the energy changes sign, giving up past 1e6.
CriticalResult omega_c_auto_bisect(const SystemParams& p, const PotentialParams& v,
                                   const QuantumNumbers& q, double tol = 1e-10);

/// E(beta) loses smoothness where nu = ell - beta k changes sign, at
/// beta_star = ell / k. `reciprocal` carries the alternate k / ell convention
/// found in published tables, for side-by-side comparison.
struct BetaKink {
    double beta_star;
    double reciprocal;
};

/// Throws ZeroWaveNumber when k = 0 (E has no beta dependence).
BetaKink beta_kink(const SystemParams& p, int ell);

/// Root of beta -> E(beta) at fixed omega, by bisection to tol.
/// Throws NoSignChange when the bracket does not straddle a root.
double beta_confinement_threshold(const SystemParams& p, const PotentialParams& v,
                                  const QuantumNumbers& q, double beta_lo, double beta_hi,
                                  double tol = 1e-10);

}  // namespace screwspec
