#pragma once

#include "screwspec/errors.hpp"

namespace screwspec {

/// Physical configuration of the system in natural units (hbar = c = q = 1).
///
/// Defaults mirror the running numerical example used throughout the
/// reference tables: m = M = lambda = 1, k = 0.5, beta = 0.5.
struct SystemParams {
    double mass = 1.0;         ///< m > 0
    double quadrupole = 1.0;   ///< M > 0, scalar magnetic quadrupole moment
    double lambda = 1.0;       ///< charge-density constant of the radial field E = lambda/2 rho^2
    double omega = 0.0;        ///< angular velocity of the rotating frame about z
    double wave_number = 0.5;  ///< k, axial wave number of the e^{ikz} plane-wave factor
    double beta = 0.5;         ///< dislocation parameter b_z / (2 pi), >= 0

    /// Throws std::invalid_argument when a structural invariant is violated.
    void validate() const;
};

/// Static scalar potential V(rho) = c1 rho^2 + c2 / rho^2 + c3.
/// The all-zero instance selects the free case.
struct PotentialParams {
    double c1 = 0.0;  ///< harmonic coefficient, >= 0
    double c2 = 0.0;  ///< inverse-square coefficient, >= 0
    double c3 = 0.0;  ///< constant offset

    bool is_zero() const { return c1 == 0.0 && c2 == 0.0 && c3 == 0.0; }
    void validate() const;
};

struct QuantumNumbers {
    int n = 0;    ///< radial quantum number, >= 0
    int ell = 0;  ///< angular quantum number, any integer

    void validate() const;
};

/// Derived quantities every downstream module consumes.
struct EffectiveQuantities {
    double nu;        ///< torsion-shifted angular index, ell - beta*k
    double b_eff;     ///< uniform effective magnetic field, 2 M lambda
    double omega_sq;  ///< squared Gaussian frequency, M^2 l^2 + 2 m M l w + 2 m c1
};

/// nu = ell - beta*k. Exact arithmetic on the inputs.
double effective_angular_index(const SystemParams& p, const QuantumNumbers& q);

/// z-component of the effective magnetic field, 2 M lambda.
double effective_magnetic_field(const SystemParams& p);

/// M^2 lambda^2 + 2 m M lambda omega + 2 m c1.
/// Throws NegativeDiscriminant when the result is negative (no bound states).
double effective_frequency_sq(const SystemParams& p, const PotentialParams& v = {});

EffectiveQuantities effective_quantities(const SystemParams& p, const PotentialParams& v,
                                         const QuantumNumbers& q);

}  // namespace screwspec
