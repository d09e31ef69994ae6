#pragma once

#include <span>
#include <vector>

#include "screwspec/params.hpp"

namespace screwspec {

enum class PotentialCase { free_case, pseudo_harmonic };

struct EnergyLevel {
    QuantumNumbers qn;
    double energy;        ///< natural units, no zero-point subtraction
    PotentialCase which;
};

/// Closed-form eigenvalue without static potential:
///   E = k^2/(2m) - (M l/m + w) nu + (1 + 2n + |nu|) sqrt(M^2 l^2 + 2 m M l w) / m.
/// Throws NegativeDiscriminant when the square root is not real.
EnergyLevel energy_free(const SystemParams& p, const QuantumNumbers& q);

/// Closed-form eigenvalue with V = c1 rho^2 + c2/rho^2 + c3:
///   E = c3 + k^2/(2m) - (M l/m + w) nu
///       + (1 + 2n + sqrt(2 m c2 + nu^2)) sqrt(2 m c1 + M^2 l^2 + 2 m M l w) / m.
/// Reduces bit-exactly to energy_free when c1 = c2 = c3 = 0.
EnergyLevel energy_pseudoharmonic(const SystemParams& p, const PotentialParams& v,
                                  const QuantumNumbers& q);

struct DegeneracyClass {
    double energy;                       ///< energy of the first (lowest-ordered) member
    std::vector<QuantumNumbers> members; ///< sorted by (n, ell)
};

/// Groups (n, ell) pairs whose energies agree within tol. Classes are ordered by
/// ascending energy; members within a class by (n, ell).
std::vector<DegeneracyClass> degeneracy_classes(const SystemParams& p, const PotentialParams& v,
                                                std::span<const QuantumNumbers> levels,
                                                double tol = 1e-9);

}  // namespace screwspec
