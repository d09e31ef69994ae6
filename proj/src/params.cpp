#include "screwspec/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace screwspec {

void SystemParams::validate() const {
    if (!(mass > 0.0)) {
        throw std::invalid_argument("mass must be positive, got " + std::to_string(mass));
    }
    if (!(quadrupole > 0.0)) {
        throw std::invalid_argument("quadrupole moment must be positive, got " +
                                    std::to_string(quadrupole));
    }
    if (!(beta >= 0.0)) {
        throw std::invalid_argument("dislocation parameter beta must be >= 0, got " +
                                    std::to_string(beta));
    }
    if (!std::isfinite(lambda) || !std::isfinite(omega) || !std::isfinite(wave_number)) {
        throw std::invalid_argument("lambda, omega and wave_number must be finite");
    }
}

void PotentialParams::validate() const {
    if (!(c1 >= 0.0)) {
        throw std::invalid_argument("c1 must be >= 0, got " + std::to_string(c1));
    }
    if (!(c2 >= 0.0)) {
        throw std::invalid_argument("c2 must be >= 0, got " + std::to_string(c2));
    }
    if (!std::isfinite(c3)) {
        throw std::invalid_argument("c3 must be finite");
    }
}

void QuantumNumbers::validate() const {
    if (n < 0) {
        throw std::invalid_argument("radial quantum number n must be >= 0, got " +
                                    std::to_string(n));
    }
}

double effective_angular_index(const SystemParams& p, const QuantumNumbers& q) {
    return static_cast<double>(q.ell) - p.beta * p.wave_number;
}

double effective_magnetic_field(const SystemParams& p) {
    return 2.0 * p.quadrupole * p.lambda;
}

double effective_frequency_sq(const SystemParams& p, const PotentialParams& v) {
    const double ml = p.quadrupole * p.lambda;
    const double wsq = ml * ml + 2.0 * p.mass * ml * p.omega + 2.0 * p.mass * v.c1;
    if (wsq < 0.0) {
        throw NegativeDiscriminant(wsq);
    }
    return wsq;
}

EffectiveQuantities effective_quantities(const SystemParams& p, const PotentialParams& v,
                                         const QuantumNumbers& q) {
    return {effective_angular_index(p, q), effective_magnetic_field(p),
            effective_frequency_sq(p, v)};
}

}  // namespace screwspec
