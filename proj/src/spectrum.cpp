#include "screwspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace screwspec {

EnergyLevel energy_free(const SystemParams& p, const QuantumNumbers& q) {
    p.validate();
    q.validate();
    const double nu = effective_angular_index(p, q);
    const double wsq = effective_frequency_sq(p);
    const double ml = p.quadrupole * p.lambda;
    const double e = p.wave_number * p.wave_number / (2.0 * p.mass)
                     - (ml / p.mass + p.omega) * nu
                     + (1.0 + 2.0 * q.n + std::abs(nu)) * std::sqrt(wsq) / p.mass;
    return {q, e, PotentialCase::free_case};
}

EnergyLevel energy_pseudoharmonic(const SystemParams& p, const PotentialParams& v,
                                  const QuantumNumbers& q) {
    p.validate();
    v.validate();
    q.validate();
    const double nu = effective_angular_index(p, q);
    const double wsq = effective_frequency_sq(p, v);
    const double ml = p.quadrupole * p.lambda;
    const double c2m = 2.0 * p.mass * v.c2;
    // c2 = 0 keeps |nu| instead of sqrt(nu^2) so the free-case reduction is exact.
    const double s = (c2m == 0.0) ? std::abs(nu) : std::sqrt(c2m + nu * nu);
    const double e = v.c3 + p.wave_number * p.wave_number / (2.0 * p.mass)
                     - (ml / p.mass + p.omega) * nu
                     + (1.0 + 2.0 * q.n + s) * std::sqrt(wsq) / p.mass;
    return {q, e, PotentialCase::pseudo_harmonic};
}

std::vector<DegeneracyClass> degeneracy_classes(const SystemParams& p, const PotentialParams& v,
                                                std::span<const QuantumNumbers> levels,
                                                double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("degeneracy tolerance must be positive");
    }
    struct Entry {
        double energy;
        QuantumNumbers qn;
    };
    std::vector<Entry> entries;
    entries.reserve(levels.size());
    for (const QuantumNumbers& qn : levels) {
        entries.push_back({energy_pseudoharmonic(p, v, qn).energy, qn});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.qn.n != b.qn.n) return a.qn.n < b.qn.n;
        return a.qn.ell < b.qn.ell;
    });

    std::vector<DegeneracyClass> classes;
    for (const Entry& e : entries) {
        // Compare against the class representative, not the previous member,
        // so near-ties cannot chain across more than tol.
        if (classes.empty() || std::abs(e.energy - classes.back().energy) > tol) {
            classes.push_back({e.energy, {}});
        }
        classes.back().members.push_back(e.qn);
    }
    for (DegeneracyClass& c : classes) {
        std::sort(c.members.begin(), c.members.end(),
                  [](const QuantumNumbers& a, const QuantumNumbers& b) {
                      if (a.n != b.n) return a.n < b.n;
                      return a.ell < b.ell;
                  });
    }
    return classes;
}

}  // namespace screwspec
