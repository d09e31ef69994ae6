#pragma once

#include <stdexcept>
#include <string>

namespace screwspec {

/// Base class for physics-domain failures. The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The squared Gaussian frequency M^2 lambda^2 + 2 m M lambda omega + 2 m c1
/// came out negative: no normalizable bound-state family exists.
struct NegativeDiscriminant : DomainError {
    double value;
    explicit NegativeDiscriminant(double v)
        : DomainError("NegativeDiscriminant: squared effective frequency = " +
                      std::to_string(v) + " < 0, no real Gaussian width"),
          value(v) {}
};

/// nu = ell - beta k vanishes; the closed-form critical velocity divides by nu^2.
struct DegenerateDenominator : DomainError {
    DegenerateDenominator()
        : DomainError("DegenerateDenominator: ell - beta*k = 0, "
                      "closed-form critical velocity undefined") {}
};

/// A root of the squared threshold equation failed re-substitution into the
/// energy formula (an artifact of squaring, not a physical zero crossing).
struct SpuriousRoot : DomainError {
    double residual;
    explicit SpuriousRoot(double omega_c, double r)
        : DomainError("SpuriousRoot: omega = " + std::to_string(omega_c) +
                      " leaves energy residual " + std::to_string(r)),
          residual(r) {}
};

/// The radicand of the closed-form critical velocity is negative.
struct NegativeInnerRadical : DomainError {
    explicit NegativeInnerRadical(double v)
        : DomainError("NegativeInnerRadical: discriminant = " + std::to_string(v)) {}
};

/// Bisection bracket does not straddle a sign change.
struct NoSignChange : DomainError {
    NoSignChange(double lo, double hi)
        : DomainError("NoSignChange: no root bracketed in [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]") {}
};

/// A bracket endpoint violates the reality condition for the spectrum.
struct RealityViolatedInBracket : DomainError {
    explicit RealityViolatedInBracket(double omega)
        : DomainError("RealityViolatedInBracket: omega = " + std::to_string(omega) +
                      " has no real spectrum") {}
};

/// beta-dependence degenerates when the axial wave number vanishes.
struct ZeroWaveNumber : DomainError {
    ZeroWaveNumber() : DomainError("ZeroWaveNumber: k = 0, E(beta) is constant") {}
};

/// The truncated radial domain clips the eigenfunction.
struct TruncationTooSmall : DomainError {
    explicit TruncationTooSmall(const std::string& what) : DomainError(what) {}
};

/// A numerical integration failed to reach its tolerance.
struct QuadratureNonConvergent : DomainError {
    explicit QuadratureNonConvergent(const std::string& what) : DomainError(what) {}
};

/// Malformed configuration input. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    int line;  // 1-based config file line, 0 when not tied to a line
    explicit ConfigError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0
                                 ? "line " + std::to_string(line_no) + ": " + what
                                 : what),
          line(line_no) {}
};

}  // namespace screwspec
