#include "screwspec/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace screwspec::tridiag {

namespace {

// Gerschgorin bounds [lo, hi] containing the whole spectrum.
std::pair<double, double> gerschgorin(std::span<const double> d, std::span<const double> e) {
    const std::size_t n = d.size();
    double lo = std::numeric_limits<double>::max();
    double hi = std::numeric_limits<double>::lowest();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < n) r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    return {lo, hi};
}

// Gaussian elimination with partial pivoting on (T - sigma I) x = b.
// Fill-in is confined to a second superdiagonal.
std::vector<double> solve_shifted(std::span<const double> d, std::span<const double> e,
                                  double sigma, std::vector<double> b) {
    const std::size_t n = d.size();
    std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), low(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) u0[i] = d[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        u1[i] = e[i];
        low[i] = e[i];  // subdiagonal entry coupling row i+1 to column i
    }

    const double tiny = 1e-290;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(low[i]) > std::abs(u0[i])) {
            std::swap(u0[i], low[i]);      // after swap low[i] holds old u0[i]
            std::swap(u1[i], u0[i + 1]);
            std::swap(u2[i], u1[i + 1]);
            std::swap(b[i], b[i + 1]);
        }
        if (std::abs(u0[i]) < tiny) u0[i] = (u0[i] < 0.0 ? -tiny : tiny);
        const double m = low[i] / u0[i];
        u0[i + 1] -= m * u1[i];
        u1[i + 1] -= m * u2[i];
        b[i + 1] -= m * b[i];
    }
    if (std::abs(u0[n - 1]) < tiny) u0[n - 1] = (u0[n - 1] < 0.0 ? -tiny : tiny);

    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
        if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
        x[ii] = s / u0[ii];
    }
    return x;
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    for (double& x : v) x /= norm;
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    for (double x : v) {
        if (std::abs(x) > 0.1 * peak) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            break;
        }
    }
}

}  // namespace

int count_below(std::span<const double> diag, std::span<const double> off, double x) {
    const std::size_t n = diag.size();
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sub = 0.0;
        if (i > 0) {
            const double e = off[i - 1];
            // q = 0 means x hit an eigenvalue of the leading block; the
            // classical substitution |e|/eps keeps the sequence well defined.
            sub = (q != 0.0) ? e * e / q
                             : std::abs(e) / std::numeric_limits<double>::epsilon();
        }
        q = diag[i] - x - sub;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> off, int k) {
    const std::size_t n = diag.size();
    if (n == 0 || off.size() + 1 != n) {
        throw std::invalid_argument("tridiag: inconsistent matrix dimensions");
    }
    k = std::min<int>(k, static_cast<int>(n));
    const auto [glo, ghi] = gerschgorin(diag, off);

    std::vector<double> eigs;
    eigs.reserve(k);
    for (int j = 1; j <= k; ++j) {
        double lo = eigs.empty() ? glo : eigs.back();  // ascending, reuse previous root
        double hi = ghi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double span = hi - lo;
            if (!(span > std::numeric_limits<double>::epsilon() *
                             (std::abs(lo) + std::abs(hi)) +
                         std::numeric_limits<double>::min())) {
                break;
            }
            if (count_below(diag, off, mid) >= j)
                hi = mid;
            else
                lo = mid;
        }
        eigs.push_back(0.5 * (lo + hi));
    }
    return eigs;
}

std::vector<double> eigenvector(std::span<const double> diag, std::span<const double> off,
                                double eigenvalue) {
    const std::size_t n = diag.size();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int sweep = 0; sweep < 3; ++sweep) {
        v = solve_shifted(diag, off, eigenvalue, std::move(v));
        normalize(v);
    }
    return v;
}

}  // namespace screwspec::tridiag
