#pragma once

#include <functional>
#include <vector>

namespace screwspec::quad {

/// Nodes and weights for the generalized Gauss-Laguerre rule
///   int_0^inf x^alpha e^{-x} f(x) dx ~= sum_i w_i f(x_i),
/// exact for polynomial f up to degree 2q - 1. Requires alpha > -1.
struct GaussLaguerre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLaguerre gauss_laguerre(int q, double alpha);

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
/// Throws QuadratureNonConvergent when the recursion limit is reached.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

}  // namespace screwspec::quad
