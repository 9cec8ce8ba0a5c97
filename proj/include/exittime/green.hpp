#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "exittime/coefficients.hpp"

namespace exittime {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss rule for the weight v^alpha e^{-v} on (0, inf), from the eigen-
/// decomposition of the Laguerre Jacobi matrix (Golub-Welsch).
QuadratureRule gauss_laguerre(std::size_t n, double alpha);

struct GreenOptions {
    std::size_t n_radial = 512;
    std::size_t n_angular = 512;
};

/**
 * Expected occupation-time integral over rD,
 *   int_{rD} |f'(z)|^2 (1/pi) log(r/|z|) dA(z),
 * which equals E_{f(0)}[tau(f(rD))]. With |z| = r e^{-v/2} the logarithmic
 * weight becomes v e^{-v} and the radial integral is done by generalized
 * Gauss-Laguerre; the angular integral uses the uniform trapezoid rule.
 * Throws MissingDerivative when deriv is empty.
 */
double green_quadrature(const std::function<Complex(Complex)>& deriv, double r,
                        const GreenOptions& options = {});

}  // namespace exittime
