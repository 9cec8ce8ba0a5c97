#include "exittime/green.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "exittime/error.hpp"

namespace exittime {

QuadratureRule gauss_laguerre(std::size_t n, double alpha) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
    if (!(alpha > -1.0)) throw Error(ErrorKind::InvalidArgument, "Laguerre alpha must exceed -1");

    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
    for (std::size_t k = 0; k < n; ++k) {
        const double dk = static_cast<double>(k);
        diag(static_cast<Eigen::Index>(k)) = 2.0 * dk + alpha + 1.0;
        if (k + 1 < n) {
            sub(static_cast<Eigen::Index>(k)) = std::sqrt((dk + 1.0) * (dk + 1.0 + alpha));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::InvalidArgument, "Laguerre eigenproblem did not converge");
    }

    const double mu0 = std::tgamma(alpha + 1.0);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        rule.nodes[i] = solver.eigenvalues()(idx);
        const double v0 = solver.eigenvectors()(0, idx);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

double green_quadrature(const std::function<Complex(Complex)>& deriv, double r,
                        const GreenOptions& options) {
    if (!deriv) {
        throw Error(ErrorKind::MissingDerivative, "domain has no derivative evaluator");
    }
    if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 1]");
    if (options.n_angular < 1) throw Error(ErrorKind::InvalidArgument, "need angular nodes");

    const QuadratureRule rule = gauss_laguerre(options.n_radial, 1.0);
    const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(options.n_angular);

    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.weights[i] == 0.0) continue;
        const double rho = r * std::exp(-0.5 * rule.nodes[i]);
        double ring = 0.0;
        for (std::size_t j = 0; j < options.n_angular; ++j) {
            ring += std::norm(deriv(std::polar(rho, dtheta * static_cast<double>(j))));
        }
        total += rule.weights[i] * ring * dtheta;
    }
    return r * r / (4.0 * std::numbers::pi) * total;
}

}  // namespace exittime
