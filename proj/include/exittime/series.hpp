#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "exittime/coefficients.hpp"

namespace exittime {

enum class SeriesStatus { Finite, Divergent };

/// Expected exit time E_{f(0)}[tau(f(rD))] as computed from the coefficient
/// series, with a certified bound on the truncation error.
struct ExitTimeResult {
    SeriesStatus status = SeriesStatus::Finite;
    std::optional<double> value;       ///< present iff Finite
    std::optional<double> tail_bound;  ///< present iff Finite
    std::size_t terms_used = 0;
    double radius = 1.0;
    /// Half the raw partial sum, before any tail correction.
    double raw_partial = 0.0;
    /// Centre of the tail enclosure that was added to raw_partial.
    double tail_correction = 0.0;

    bool finite() const { return status == SeriesStatus::Finite; }
};

struct SeriesOptions {
    std::size_t term_budget = 1'000'000;
    /// Partial sums (of the exit time) above this certify divergence at r = 1.
    double divergence_guard = 1e12;
};

/// 1e-10 for r <= 0.95, 1e-6 closer to the boundary.
double default_tolerance(double r);

/**
 * Evaluates (1/2) sum_{n>=1} |a_n|^2 r^{2n}.
 *
 * The loop stops once the tail enclosure implied by the stream's growth class
 * (or its explicit tail enclosure) is narrower than tol; the reported value is
 * the partial sum plus the centre of that enclosure and tail_bound is its
 * half-width. At r = 1 the result is Divergent when the stream's lower
 * envelope forces divergence or the partial sum passes the guard. Throws
 * ToleranceUnreachable when the budget runs out without a certificate.
 *
 * Interpreting the value as an exit time requires f to be conformal or
 * B-proper; that is the caller's responsibility.
 */
ExitTimeResult exit_time_series(const CoefficientStream& coeffs, double r, double tol,
                                const SeriesOptions& options = {});

/// sum_{n>=0} |a_n|^2, i.e. 2 * E(r = 1) + |a_0|^2.
ExitTimeResult hardy_h2_norm_sq(const CoefficientStream& coeffs, double tol,
                                const SeriesOptions& options = {});

using ComplexMap = std::function<Complex(Complex)>;

/// Relative gap between the trapezoid circle average of |f|^2 on |z| = s and
/// the truncated coefficient sum sum_{n<=n_terms} |a_n|^2 s^{2n}.
double parseval_discrepancy(const CoefficientStream& coeffs, const ComplexMap& evaluator,
                            double s, std::size_t n_samples, std::size_t n_terms);

/// Taylor coefficients of exp(f) through degree n_max.
CoefficientStream exp_compose(const CoefficientStream& coeffs, std::size_t n_max);

/// (b, a_1) with b_0 = 0 and b_n = a_n / a_1. Throws DegenerateMap if a_1 = 0.
std::pair<CoefficientStream, Complex> normalize_schlicht(const CoefficientStream& coeffs);

/// (1/2) sum_{n=1}^{n_terms} |a_n|^2 r^{2n} with no tail handling.
double partial_exit_time(const CoefficientStream& coeffs, double r, std::size_t n_terms);

/// Tail of sum_{n > N} n^2 x^n for 0 <= x < 1, in closed form.
double koebe_tail(std::size_t N, double x);

}  // namespace exittime
