#pragma once

#include <cstddef>
#include <vector>

namespace exittime::special {

/// Gamma function for x > 0. Throws DomainError otherwise.
double gamma(double x);

/// Gamma(a) Gamma(b) / Gamma(a + b) for a, b > 0. Throws DomainError otherwise;
/// this is also how a divergent Beta integral (e.g. b = 0) is signalled.
double beta(double a, double b);

/// Rising factorial p (p + 1) ... (p + n - 1), with (p)_0 = 1.
double pochhammer(double p, std::size_t n);

/// Gauss summation 2F1(a, b; c; 1). Throws Divergent when c - a - b <= 0
/// (unless the series terminates).
double gauss_2f1_at_1(double a, double b, double c);

struct HyperGeomParams {
    std::vector<double> numerator;
    std::vector<double> denominator;

    /// sum(denominator) - sum(numerator); the series at 1 converges iff > 0.
    double convergence_margin() const;
};

struct SeriesSum {
    double value = 0.0;
    double tail_bound = 0.0;
    std::size_t terms = 0;
};

inline constexpr std::size_t kDefaultPfqBudget = 10'000'000;

/**
 * Generalized hypergeometric series at 1,
 *   sum_n prod_i (num_i)_n / (prod_j (den_j)_n n!),
 * accumulated with the term-ratio recurrence.
 *
 * Once the ratio t_{n+1}/t_n <= 1 - q/n holds with q > 1 (q is the smaller of
 * the current Raabe quantity n (1 - ratio) and its limit 1 + margin), the tail
 * is bounded by t_N N / (q - 1). Summation stops when that bound is below tol.
 * Throws Divergent when the margin is not positive and ToleranceUnreachable
 * past the budget.
 */
SeriesSum pfq_at_1(const HyperGeomParams& params, double tol,
                   std::size_t budget = kDefaultPfqBudget);

/// Exit times from 1 of the two wedge-approximating domains, inner (contained
/// in the wedge |Arg z| < pi p / 2) and outer (containing it).
struct WedgeBounds {
    double inner = 0.0;
    double outer = 0.0;

    double lower() const { return inner < outer ? inner : outer; }
    double upper() const { return inner < outer ? outer : inner; }
};

/// Closed forms for 0 < p < 1/2. Throws Divergent for p >= 1/2 (the Beta
/// integral diverges) and UnsupportedParameter for p <= 0.
WedgeBounds wedge_bounds(double p);

/// Bracket factor beta(p, 1-2p) / (Gamma(1-p) Gamma(p)) - 1 = 2F1(p,p;1;1) - 1.
double wedge_bracket(double p);

/// Expected exit time of the regular m-gon (vertices at the m-th roots of
/// unity) from its centre, via 4F3(1/m,1/m,2/m,2/m; (m+1)/m,(m+1)/m,1; 1).
SeriesSum mgon_exit_time(int m, double tol = 1e-12);

/// Vertex scale W = beta(1/m, (m-2)/m) / m of the unnormalized Schwarz-Christoffel map.
double mgon_vertex_scale(int m);

}  // namespace exittime::special
