#include "exittime/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "exittime/error.hpp"

namespace exittime::special {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

}  // namespace

double gamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream msg;
        msg << "gamma(" << x << "): argument must be positive";
        throw Error(ErrorKind::DomainError, msg.str());
    }
    return std::tgamma(x);
}

double beta(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) {
        std::ostringstream msg;
        msg << "beta(" << a << ", " << b << "): arguments must be positive";
        throw Error(ErrorKind::DomainError, msg.str());
    }
    if (a + b < 170.0) return gamma(a) * gamma(b) / gamma(a + b);
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double pochhammer(double p, std::size_t n) {
    double out = 1.0;
    for (std::size_t k = 0; k < n; ++k) out *= p + static_cast<double>(k);
    return out;
}

double gauss_2f1_at_1(double a, double b, double c) {
    if (is_nonpositive_integer(c)) {
        throw Error(ErrorKind::DomainError, "2F1: c must not be a nonpositive integer");
    }
    if (a == 0.0 || b == 0.0) return 1.0;
    const double margin = c - a - b;
    if (!(margin > 0.0)) {
        std::ostringstream msg;
        msg << "2F1(" << a << ", " << b << "; " << c << "; 1) diverges (c - a - b = "
            << margin << ")";
        throw Error(ErrorKind::Divergent, msg.str());
    }
    return gamma(c) * gamma(margin) / (gamma(c - a) * gamma(c - b));
}

double HyperGeomParams::convergence_margin() const {
    return std::accumulate(denominator.begin(), denominator.end(), 0.0) -
           std::accumulate(numerator.begin(), numerator.end(), 0.0);
}

SeriesSum pfq_at_1(const HyperGeomParams& params, double tol, std::size_t budget) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    for (double b : params.denominator) {
        if (is_nonpositive_integer(b)) {
            throw Error(ErrorKind::DomainError,
                        "pFq: denominator parameter is a nonpositive integer");
        }
    }
    const bool terminates = std::any_of(params.numerator.begin(), params.numerator.end(),
                                        is_nonpositive_integer);
    const double margin = params.convergence_margin();
    if (!terminates && !(margin > 0.0)) {
        std::ostringstream msg;
        msg << "pFq at 1 diverges (convergence margin " << margin << ")";
        throw Error(ErrorKind::Divergent, msg.str());
    }

    double largest = 1.0;
    for (double a : params.numerator) largest = std::max(largest, std::abs(a));
    for (double b : params.denominator) largest = std::max(largest, std::abs(b));

    auto ratio_at = [&](double n) {
        double r = 1.0 / (n + 1.0);
        for (double a : params.numerator) r *= n + a;
        for (double b : params.denominator) r /= n + b;
        return r;
    };

    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (std::size_t n = 0; n < budget; ++n) {
        const double dn = static_cast<double>(n);
        const double ratio = ratio_at(dn);
        if (ratio == 0.0) return {sum + comp, 0.0, n + 1};

        if (n >= 1 && dn > largest && ratio > 0.0) {
            const double raabe = dn * (1.0 - ratio);
            const double q = std::min(raabe, 1.0 + margin);
            if (q > 1.0) {
                const double tail = std::abs(term) * dn / (q - 1.0);
                if (tail <= tol) return {sum + comp, tail, n + 1};
            }
        }

        term *= ratio;
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    std::ostringstream msg;
    msg << "pFq at 1 not within " << tol << " after " << budget << " terms";
    throw ToleranceUnreachable(msg.str(), sum + comp, budget);
}

double wedge_bracket(double p) {
    return beta(p, 1.0 - 2.0 * p) / (gamma(1.0 - p) * gamma(p)) - 1.0;
}

WedgeBounds wedge_bounds(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw Error(ErrorKind::UnsupportedParameter, "wedge parameter p must be positive");
    }
    double bracket = 0.0;
    try {
        bracket = wedge_bracket(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainError) throw;
        std::ostringstream msg;
        msg << "wedge exit time is infinite for p = " << p << " (" << e.what() << ")";
        throw Error(ErrorKind::Divergent, msg.str());
    }
    const double two_p = std::pow(2.0, p);
    WedgeBounds out;
    out.inner = 0.5 * bracket;
    out.outer = two_p * two_p / (2.0 * (two_p - 1.0) * (two_p - 1.0)) * bracket;
    return out;
}

double mgon_vertex_scale(int m) {
    if (m < 3) throw Error(ErrorKind::UnsupportedParameter, "m-gon needs m >= 3");
    const double md = static_cast<double>(m);
    return beta(1.0 / md, (md - 2.0) / md) / md;
}

SeriesSum mgon_exit_time(int m, double tol) {
    if (m < 3) throw Error(ErrorKind::UnsupportedParameter, "m-gon needs m >= 3");
    const double md = static_cast<double>(m);
    const double b = beta(1.0 / md, (md - 2.0) / md);
    const double scale = md * md / (2.0 * b * b);
    const double a1 = 1.0 / md, a2 = 2.0 / md, c = (md + 1.0) / md;
    const SeriesSum f = pfq_at_1({{a1, a1, a2, a2}, {c, c, 1.0}}, tol / scale);
    return {f.value * scale, f.tail_bound * scale, f.terms};
}

}  // namespace exittime::special
