#include "exittime/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "exittime/error.hpp"

namespace exittime {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Neumaier-compensated running sum.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Upper bound on sum_{n > N} |a_n|^2 x^n implied by the growth class alone.
std::optional<double> class_tail_bound(const GrowthClass& g, std::size_t N, double x) {
    const bool at_boundary = x >= 1.0;
    return std::visit(
        overloaded{
            [&](const growth::FiniteSupport& f) -> std::optional<double> {
                if (N >= f.last) return 0.0;
                return std::nullopt;
            },
            [&](const growth::BoundedByLinear&) -> std::optional<double> {
                if (at_boundary) return std::nullopt;
                return koebe_tail(N, x);
            },
            [&](const growth::Geometric& geo) -> std::optional<double> {
                const double q = geo.ratio * geo.ratio * x;
                if (!(q < 1.0)) return std::nullopt;
                return geo.constant * geo.constant *
                       std::pow(q, static_cast<double>(N + 1)) / (1.0 - q);
            },
            [&](const growth::PowerLaw& pl) -> std::optional<double> {
                const double c2 = pl.constant * pl.constant;
                const double two_sigma = 2.0 * pl.exponent;
                if (at_boundary) {
                    if (two_sigma <= 1.0 || N == 0) return std::nullopt;
                    // Integral comparison: sum_{n>N} n^-2s <= int_N^inf y^-2s dy.
                    return c2 * std::pow(static_cast<double>(N), 1.0 - two_sigma) /
                           (two_sigma - 1.0);
                }
                // Ratio test on t_n = n^-2s x^n for n > N.
                const double m = static_cast<double>(N + 1);
                const double q = x * std::pow(1.0 + 1.0 / m, -two_sigma);
                if (!(q < 1.0)) return std::nullopt;
                return c2 * std::pow(m, -two_sigma) * std::pow(x, m) / (1.0 - q);
            },
            [](const growth::Unknown&) -> std::optional<double> { return std::nullopt; },
        },
        g);
}

std::optional<Interval> tail_enclosure(const CoefficientStream& coeffs, std::size_t N,
                                       double x) {
    std::optional<Interval> best;
    if (auto hi = class_tail_bound(coeffs.growth(), N, x)) best = Interval{0.0, *hi};
    if (const auto& explicit_tail = coeffs.tail_enclosure()) {
        Interval t = explicit_tail(N);
        if (x < 1.0) t = Interval{0.0, std::pow(x, static_cast<double>(N + 1)) * t.hi};
        if (!best) {
            best = t;
        } else {
            best = Interval{std::max(best->lo, t.lo), std::min(best->hi, t.hi)};
        }
    }
    return best;
}

ExitTimeResult divergent(double r, std::size_t terms, double raw) {
    ExitTimeResult res;
    res.status = SeriesStatus::Divergent;
    res.radius = r;
    res.terms_used = terms;
    res.raw_partial = raw;
    return res;
}

}  // namespace

double default_tolerance(double r) { return r <= 0.95 ? 1e-10 : 1e-6; }

double koebe_tail(std::size_t N, double x) {
    const double m = static_cast<double>(N + 1);
    const double lead = m - (m - 1.0) * x;
    return std::pow(x, m) * (lead * lead + x) / std::pow(1.0 - x, 3);
}

ExitTimeResult exit_time_series(const CoefficientStream& coeffs, double r, double tol,
                                const SeriesOptions& options) {
    if (!(r > 0.0 && r <= 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "radius must lie in (0, 1]");
    }
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");

    const double x = r * r;
    const bool at_boundary = r == 1.0;
    if (at_boundary && coeffs.lower_envelope() &&
        coeffs.lower_envelope()->forces_divergence()) {
        return divergent(r, 0, 0.0);
    }

    auto next = coeffs.cursor();
    next();  // a_0 does not contribute
    CompensatedSum partial;
    double weight = 1.0;
    for (std::size_t n = 1; n <= options.term_budget; ++n) {
        weight *= x;
        partial.add(std::norm(next()) * weight);

        if (at_boundary && 0.5 * partial.value() > options.divergence_guard) {
            return divergent(r, n, 0.5 * partial.value());
        }
        const auto tail = tail_enclosure(coeffs, n, x);
        if (tail && 0.5 * tail->half_width() <= tol) {
            ExitTimeResult res;
            res.radius = r;
            res.terms_used = n;
            res.raw_partial = 0.5 * partial.value();
            res.tail_correction = 0.5 * tail->mid();
            res.value = res.raw_partial + res.tail_correction;
            res.tail_bound = 0.5 * tail->half_width();
            return res;
        }
    }

    const double half_sum = 0.5 * partial.value();
    std::ostringstream msg;
    msg << "series not certified within " << options.term_budget
        << " terms (growth " << describe(coeffs.growth()) << ", r = " << r
        << "); partial exit time " << half_sum;
    throw ToleranceUnreachable(msg.str(), half_sum, options.term_budget);
}

double partial_exit_time(const CoefficientStream& coeffs, double r, std::size_t n_terms) {
    const double x = r * r;
    auto next = coeffs.cursor();
    next();
    CompensatedSum partial;
    double weight = 1.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        weight *= x;
        partial.add(std::norm(next()) * weight);
    }
    return 0.5 * partial.value();
}

ExitTimeResult hardy_h2_norm_sq(const CoefficientStream& coeffs, double tol,
                                const SeriesOptions& options) {
    ExitTimeResult res = exit_time_series(coeffs, 1.0, 0.5 * tol, options);
    if (!res.finite()) return res;
    const double a0 = std::norm(coeffs.coeff(0));
    res.value = 2.0 * *res.value + a0;
    res.tail_bound = 2.0 * *res.tail_bound;
    res.raw_partial = 2.0 * res.raw_partial + a0;
    res.tail_correction *= 2.0;
    return res;
}

double parseval_discrepancy(const CoefficientStream& coeffs, const ComplexMap& evaluator,
                            double s, std::size_t n_samples, std::size_t n_terms) {
    if (!(s > 0.0 && s < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "sampling radius must lie in (0, 1)");
    }
    if (n_samples < 8) throw Error(ErrorKind::InvalidArgument, "need at least 8 samples");

    CompensatedSum circle;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_samples);
    for (std::size_t j = 0; j < n_samples; ++j) {
        circle.add(std::norm(evaluator(std::polar(s, step * static_cast<double>(j)))));
    }
    const double circle_average = circle.value() / static_cast<double>(n_samples);

    CompensatedSum series;
    auto next = coeffs.cursor();
    double weight = 1.0;
    for (std::size_t n = 0; n <= n_terms; ++n) {
        series.add(std::norm(next()) * weight);
        weight *= s * s;
    }
    const double series_partial = series.value();
    return std::abs(circle_average - series_partial) / std::max(1.0, series_partial);
}

CoefficientStream exp_compose(const CoefficientStream& coeffs, std::size_t n_max) {
    const std::vector<Complex> a = coeffs.prefix(n_max + 1);
    std::vector<Complex> c(n_max + 1);
    c[0] = std::exp(a[0]);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Complex acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k] != Complex{}) acc += static_cast<double>(k) * a[k] * c[n - k];
        }
        c[n] = acc / static_cast<double>(n);
    }
    return CoefficientStream::polynomial(std::move(c))
        .with_note("exp truncated at degree " + std::to_string(n_max));
}

std::pair<CoefficientStream, Complex> normalize_schlicht(const CoefficientStream& coeffs) {
    const Complex a1 = coeffs.coeff(1);
    if (a1 == Complex{}) {
        throw Error(ErrorKind::DegenerateMap, "a_1 = 0: map is not locally injective at 0");
    }
    const Complex a0 = coeffs.coeff(0);
    return {coeffs.affine(1.0 / a1, -a0 / a1), a1};
}

}  // namespace exittime
