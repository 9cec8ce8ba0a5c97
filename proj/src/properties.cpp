#include "exittime/properties.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "exittime/series.hpp"

namespace exittime::properties {

namespace {

SchlichtEntry normalized(const DomainSpec& d, bool is_identity = false,
                         bool is_koebe = false) {
    return {d.label(), normalize_schlicht(d.coeffs).first, is_identity, is_koebe};
}

// Polygon maps sit within ~1e-10 of the identity bound at small r, below the
// default series tolerance, so the ordering checks sum further.
constexpr double kCheckTolerance = 1e-14;

}  // namespace

double identity_exit_time(double r) { return 0.5 * r * r; }

double koebe_exit_time(double r) {
    const double x = r * r;
    return x * (1.0 + x) / (2.0 * std::pow(1.0 - x, 3));
}

std::vector<SchlichtEntry> schlicht_catalog() {
    using namespace catalog;
    return {
        normalized(identity_disc(), true),
        normalized(disc(1.0, 0.0), true),
        normalized(disc(1.0, 0.5)),
        normalized(disc(2.0, Complex{0.0, 1.0})),
        normalized(half_plane()),
        normalized(cardioid()),
        normalized(catenary()),
        normalized(strip()),
        normalized(wedge_inner(0.25)),
        normalized(wedge_outer(0.25)),
        normalized(wedge_inner(0.75)),
        normalized(mgon(3)),
        normalized(mgon(4)),
        normalized(mgon(6)),
        normalized(koebe(), false, true),
    };
}

ExtremalReport check_extremal(double r) {
    ExtremalReport report;
    report.r = r;
    report.min_gap = HUGE_VAL;
    const double lower = identity_exit_time(r);
    const double upper = koebe_exit_time(r);
    const double tol = kCheckTolerance;
    for (const auto& entry : schlicht_catalog()) {
        const ExitTimeResult res = exit_time_series(entry.coeffs, r, tol);
        ++report.checked;
        const double value = *res.value;
        const double combined = *res.tail_bound + 1e-12 * std::max(1.0, upper);
        std::ostringstream why;
        if (value < lower - combined || value > upper + combined) {
            why << entry.label << ": E = " << value << " outside [" << lower << ", " << upper
                << "]";
        } else if (!entry.is_identity && value - lower < 10.0 * combined) {
            why << entry.label << ": not strictly above the identity bound";
        } else if (entry.is_identity && std::abs(value - lower) > combined) {
            why << entry.label << ": identity-equivalent but E != r^2/2";
        } else if (!entry.is_koebe && upper - value < 10.0 * combined) {
            why << entry.label << ": not strictly below the Koebe bound";
        } else if (entry.is_koebe && std::abs(value - upper) > combined) {
            why << entry.label << ": Koebe stream does not attain the Koebe bound";
        }
        if (!why.str().empty()) {
            ++report.violations;
            report.failures.push_back(why.str());
        }
        if (!entry.is_identity) report.min_gap = std::min(report.min_gap, value - lower);
        if (!entry.is_koebe) report.min_gap = std::min(report.min_gap, upper - value);
    }
    return report;
}

ExtremalReport check_koebe_gap_monotone(const std::vector<double>& radii) {
    ExtremalReport report;
    report.min_gap = HUGE_VAL;
    for (const auto& entry : schlicht_catalog()) {
        if (entry.is_koebe) continue;
        ++report.checked;
        double previous = -HUGE_VAL;
        double previous_bound = 0.0;
        for (double r : radii) {
            const ExitTimeResult res = exit_time_series(entry.coeffs, r, kCheckTolerance);
            const double gap = koebe_exit_time(r) - *res.value;
            const double slack = *res.tail_bound + previous_bound;
            if (gap < previous - slack) {
                ++report.violations;
                std::ostringstream why;
                why << entry.label << ": Koebe gap decreases at r = " << r;
                report.failures.push_back(why.str());
            }
            if (previous > -HUGE_VAL) report.min_gap = std::min(report.min_gap, gap - previous);
            previous = gap;
            previous_bound = *res.tail_bound;
        }
    }
    return report;
}

double max_de_branges_ratio(std::size_t n_max) {
    double worst = 0.0;
    for (const auto& entry : schlicht_catalog()) {
        const auto b = entry.coeffs.prefix(n_max + 1);
        for (std::size_t n = 2; n <= n_max; ++n) {
            worst = std::max(worst, std::abs(b[n]) / static_cast<double>(n));
        }
    }
    return worst;
}

std::vector<DomainSpec> catalog_with_maps() {
    using namespace catalog;
    return {identity_disc(),   disc(1.0, 0.0),   disc(1.0, 0.5),
            disc(2.0, Complex{0.0, 1.0}),        half_plane(),
            cardioid(),        catenary(),       strip(),
            wedge_inner(0.25), wedge_outer(0.25), wedge_inner(0.75),
            mgon(3),           mgon(4),          mgon(6),
            koebe(),           annulus_bproper()};
}

ParsevalReport check_parseval(double s, std::size_t n_samples) {
    ParsevalReport report;
    report.s = s;
    for (const auto& d : catalog_with_maps()) {
        // Enough terms that the neglected tail is far below the check level.
        const std::size_t n_terms = exit_time_series(d.coeffs, s, 1e-14).terms_used;
        const double gap = parseval_discrepancy(d.coeffs, d.map, s, n_samples, n_terms);
        ++report.checked;
        if (gap >= report.max_discrepancy) {
            report.max_discrepancy = gap;
            report.worst = d.label();
        }
    }
    return report;
}

}  // namespace exittime::properties
