#include "exittime/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "exittime/error.hpp"
#include "exittime/properties.hpp"
#include "exittime/series.hpp"
#include "exittime/special.hpp"

namespace exittime::report {

namespace {

constexpr double kPi = std::numbers::pi;

// Reference values computed independently with mpmath at 30 digits.
constexpr double kWedgeInnerQuarter = 0.0901702995080481130;
constexpr double kWedgeOuterQuarter = 3.56207929181239542;
constexpr double kAnnulus = 0.754589239329028391;
constexpr double kKoebeNineTenths = 106.874179909607815;

std::string target_text(const CheckRow& c) {
    if (!c.target) return "divergent";
    if (c.target_hi) return format_number(*c.target) + ".." + format_number(*c.target_hi);
    return format_number(*c.target);
}

std::string value_text(const ReportRow& r) {
    return r.value ? format_number(*r.value) : "divergent";
}

nlohmann::ordered_json row_json(const ReportRow& r) {
    nlohmann::ordered_json j;
    j["domain"] = r.domain;
    j["route"] = std::string(to_string(r.route));
    if (r.value) {
        j["value"] = *r.value;
    } else {
        j["value"] = "divergent";
    }
    j["bound"] = r.bound;
    j["meta"] = r.meta;
    return j;
}

class Reproduction {
  public:
    explicit Reproduction(const ReproduceOptions& options) : options_(options) {}

    template <class Fn>
    void value(const std::string& criterion, double target, double tol, Fn&& compute) {
        run(criterion, std::forward<Fn>(compute), [&](CheckRow& c) {
            c.target = target;
            c.tolerance = tol;
            c.pass = c.row.value && std::abs(*c.row.value - target) <= tol;
        });
    }

    // Tolerance taken from the computed row itself (e.g. combined tail bounds).
    template <class Fn, class TolFn>
    void value_with(const std::string& criterion, double target, TolFn&& tol, Fn&& compute) {
        run(criterion, std::forward<Fn>(compute), [&](CheckRow& c) {
            c.target = target;
            c.tolerance = tol(c.row);
            c.pass = c.row.value && std::abs(*c.row.value - target) <= c.tolerance;
        });
    }

    template <class Fn>
    void interval(const std::string& criterion, double lo, double hi, double slack,
                  Fn&& compute) {
        interval_with(criterion, lo, hi, [slack](const ReportRow&) { return slack; },
                      std::forward<Fn>(compute));
    }

    template <class Fn, class TolFn>
    void interval_with(const std::string& criterion, double lo, double hi, TolFn&& slack,
                       Fn&& compute) {
        run(criterion, std::forward<Fn>(compute), [&](CheckRow& c) {
            c.target = lo;
            c.target_hi = hi;
            c.tolerance = slack(c.row);
            c.pass = c.row.value && *c.row.value >= lo - c.tolerance &&
                     *c.row.value <= hi + c.tolerance;
        });
    }

    template <class Fn>
    void divergent(const std::string& criterion, Fn&& compute) {
        run(criterion, std::forward<Fn>(compute), [&](CheckRow& c) { c.pass = !c.row.value; });
    }

    std::vector<CheckRow> take() { return std::move(rows_); }

  private:
    template <class Fn, class Judge>
    void run(const std::string& criterion, Fn&& compute, Judge&& judge) {
        const auto start = std::chrono::steady_clock::now();
        CheckRow c;
        c.criterion = criterion;
        c.row = compute();
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        judge(c);
        if (options_.on_row) options_.on_row(c);
        rows_.push_back(std::move(c));
    }

    const ReproduceOptions& options_;
    std::vector<CheckRow> rows_;
};

ReportRow property_row(std::string domain, double value, std::string meta) {
    ReportRow row;
    row.domain = std::move(domain);
    row.route = Route::Series;
    row.value = value;
    row.meta = std::move(meta);
    return row;
}

}  // namespace

std::string_view to_string(Route route) {
    switch (route) {
        case Route::Series: return "series";
        case Route::ClosedForm: return "closed-form";
        case Route::GreenQuadrature: return "green-quadrature";
        case Route::MonteCarlo: return "mc";
    }
    return "?";
}

Route parse_route(std::string_view name) {
    if (name == "series") return Route::Series;
    if (name == "closed-form") return Route::ClosedForm;
    if (name == "green-quadrature" || name == "green") return Route::GreenQuadrature;
    if (name == "mc") return Route::MonteCarlo;
    throw Error(ErrorKind::InvalidArgument, "unknown route '" + std::string(name) + "'");
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string domain_label(const DomainSpec& d, double r) {
    if (r == 1.0) return d.label();
    return d.label() + "@r=" + format_number(r);
}

ReportRow series_row(const DomainSpec& d, double r, double tol) {
    const ExitTimeResult res = exit_time_series(d.coeffs, r, tol);
    ReportRow row;
    row.domain = domain_label(d, r);
    row.route = Route::Series;
    std::ostringstream meta;
    meta << "terms=" << res.terms_used;
    if (res.finite()) {
        row.value = *res.value;
        row.bound = *res.tail_bound;
        meta << ";raw=" << format_number(res.raw_partial)
             << ";tail_correction=" << format_number(res.tail_correction);
    }
    row.meta = meta.str();
    return row;
}

ReportRow closed_form_row(const DomainSpec& d) {
    if (!d.closed_form) {
        throw Error(ErrorKind::InvalidArgument, d.label() + " has no closed form");
    }
    ReportRow row;
    row.domain = d.label();
    row.route = Route::ClosedForm;
    if (!d.closed_form->divergent) row.value = d.closed_form->value;
    return row;
}

ReportRow green_row(const DomainSpec& d, double r, const GreenOptions& options) {
    const double value = green_quadrature(d.deriv, r, options);
    GreenOptions coarse = options;
    coarse.n_radial = std::max<std::size_t>(1, options.n_radial / 2);
    coarse.n_angular = std::max<std::size_t>(1, options.n_angular / 2);
    const double coarse_value = green_quadrature(d.deriv, r, coarse);

    ReportRow row;
    row.domain = domain_label(d, r);
    row.route = Route::GreenQuadrature;
    row.value = value;
    row.bound = std::abs(value - coarse_value);
    row.meta = "n_radial=" + std::to_string(options.n_radial) +
               ";n_angular=" + std::to_string(options.n_angular) +
               ";bound=half-resolution difference";
    return row;
}

ReportRow mc_row(const DomainSpec& d, Complex start, const MCConfig& cfg) {
    const MCEstimate est = estimate_exit_time(d, start, cfg);
    ReportRow row;
    row.domain = d.label();
    row.route = Route::MonteCarlo;
    row.value = est.mean;
    row.bound = est.std_error;
    std::ostringstream meta;
    meta << "paths=" << est.n_paths << ";dt=" << format_number(est.dt)
         << ";t_max=" << format_number(cfg.t_max) << ";censored=" << est.n_censored
         << ";seed=" << cfg.seed;
    if (start != d.base_point) {
        meta << ";start=" << format_number(start.real()) << "+" << format_number(start.imag())
             << "i";
    }
    if (est.mean_fine) {
        meta << ";mean_fine=" << format_number(*est.mean_fine)
             << ";stderr_fine=" << format_number(*est.std_error_fine);
    }
    row.meta = meta.str();
    return row;
}

std::vector<ReportRow> all_routes(const DomainSpec& d, const RouteRequest& request) {
    const double r = request.r;
    const double tol = request.tol.value_or(default_tolerance(r));
    const bool infinite_at_one =
        r == 1.0 && d.closed_form && d.closed_form->divergent;
    std::vector<ReportRow> rows;
    if (d.has_series) rows.push_back(series_row(d, r, tol));
    if (r == 1.0 && d.closed_form) rows.push_back(closed_form_row(d));
    if (d.deriv && !infinite_at_one) rows.push_back(green_row(d, r, request.green));
    if (r == 1.0 && d.mc_eligible && d.contains) {
        rows.push_back(mc_row(d, request.start.value_or(d.base_point), request.mc));
    }
    return rows;
}

std::vector<CheckRow> reproduce(const ReproduceOptions& options) {
    using namespace catalog;
    Reproduction rep(options);
    const MCConfig& mc = options.mc;

    // 1. Strip and Euler's sum.
    const DomainSpec strip_d = strip();
    rep.value("1", kPi * kPi / 16.0, 1e-6, [&] { return series_row(strip_d, 1.0, 1e-7); });
    rep.value("1", kPi * kPi / 16.0, 1e-5, [&] {
        const std::size_t terms = 100'000;
        ReportRow row;
        row.domain = "strip[raw;terms=100000]";
        row.value = partial_exit_time(strip_d.coeffs, 1.0, terms);
        row.bound = 0.5 * strip_d.coeffs.tail_enclosure()(terms).hi;
        row.meta = "terms=100000;no tail correction";
        return row;
    });
    rep.value("1", kPi * kPi / 6.0, 8.0 / 3.0 * 1e-6, [&] {
        const ExitTimeResult res = exit_time_series(strip_d.coeffs, 1.0, 1e-7);
        // sum 1/n^2 = (4/3) sum_odd 1/n^2 = (8/3) E.
        ReportRow row;
        row.domain = "zeta2";
        row.value = 8.0 / 3.0 * *res.value;
        row.bound = 8.0 / 3.0 * *res.tail_bound;
        row.meta = "terms=" + std::to_string(res.terms_used) + ";from strip series";
        return row;
    });
    rep.value("1", kPi * kPi / 16.0, 1e-12, [&] { return closed_form_row(strip_d); });

    // 2. Cardioid by every route.
    const DomainSpec card = cardioid();
    rep.value("2", 2.5, 1e-12, [&] { return series_row(card, 1.0, 1e-12); });
    rep.value("2", 2.5, 0.0, [&] { return closed_form_row(card); });
    rep.value("2", 2.5, 1e-4, [&] { return green_row(card, 1.0, GreenOptions{512, 512}); });
    rep.value_with(
        "2", 2.5, [](const ReportRow& row) { return 3.0 * row.bound + 0.05; },
        [&] { return mc_row(card, card.base_point, mc); });

    // 3. Catenary.
    const DomainSpec cat = catenary();
    rep.value("3", kPi * kPi / 12.0, 1e-6, [&] { return series_row(cat, 1.0, 1e-7); });
    rep.value("3", kPi * kPi / 12.0, 1e-12, [&] { return closed_form_row(cat); });

    // 4. Discs.
    const std::vector<std::pair<double, Complex>> discs = {
        {1.0, 0.0}, {1.0, 0.5}, {2.0, Complex{0.0, 1.0}}};
    for (const auto& [radius, a] : discs) {
        const DomainSpec d = disc(radius, a);
        const double expected = 0.5 * (radius * radius - std::norm(a));
        rep.value("4", expected, 1e-10, [&] { return series_row(d, 1.0, 1e-11); });
        rep.value("4", expected, 1e-12, [&] { return closed_form_row(d); });
    }
    {
        const DomainSpec unit = disc(1.0, 0.0);
        rep.value_with(
            "4", 0.5, [](const ReportRow& row) { return 3.0 * row.bound + 0.01; },
            [&] { return mc_row(unit, unit.base_point, mc); });
    }

    // 5. Infinite expectations.
    for (const DomainSpec& d : {half_plane(), koebe()}) {
        rep.divergent("5", [&] { return series_row(d, 1.0, 1e-6); });
        rep.divergent("5", [&] { return closed_form_row(d); });
    }

    // 6. Regular polygons.
    const DomainSpec tri = mgon(3);
    const DomainSpec square = mgon(4);
    rep.value("6", 1.0 / 6.0, 1e-6, [&] { return closed_form_row(tri); });
    rep.value("6", 0.294685, 1e-5, [&] { return closed_form_row(square); });
    for (int m : {3, 4}) {
        const DomainSpec& d = m == 3 ? tri : square;
        const special::SeriesSum closed = special::mgon_exit_time(m);
        rep.value_with(
            "6", closed.value,
            [&](const ReportRow& row) { return row.bound + closed.tail_bound + 1e-12; },
            [&] { return series_row(d, 1.0, 1e-9); });
    }
    rep.value("6", std::pow(special::beta(1.0 / 3.0, 1.0 / 3.0), 2) / 27.0, 1e-6, [&] {
        const double third = 1.0 / 3.0;
        const special::SeriesSum f = special::pfq_at_1(
            {{third, third, 2 * third, 2 * third}, {4 * third, 4 * third, 1.0}}, 1e-10);
        ReportRow row;
        row.domain = "4F3-identity(m=3)";
        row.route = Route::ClosedForm;
        row.value = f.value;
        row.bound = f.tail_bound;
        row.meta = "terms=" + std::to_string(f.terms) + ";target=beta(1/3,1/3)^2/27";
        return row;
    });

    // 7. Wedge bracket and divergence at p = 1/2.
    for (double p : {0.25}) {
        const DomainSpec inner = wedge_inner(p);
        const DomainSpec outer = wedge_outer(p);
        rep.value("7", kWedgeInnerQuarter, 1e-10, [&] { return closed_form_row(inner); });
        rep.value("7", kWedgeOuterQuarter, 1e-9, [&] { return closed_form_row(outer); });
        rep.value("7", inner.closed_form->value, 1e-6,
                  [&] { return series_row(inner, 1.0, 1e-7); });
        rep.value("7", outer.closed_form->value, 1e-6,
                  [&] { return series_row(outer, 1.0, 1e-7); });

        const special::WedgeBounds bounds = special::wedge_bounds(p);
        MCConfig wedge_cfg = mc;
        wedge_cfg.t_max = options.wedge_t_max;
        const DomainSpec w = wedge(p);
        rep.interval_with(
            "7", bounds.lower(), bounds.upper(),
            [](const ReportRow& row) { return 3.0 * row.bound; }, [&] {
            ReportRow row = mc_row(w, w.base_point, wedge_cfg);
            row.meta += ";bracket=" + format_number(bounds.lower()) + ".." +
                        format_number(bounds.upper());
            return row;
        });
    }
    for (const DomainSpec& d : {wedge_inner(0.5), wedge_outer(0.5)}) {
        rep.divergent("7", [&] {
            ReportRow row = closed_form_row(d);
            try {
                special::wedge_bounds(0.5);
            } catch (const Error& e) {
                row.meta = std::string("signal=") + e.what();
            }
            return row;
        });
    }

    // 8. B-proper annulus.
    const DomainSpec ann = annulus_bproper();
    rep.value("8", kAnnulus, 1e-6, [&] { return series_row(ann, 1.0, 1e-6); });
    rep.value("8", kAnnulus, 1e-12, [&] { return closed_form_row(ann); });

    // 9. Extremal ordering.
    for (double r : {0.3, 0.6, 0.9}) {
        std::ostringstream name;
        name << "extremal(r=" << r << ")";
        rep.value("9", 0.0, 0.0, [&] {
            const auto rpt = properties::check_extremal(r);
            return property_row(name.str(), static_cast<double>(rpt.violations),
                                "entries=" + std::to_string(rpt.checked) +
                                    ";min_gap=" + format_number(rpt.min_gap));
        });
    }
    rep.value("9", 0.0, 0.0, [&] {
        const auto rpt = properties::check_koebe_gap_monotone(
            {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9});
        return property_row("koebe-gap-monotone(r=0.1..0.9)",
                            static_cast<double>(rpt.violations),
                            "entries=" + std::to_string(rpt.checked) +
                                ";min_increment=" + format_number(rpt.min_gap));
    });
    rep.interval("9", 0.0, 1.0, 1e-12, [&] {
        return property_row("de-branges(n<=50)", properties::max_de_branges_ratio(50),
                            "value=max |b_n|/n");
    });

    // 10. Parseval.
    for (double s : {0.3, 0.7}) {
        std::ostringstream name;
        name << "parseval(s=" << s << ")";
        rep.interval("10", 0.0, 1e-6, 0.0, [&] {
            const auto rpt = properties::check_parseval(s);
            return property_row(name.str(), rpt.max_discrepancy,
                                "maps=" + std::to_string(rpt.checked) + ";worst=" + rpt.worst);
        });
    }

    // Occupation-time route on the remaining examples.
    const DomainSpec id = identity_disc();
    const DomainSpec kb = koebe();
    rep.value("green", 0.5, 1e-6, [&] { return green_row(id, 1.0, GreenOptions{}); });
    rep.value("green", kKoebeNineTenths, 1e-3, [&] { return green_row(kb, 0.9, GreenOptions{}); });
    rep.value("green", kKoebeNineTenths, 1e-9, [&] { return series_row(kb, 0.9, 1e-10); });
    rep.value("catalog", 0.5, 1e-12, [&] { return series_row(id, 1.0, 1e-12); });
    rep.value("catalog", 0.5, 0.0, [&] { return closed_form_row(id); });

    return rep.take();
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "domain,route,value,bound,meta\n";
    for (const auto& r : rows) {
        out << r.domain << "," << to_string(r.route) << "," << value_text(r) << ","
            << format_number(r.bound) << "," << r.meta << "\n";
    }
    return out.str();
}

std::string to_csv(const std::vector<CheckRow>& rows) {
    std::ostringstream out;
    out << "domain,route,value,bound,meta,criterion,target,tolerance,pass\n";
    for (const auto& c : rows) {
        const ReportRow& r = c.row;
        out << r.domain << "," << to_string(r.route) << "," << value_text(r) << ","
            << format_number(r.bound) << "," << r.meta << "," << c.criterion << ","
            << target_text(c) << "," << format_number(c.tolerance) << ","
            << (c.pass ? "pass" : "FAIL") << "\n";
    }
    return out.str();
}

std::string to_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    return arr.dump(2) + "\n";
}

std::string to_json(const std::vector<CheckRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : rows) {
        auto j = row_json(c.row);
        j["criterion"] = c.criterion;
        j["target"] = target_text(c);
        j["tolerance"] = c.tolerance;
        j["pass"] = c.pass;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace exittime::report
