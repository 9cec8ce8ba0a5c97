// Command-line front end: exit times by route, simulation, and the reproduction table.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "exittime/catalog.hpp"
#include "exittime/error.hpp"
#include "exittime/report.hpp"
#include "exittime/series.hpp"

namespace et = exittime;
namespace rp = exittime::report;

namespace {

constexpr int kValidationError = 1;
constexpr int kReproductionFailed = 2;

// Accepts "x", "x,y", "yi", "x+yi" and "x-yi".
et::Complex parse_complex(const std::string& text) {
    static const std::regex pair(R"(^\s*([^,]+)\s*,\s*([^,]+)\s*$)");
    static const std::regex imag_only(R"(^\s*([+-]?(?:\d+\.?\d*(?:[eE][+-]?\d+)?)?)\s*i\s*$)");
    static const std::regex full(
        R"(^\s*([+-]?\d+\.?\d*(?:[eE][+-]?\d+)?)\s*([+-])\s*(\d+\.?\d*(?:[eE][+-]?\d+)?)?\s*i\s*$)");
    auto coef = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return std::stod(s);
    };
    std::smatch m;
    try {
        if (std::regex_match(text, m, pair)) return {std::stod(m[1]), std::stod(m[2])};
        if (std::regex_match(text, m, imag_only)) return {0.0, coef(m[1])};
        if (std::regex_match(text, m, full)) {
            const double im = coef(m[3]);
            return {std::stod(m[1]), m[2] == "-" ? -im : im};
        }
        std::size_t used = 0;
        const double re = std::stod(text, &used);
        if (used == text.size()) return {re, 0.0};
    } catch (const std::exception&) {
    }
    throw et::Error(et::ErrorKind::InvalidArgument, "cannot parse complex number '" + text + "'");
}

struct DomainArgs {
    std::string name;
    double radius = 1.0;
    std::string a = "0";
    double p = 0.25;
    int m = 4;

    void attach(CLI::App* cmd) {
        cmd->add_option("domain", name, "Catalog domain name (see `catalog`)")->required();
        cmd->add_option("--radius", radius, "Disc radius");
        cmd->add_option("--a", a, "Disc centre: x, x,y or x+yi");
        cmd->add_option("--p", p, "Wedge parameter");
        cmd->add_option("--m", m, "Polygon side count");
    }

    et::DomainSpec build() const {
        et::catalog::DomainParams params;
        params.radius = radius;
        params.a = parse_complex(a);
        params.p = p;
        params.m = m;
        return et::catalog::by_name(name, params);
    }
};

struct MCArgs {
    et::MCConfig cfg;
    bool two_level = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", cfg.seed, "Generator seed");
        cmd->add_option("--paths", cfg.n_paths, "Number of paths");
        cmd->add_option("--dt", cfg.dt, "Time step");
        cmd->add_option("--t-max", cfg.t_max, "Censoring horizon");
        cmd->add_option("--threads", cfg.threads, "Worker threads (0: EXITTIME_THREADS or all)");
        cmd->add_flag("--two-level", two_level, "Also run each path at dt/4 and report both means");
    }

    et::MCConfig config() const {
        et::MCConfig c = cfg;
        c.bias_mode = two_level ? et::BiasMode::TwoLevel : et::BiasMode::Raw;
        c.validate();
        return c;
    }
};

void emit(const std::vector<rp::ReportRow>& rows, const std::string& format) {
    std::cout << (format == "json" ? rp::to_json(rows) : rp::to_csv(rows));
}

int require_finite(const std::vector<rp::ReportRow>& rows, bool demanded) {
    if (!demanded) return 0;
    for (const auto& row : rows) {
        if (!row.value) {
            std::cerr << "error: " << row.domain << " (" << rp::to_string(row.route)
                      << ") is divergent but a finite value was required\n";
            return kValidationError;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected exit times of planar Brownian motion from conformal maps"};
    app.require_subcommand(1);
    std::string format = "csv";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    // exit-time
    auto* exit_cmd = app.add_subcommand("exit-time", "Expected exit time by one or all routes");
    DomainArgs exit_domain;
    exit_domain.attach(exit_cmd);
    double exit_r = 1.0;
    std::optional<double> exit_tol;
    std::string route = "series";
    bool finite_only = false;
    et::GreenOptions exit_green;
    MCArgs exit_mc;
    exit_cmd->add_option("--r", exit_r, "Sub-disc radius in (0, 1]");
    exit_cmd->add_option("--tol", exit_tol, "Series tolerance (default 1e-10 for r <= 0.95, else 1e-6)");
    exit_cmd->add_option("--route", route, "series, closed-form, green, mc or all")
        ->check(CLI::IsMember({"series", "closed-form", "green", "green-quadrature", "mc", "all"}));
    exit_cmd->add_flag("--require-finite", finite_only, "Fail when the answer is divergent");
    exit_cmd->add_option("--n-radial", exit_green.n_radial, "Green route radial nodes");
    exit_cmd->add_option("--n-angular", exit_green.n_angular, "Green route angular nodes");
    exit_mc.attach(exit_cmd);
    add_format(exit_cmd);

    // green
    auto* green_cmd = app.add_subcommand("green", "Occupation-time quadrature route");
    DomainArgs green_domain;
    green_domain.attach(green_cmd);
    double green_r = 1.0;
    et::GreenOptions green_opts;
    green_cmd->add_option("--r", green_r, "Sub-disc radius in (0, 1]");
    green_cmd->add_option("--n-radial", green_opts.n_radial, "Radial nodes");
    green_cmd->add_option("--n-angular", green_opts.n_angular, "Angular nodes");
    add_format(green_cmd);

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the exit time");
    DomainArgs sim_domain;
    sim_domain.attach(sim_cmd);
    MCArgs sim_mc;
    sim_mc.attach(sim_cmd);
    std::optional<std::string> sim_start;
    sim_cmd->add_option("--start", sim_start, "Start point (default: the base point)");
    add_format(sim_cmd);

    // reproduce
    auto* repro_cmd = app.add_subcommand("reproduce", "Recompute every reference number");
    MCArgs repro_mc;
    repro_mc.attach(repro_cmd);
    double wedge_t_max = 200.0;
    bool timings = false;
    repro_cmd->add_option("--wedge-t-max", wedge_t_max, "Censoring horizon for the wedge run");
    repro_cmd->add_flag("--timings", timings, "Print per-row wall time to stderr");
    add_format(repro_cmd);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "List domains and their parameters");
    add_format(catalog_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (exit_cmd->parsed()) {
            const et::DomainSpec d = exit_domain.build();
            const double tol = exit_tol.value_or(et::default_tolerance(exit_r));
            std::vector<rp::ReportRow> rows;
            if (route == "all") {
                rp::RouteRequest req;
                req.r = exit_r;
                req.tol = tol;
                req.green = exit_green;
                req.mc = exit_mc.config();
                rows = rp::all_routes(d, req);
            } else {
                switch (rp::parse_route(route)) {
                    case rp::Route::Series:
                        if (!d.has_series) {
                            throw et::Error(et::ErrorKind::InvalidArgument,
                                            d.label() + " has no coefficient series");
                        }
                        rows.push_back(rp::series_row(d, exit_r, tol));
                        break;
                    case rp::Route::ClosedForm:
                        if (exit_r != 1.0) {
                            throw et::Error(et::ErrorKind::InvalidArgument,
                                            "closed forms are given at r = 1 only");
                        }
                        rows.push_back(rp::closed_form_row(d));
                        break;
                    case rp::Route::GreenQuadrature:
                        rows.push_back(rp::green_row(d, exit_r, exit_green));
                        break;
                    case rp::Route::MonteCarlo:
                        if (exit_r != 1.0) {
                            throw et::Error(et::ErrorKind::InvalidArgument,
                                            "simulation runs on the full domain (r = 1)");
                        }
                        rows.push_back(rp::mc_row(d, d.base_point, exit_mc.config()));
                        break;
                }
            }
            emit(rows, format);
            return require_finite(rows, finite_only);
        }

        if (green_cmd->parsed()) {
            const et::DomainSpec d = green_domain.build();
            const std::vector<rp::ReportRow> rows = {rp::green_row(d, green_r, green_opts)};
            emit(rows, format);
            return 0;
        }

        if (sim_cmd->parsed()) {
            const et::DomainSpec d = sim_domain.build();
            const et::Complex start = sim_start ? parse_complex(*sim_start) : d.base_point;
            const std::vector<rp::ReportRow> rows = {rp::mc_row(d, start, sim_mc.config())};
            emit(rows, format);
            return 0;
        }

        if (repro_cmd->parsed()) {
            rp::ReproduceOptions opts;
            opts.mc = repro_mc.config();
            opts.wedge_t_max = wedge_t_max;
            double total = 0.0;
            if (timings) {
                opts.on_row = [&total](const rp::CheckRow& c) {
                    total += c.seconds;
                    std::fprintf(stderr, "[%6.2fs] %-40s %-16s %s\n", c.seconds,
                                 c.row.domain.c_str(), std::string(rp::to_string(c.row.route)).c_str(),
                                 c.pass ? "pass" : "FAIL");
                };
            }
            const auto rows = rp::reproduce(opts);
            std::cout << (format == "json" ? rp::to_json(rows) : rp::to_csv(rows));
            if (timings) std::fprintf(stderr, "total %.2fs\n", total);
            for (const auto& c : rows) {
                if (!c.pass) return kReproductionFailed;
            }
            return 0;
        }

        if (catalog_cmd->parsed()) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            if (format == "csv") std::cout << "name,label,base_point,series,closed_form,mc,bproper_only\n";
            for (const auto& name : et::catalog::names()) {
                const et::DomainSpec d = et::catalog::by_name(name);
                const std::string closed =
                    !d.closed_form ? "none"
                    : d.closed_form->divergent ? "divergent"
                                               : rp::format_number(d.closed_form->value);
                const std::string base = rp::format_number(d.base_point.real()) + "+" +
                                         rp::format_number(d.base_point.imag()) + "i";
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["name"] = name;
                    j["label"] = d.label();
                    j["base_point"] = base;
                    j["series"] = d.has_series;
                    j["closed_form"] = closed;
                    j["mc"] = d.mc_eligible;
                    j["bproper_only"] = d.bproper_only;
                    arr.push_back(std::move(j));
                } else {
                    std::cout << name << "," << d.label() << "," << base << ","
                              << (d.has_series ? "yes" : "no") << "," << closed << ","
                              << (d.mc_eligible ? "yes" : "no") << ","
                              << (d.bproper_only ? "yes" : "no") << "\n";
                }
            }
            if (format == "json") std::cout << arr.dump(2) << "\n";
            return 0;
        }
    } catch (const et::Error& e) {
        std::cerr << "error: " << et::to_string(e.kind()) << ": " << e.what() << "\n";
        return kValidationError;
    }
    return 0;
}
