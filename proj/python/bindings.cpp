#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exittime/catalog.hpp"
#include "exittime/error.hpp"
#include "exittime/green.hpp"
#include "exittime/montecarlo.hpp"
#include "exittime/report.hpp"
#include "exittime/series.hpp"
#include "exittime/special.hpp"

namespace py = pybind11;
namespace et = exittime;
namespace rp = exittime::report;

namespace {

et::DomainSpec domain(const std::string& name, double radius, et::Complex a, double p, int m) {
    et::catalog::DomainParams params;
    params.radius = radius;
    params.a = a;
    params.p = p;
    params.m = m;
    return et::catalog::by_name(name, params);
}

py::dict row_dict(const rp::ReportRow& r) {
    py::dict d;
    d["domain"] = r.domain;
    d["route"] = std::string(rp::to_string(r.route));
    d["value"] = r.value ? py::cast(*r.value) : py::none();
    d["bound"] = r.bound;
    d["meta"] = r.meta;
    return d;
}

et::MCConfig mc_config(std::size_t paths, double dt, double t_max, std::uint64_t seed,
                       unsigned threads, bool two_level) {
    et::MCConfig cfg;
    cfg.n_paths = paths;
    cfg.dt = dt;
    cfg.t_max = t_max;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.bias_mode = two_level ? et::BiasMode::TwoLevel : et::BiasMode::Raw;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_exittime, mod) {
    mod.doc() = "Expected exit times of planar Brownian motion from conformal maps";

    static py::exception<et::Error> error(mod, "Error");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const et::Error& e) {
            const std::string msg = std::string(et::to_string(e.kind())) + ": " + e.what();
            py::set_error(error, msg.c_str());
        }
    });

#define DOMAIN_ARGS                                                                    \
    py::arg("domain"), py::arg("radius") = 1.0, py::arg("a") = et::Complex{},          \
        py::arg("p") = 0.25, py::arg("m") = 4

    mod.def("catalog_names", &et::catalog::names);

    mod.def(
        "describe",
        [](const std::string& name, double radius, et::Complex a, double p, int m) {
            const auto d = domain(name, radius, a, p, m);
            py::dict out;
            out["label"] = d.label();
            out["base_point"] = d.base_point;
            out["series"] = d.has_series;
            out["mc"] = d.mc_eligible;
            out["bproper_only"] = d.bproper_only;
            if (!d.closed_form) {
                out["closed_form"] = py::none();
            } else if (d.closed_form->divergent) {
                out["closed_form"] = py::float_(INFINITY);
            } else {
                out["closed_form"] = d.closed_form->value;
            }
            return out;
        },
        DOMAIN_ARGS);

    mod.def(
        "coefficients",
        [](const std::string& name, std::size_t n, double radius, et::Complex a, double p, int m) {
            return domain(name, radius, a, p, m).coeffs.prefix(n);
        },
        py::arg("domain"), py::arg("n"), py::arg("radius") = 1.0, py::arg("a") = et::Complex{},
        py::arg("p") = 0.25, py::arg("m") = 4);

    mod.def(
        "exit_time",
        [](const std::string& name, double r, std::optional<double> tol, const std::string& route,
           double radius, et::Complex a, double p, int m) {
            const auto d = domain(name, radius, a, p, m);
            const double t = tol.value_or(et::default_tolerance(r));
            switch (rp::parse_route(route)) {
                case rp::Route::Series: return row_dict(rp::series_row(d, r, t));
                case rp::Route::ClosedForm: return row_dict(rp::closed_form_row(d));
                case rp::Route::GreenQuadrature: return row_dict(rp::green_row(d, r, {}));
                case rp::Route::MonteCarlo: return row_dict(rp::mc_row(d, d.base_point, {}));
            }
            return py::dict();
        },
        py::arg("domain"), py::arg("r") = 1.0, py::arg("tol") = py::none(),
        py::arg("route") = "series", py::arg("radius") = 1.0, py::arg("a") = et::Complex{},
        py::arg("p") = 0.25, py::arg("m") = 4);

    mod.def(
        "green",
        [](const std::string& name, double r, std::size_t n_radial, std::size_t n_angular,
           double radius, et::Complex a, double p, int m) {
            return row_dict(rp::green_row(domain(name, radius, a, p, m), r, {n_radial, n_angular}));
        },
        py::arg("domain"), py::arg("r") = 1.0, py::arg("n_radial") = 512,
        py::arg("n_angular") = 512, py::arg("radius") = 1.0, py::arg("a") = et::Complex{},
        py::arg("p") = 0.25, py::arg("m") = 4);

    mod.def(
        "simulate",
        [](const std::string& name, std::optional<et::Complex> start, std::size_t paths,
           double dt, double t_max, std::uint64_t seed, unsigned threads, bool two_level,
           double radius, et::Complex a, double p, int m) {
            const auto d = domain(name, radius, a, p, m);
            const auto cfg = mc_config(paths, dt, t_max, seed, threads, two_level);
            py::gil_scoped_release release;
            return rp::mc_row(d, start.value_or(d.base_point), cfg);
        },
        py::arg("domain"), py::arg("start") = py::none(), py::arg("paths") = 100000,
        py::arg("dt") = 1e-4, py::arg("t_max") = 100.0, py::arg("seed") = 0,
        py::arg("threads") = 0, py::arg("two_level") = false, py::arg("radius") = 1.0,
        py::arg("a") = et::Complex{}, py::arg("p") = 0.25, py::arg("m") = 4);

    py::class_<rp::ReportRow>(mod, "ReportRow")
        .def_readonly("domain", &rp::ReportRow::domain)
        .def_property_readonly("route",
                               [](const rp::ReportRow& r) { return std::string(rp::to_string(r.route)); })
        .def_readonly("value", &rp::ReportRow::value)
        .def_readonly("bound", &rp::ReportRow::bound)
        .def_readonly("meta", &rp::ReportRow::meta)
        .def("to_dict", &row_dict);

    mod.def(
        "reproduce",
        [](std::size_t paths, double dt, std::uint64_t seed, double wedge_t_max) {
            rp::ReproduceOptions opts;
            opts.mc = mc_config(paths, dt, 100.0, seed, 0, false);
            opts.wedge_t_max = wedge_t_max;
            std::vector<rp::CheckRow> rows;
            {
                py::gil_scoped_release release;
                rows = rp::reproduce(opts);
            }
            py::list out;
            for (const auto& c : rows) {
                py::dict d = row_dict(c.row);
                d["criterion"] = c.criterion;
                d["target"] = c.target ? py::cast(*c.target) : py::none();
                d["target_hi"] = c.target_hi ? py::cast(*c.target_hi) : py::none();
                d["tolerance"] = c.tolerance;
                d["pass"] = c.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("paths") = 100000, py::arg("dt") = 1e-4, py::arg("seed") = 0,
        py::arg("wedge_t_max") = 200.0);

    mod.def("default_tolerance", &et::default_tolerance, py::arg("r"));

    auto special = mod.def_submodule("special", "Gamma, Beta and hypergeometric sums");
    special.def("gamma", &et::special::gamma, py::arg("x"));
    special.def("beta", &et::special::beta, py::arg("a"), py::arg("b"));
    special.def("pochhammer", &et::special::pochhammer, py::arg("p"), py::arg("n"));
    special.def("gauss_2f1_at_1", &et::special::gauss_2f1_at_1, py::arg("a"), py::arg("b"),
                py::arg("c"));
    special.def(
        "pfq_at_1",
        [](std::vector<double> num, std::vector<double> den, double tol) {
            const auto s = et::special::pfq_at_1({std::move(num), std::move(den)}, tol);
            return py::make_tuple(s.value, s.tail_bound, s.terms);
        },
        py::arg("num"), py::arg("den"), py::arg("tol") = 1e-12);
    special.def(
        "mgon_exit_time",
        [](int m, double tol) {
            const auto s = et::special::mgon_exit_time(m, tol);
            return py::make_tuple(s.value, s.tail_bound);
        },
        py::arg("m"), py::arg("tol") = 1e-12);
    special.def(
        "wedge_bounds",
        [](double p) {
            const auto w = et::special::wedge_bounds(p);
            return py::make_tuple(w.lower(), w.upper());
        },
        py::arg("p"));
}
