#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "exittime/catalog.hpp"
#include "exittime/error.hpp"
#include "exittime/montecarlo.hpp"
#include "exittime/philox.hpp"
#include "exittime/special.hpp"

using namespace exittime;

namespace {

MCConfig config(std::size_t paths, double dt, double t_max = 100.0) {
    MCConfig cfg;
    cfg.n_paths = paths;
    cfg.dt = dt;
    cfg.t_max = t_max;
    return cfg;
}

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

}  // namespace

TEST_CASE("Philox4x32-10 known answers") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) ==
          C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate({~0u, ~0u, ~0u, ~0u}, {~0u, ~0u}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                               {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("results are bit-identical across runs and thread counts") {
    const auto d = catalog::cardioid();
    MCConfig cfg = config(1000, 1e-3);
    cfg.threads = 1;
    const MCEstimate a = estimate_exit_time(d, d.base_point, cfg);
    const MCEstimate b = estimate_exit_time(d, d.base_point, cfg);
    cfg.threads = 5;
    const MCEstimate c = estimate_exit_time(d, d.base_point, cfg);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean == c.mean);
    CHECK(a.std_error == c.std_error);

    cfg.seed = 1;
    const MCEstimate other = estimate_exit_time(d, d.base_point, cfg);
    CHECK(other.mean != a.mean);
}

TEST_CASE("unit disc from the centre") {
    const auto d = catalog::disc(1.0, 0.0);
    const MCEstimate e = estimate_exit_time(d, 0.0, config(20000, 1e-4));
    CHECK(std::abs(e.mean - 0.5) <= 3.0 * e.std_error + 0.01);
    CHECK(e.n_censored == 0);
    CHECK(e.n_paths == 20000);
    CHECK(e.dt == 1e-4);
    CHECK_FALSE(e.mean_fine.has_value());
}

TEST_CASE("strip from the origin") {
    const auto d = catalog::strip();
    const MCEstimate e = estimate_exit_time(d, 0.0, config(20000, 1e-4));
    CHECK(std::abs(e.mean - std::numbers::pi * std::numbers::pi / 16.0) <=
          3.0 * e.std_error + 0.01);
}

TEST_CASE("off-centre start in a disc") {
    // (1/2)(1 - |z|^2) from z = 0.5
    const auto d = catalog::disc(1.0, 0.0);
    const MCEstimate e = estimate_exit_time(d, 0.5, config(10000, 1e-4));
    CHECK(std::abs(e.mean - 0.375) <= 3.0 * e.std_error + 0.01);
}

TEST_CASE("domain monotonicity") {
    const MCConfig cfg = config(5000, 1e-3);
    const auto small = estimate_exit_time(catalog::disc(0.5, 0.0), 0.0, cfg);
    const auto unit = estimate_exit_time(catalog::disc(1.0, 0.0), 0.0, cfg);
    const auto square = estimate_exit_time(catalog::mgon(4), 0.0, cfg);
    const auto gap = [](const MCEstimate& a, const MCEstimate& b) {
        return 3.0 * std::hypot(a.std_error, b.std_error);
    };
    CHECK(unit.mean - small.mean > gap(unit, small));
    CHECK(unit.mean - square.mean > gap(unit, square));

    MCConfig wcfg = config(5000, 1e-3, 200.0);
    const auto narrow = estimate_wedge(0.1, wcfg);
    const auto wide = estimate_wedge(0.25, wcfg);
    CHECK(wide.mean - narrow.mean > gap(wide, narrow));
}

TEST_CASE("two-level discrepancy shrinks with dt") {
    const auto d = catalog::disc(1.0, 0.0);
    MCConfig coarse = config(4000, 1e-3);
    coarse.bias_mode = BiasMode::TwoLevel;
    MCConfig fine = config(4000, 1e-4);
    fine.bias_mode = BiasMode::TwoLevel;
    const auto a = estimate_exit_time(d, 0.0, coarse);
    const auto b = estimate_exit_time(d, 0.0, fine);
    REQUIRE(a.mean_fine.has_value());
    REQUIRE(b.mean_fine.has_value());
    // Discrete monitoring misses excursions, so the coarse mean sits above the fine one.
    CHECK(a.mean > *a.mean_fine);
    CHECK(std::abs(b.mean - *b.mean_fine) < std::abs(a.mean - *a.mean_fine));
}

TEST_CASE("censoring") {
    const auto d = catalog::disc(1.0, 0.0);
    const auto e = estimate_exit_time(d, 0.0, config(100000, 1e-3, 50.0));
    CHECK(e.n_censored == 0);

    const auto all = estimate_exit_time(d, 0.0, config(200, 1e-3, 0.01));
    CHECK(all.n_censored == 200);
    CHECK(all.mean == doctest::Approx(0.01));
}

TEST_CASE("heavy-tailed wedge reports censoring") {
    const auto e = estimate_wedge(0.45, config(500, 1e-2, 20.0));
    CHECK(std::isfinite(e.mean));
    CHECK(e.mean <= 20.0);
    CHECK(e.n_censored <= e.n_paths);
}

TEST_CASE("argument checking") {
    const auto d = catalog::disc(1.0, 0.0);
    CHECK(throws_kind(ErrorKind::StartOutsideDomain,
                      [&] { estimate_exit_time(d, 2.0, config(100, 1e-3)); }));
    CHECK(throws_kind(ErrorKind::IneligibleDomain, [] {
        const auto k = catalog::koebe();
        estimate_exit_time(k, 0.0, config(100, 1e-3));
    }));
    CHECK(throws_kind(ErrorKind::IneligibleDomain, [] { estimate_wedge(0.5, config(100, 1e-3)); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument,
                      [&] { estimate_exit_time(d, 0.0, config(99, 1e-3)); }));
    CHECK(throws_kind(ErrorKind::InvalidArgument,
                      [&] { estimate_exit_time(d, 0.0, config(100, 1.0, 0.5)); }));
}
