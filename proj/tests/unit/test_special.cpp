#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "exittime/error.hpp"
#include "exittime/special.hpp"

using namespace exittime;
namespace sf = exittime::special;
using namespace exittime::special;

namespace {
constexpr double kPi = std::numbers::pi;

bool throws_kind(ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}
}  // namespace

TEST_CASE("gamma") {
    CHECK(sf::gamma(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
    CHECK(sf::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-15));
    // mpmath
    CHECK(sf::gamma(0.25) == doctest::Approx(3.62560990822190831).epsilon(1e-14));
    CHECK(throws_kind(ErrorKind::DomainError, [] { sf::gamma(0.0); }));
    CHECK(throws_kind(ErrorKind::DomainError, [] { sf::gamma(-1.5); }));
}

TEST_CASE("reflection identity") {
    for (double p = 0.05; p < 1.0; p += 0.05) {
        CHECK(sf::gamma(p) * sf::gamma(1.0 - p) == doctest::Approx(kPi / std::sin(kPi * p)).epsilon(1e-13));
    }
}

TEST_CASE("beta") {
    CHECK(sf::beta(1.0 / 3.0, 1.0 / 3.0) == doctest::Approx(5.29991625085634987).epsilon(1e-14));
    CHECK(sf::beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(sf::beta(100.0, 100.0) > 0.0);
    CHECK(sf::beta(100.0, 100.0) == doctest::Approx(std::exp(std::lgamma(100.0) * 2 - std::lgamma(200.0))).epsilon(1e-12));
    CHECK(throws_kind(ErrorKind::DomainError, [] { sf::beta(0.5, 0.0); }));
    CHECK(throws_kind(ErrorKind::DomainError, [] { sf::beta(-0.5, 1.0); }));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(0.5, 0) == 1.0);
    CHECK(pochhammer(1.0, 5) == 120.0);
    CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5));
}

TEST_CASE("Gauss summation") {
    CHECK(gauss_2f1_at_1(0.25, 0.25, 1.0) == doctest::Approx(1.18034059901609623).epsilon(1e-14));
    CHECK(gauss_2f1_at_1(0.0, 3.0, 0.5) == 1.0);
    CHECK(throws_kind(ErrorKind::Divergent, [] { gauss_2f1_at_1(0.5, 0.5, 1.0); }));
}

TEST_CASE("pFq at 1 agrees with Gauss for 2F1") {
    const std::tuple<double, double, double> cases[] = {
        {0.1, 0.2, 2.0}, {1.0, 1.0, 3.5}, {0.5, 0.5, 3.0}, {0.25, 0.25, 2.5}};
    for (auto [a, b, c] : cases) {
        const SeriesSum s = pfq_at_1({{a, b}, {c}}, 1e-6);
        const double exact = gauss_2f1_at_1(a, b, c);
        CAPTURE(a);
        CAPTURE(c);
        CHECK(std::abs(s.value - exact) <= s.tail_bound + 1e-13);
        CHECK(s.tail_bound <= 1e-6);
    }
}

TEST_CASE("pFq rejects non-convergent parameters") {
    CHECK(HyperGeomParams{{0.5, 0.5}, {1.0}}.convergence_margin() == doctest::Approx(0.0));
    CHECK(throws_kind(ErrorKind::Divergent, [] { pfq_at_1({{0.5, 0.5}, {1.0}}, 1e-8); }));
    CHECK(throws_kind(ErrorKind::ToleranceUnreachable,
                      [] { pfq_at_1({{0.5, 0.5}, {1.05}}, 1e-14, 1000); }));
}

TEST_CASE("4F3 identity for the triangle") {
    const double t = 1.0 / 3.0;
    const SeriesSum s = pfq_at_1({{t, t, 2 * t, 2 * t}, {4 * t, 4 * t, 1.0}}, 1e-12);
    const double b = sf::beta(t, t);
    CHECK(std::abs(s.value - b * b / 27.0) <= 1e-10);
    CHECK(s.value == doctest::Approx(1.04033749133671214).epsilon(1e-10));
}

TEST_CASE("m-gon exit times") {
    // mpmath at 30 digits
    const std::pair<int, double> cases[] = {
        {3, 1.0 / 6.0},           {4, 0.294685413126055262}, {5, 0.364484693506543},
        {6, 0.404788131390034},   {8, 0.446172708131095},    {12, 0.476202270761532},
        {24, 0.494141351882506},  {96, 0.499640411834868}};
    for (auto [m, expected] : cases) {
        const SeriesSum s = mgon_exit_time(m);
        CAPTURE(m);
        CHECK(std::abs(s.value - expected) <= s.tail_bound + 1e-13);
        CHECK(s.value < 0.5);
    }
    CHECK(std::abs(mgon_exit_time(3).value - 1.0 / 6.0) <= 1e-6);
    CHECK(std::abs(mgon_exit_time(4).value - 0.294685) <= 1e-5);
}

TEST_CASE("m-gon exit time increases toward the disc") {
    double previous = 0.0;
    for (int m = 3; m <= 12; ++m) {
        const double v = mgon_exit_time(m).value;
        CHECK(v > previous);
        CHECK(v < 0.5);
        previous = v;
    }
    CHECK(throws_kind(ErrorKind::UnsupportedParameter, [] { mgon_exit_time(2); }));
}

TEST_CASE("wedge closed forms") {
    const WedgeBounds w = wedge_bounds(0.25);
    CHECK(w.inner == doctest::Approx(0.0901702995080481130).epsilon(1e-12));
    CHECK(w.outer == doctest::Approx(3.56207929181239542).epsilon(1e-12));
    CHECK(w.lower() == w.inner);
    CHECK(w.upper() == w.outer);
    CHECK(wedge_bracket(0.25) == doctest::Approx(gauss_2f1_at_1(0.25, 0.25, 1.0) - 1.0).epsilon(1e-13));

    for (double p : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
        const WedgeBounds b = wedge_bounds(p);
        CHECK(b.inner > 0.0);
        CHECK(b.inner < b.outer);
    }
    CHECK(throws_kind(ErrorKind::Divergent, [] { wedge_bounds(0.5); }));
    CHECK(throws_kind(ErrorKind::Divergent, [] { wedge_bounds(0.7); }));
    CHECK(throws_kind(ErrorKind::UnsupportedParameter, [] { wedge_bounds(0.0); }));
    CHECK(throws_kind(ErrorKind::DomainError, [] { wedge_bracket(0.5); }));
}
