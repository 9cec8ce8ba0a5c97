#include <doctest.h>

#include <cmath>

#include "exittime/catalog.hpp"
#include "exittime/error.hpp"
#include "exittime/green.hpp"
#include "exittime/series.hpp"

using namespace exittime;

TEST_CASE("generalized Gauss-Laguerre moments") {
    const QuadratureRule rule = gauss_laguerre(40, 1.0);
    REQUIRE(rule.nodes.size() == 40);
    // int v^k v e^{-v} dv = (k + 1)!
    double factorial = 1.0;
    for (int k = 0; k <= 20; ++k) {
        factorial *= (k + 1);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        }
        CAPTURE(k);
        CHECK(sum == doctest::Approx(factorial).epsilon(1e-8));
    }
    for (double x : rule.nodes) CHECK(x > 0.0);
}

TEST_CASE("plain Laguerre rule") {
    const QuadratureRule rule = gauss_laguerre(10, 0.0);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("green quadrature examples") {
    CHECK(green_quadrature(catalog::identity_disc().deriv, 1.0) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(green_quadrature(catalog::cardioid().deriv, 1.0, {512, 512}) - 2.5) <= 1e-4);
    const auto k = catalog::koebe();
    const double series = *exit_time_series(k.coeffs, 0.9, 1e-10).value;
    CHECK(std::abs(green_quadrature(k.deriv, 0.9) - series) <= 1e-3);
}

TEST_CASE("green quadrature agrees with the series below r = 1") {
    for (const auto& d : {catalog::disc(1.0, 0.5), catalog::strip(), catalog::catenary(),
                          catalog::mgon(5), catalog::wedge_outer(0.25)}) {
        for (double r : {0.3, 0.7, 0.9}) {
            CAPTURE(d.label());
            CAPTURE(r);
            const double series = *exit_time_series(d.coeffs, r, 1e-12).value;
            CHECK(green_quadrature(d.deriv, r, {256, 256}) ==
                  doctest::Approx(series).epsilon(1e-9));
        }
    }
}

TEST_CASE("green quadrature errors") {
    CHECK_THROWS_AS(green_quadrature({}, 0.5), Error);
    CHECK_THROWS_AS(green_quadrature(catalog::identity_disc().deriv, 0.0), Error);
    CHECK_THROWS_AS(green_quadrature(catalog::identity_disc().deriv, 1.5), Error);
}
