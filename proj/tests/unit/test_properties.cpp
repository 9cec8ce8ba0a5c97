#include <doctest.h>

#include <cmath>

#include "exittime/properties.hpp"
#include "exittime/series.hpp"

using namespace exittime;
using namespace exittime::properties;

TEST_CASE("Schlicht catalog is normalized") {
    const auto entries = schlicht_catalog();
    CHECK(entries.size() >= 10);
    for (const auto& e : entries) {
        CAPTURE(e.label);
        CHECK(e.coeffs.coeff(0) == Complex{});
        CHECK(std::abs(e.coeffs.coeff(1) - 1.0) <= 1e-14);
    }
}

TEST_CASE("extremal sandwich") {
    for (double r : {0.3, 0.6, 0.9}) {
        const ExtremalReport rep = check_extremal(r);
        CAPTURE(r);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.violations == 0);
        CHECK(rep.checked == schlicht_catalog().size());
        CHECK(rep.min_gap > 0.0);
    }
    // Much below r = 0.3 the polygon gaps drop under double resolution.
    for (double r : {0.5, 0.75, 0.95}) {
        CAPTURE(r);
        CHECK(check_extremal(r).violations == 0);
    }
}

TEST_CASE("Koebe gap is non-decreasing in r") {
    std::vector<double> radii;
    for (double r = 0.05; r < 0.96; r += 0.05) radii.push_back(r);
    const ExtremalReport rep = check_koebe_gap_monotone(radii);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.violations == 0);
}

TEST_CASE("de Branges bound on the catalog") {
    const double ratio = max_de_branges_ratio(50);
    CHECK(ratio <= 1.0 + 1e-12);
    // Koebe attains it.
    CHECK(ratio == doctest::Approx(1.0));
}

TEST_CASE("Parseval on every mapped catalog entry") {
    for (double s : {0.3, 0.7}) {
        const ParsevalReport rep = check_parseval(s);
        CAPTURE(s);
        CAPTURE(rep.worst);
        CHECK(rep.max_discrepancy <= 1e-6);
        CHECK(rep.checked == catalog_with_maps().size());
    }
}

TEST_CASE("reference closed forms") {
    CHECK(identity_exit_time(0.6) == doctest::Approx(0.18));
    CHECK(koebe_exit_time(0.6) == doctest::Approx(0.933837890625));
    CHECK(koebe_exit_time(0.5) == doctest::Approx(10.0 / 27.0));
}
