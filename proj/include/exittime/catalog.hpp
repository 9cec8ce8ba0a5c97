#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exittime/coefficients.hpp"

namespace exittime {

/// Closed-form expected exit time from the base point: a number or infinity.
struct ClosedForm {
    bool divergent = false;
    double value = 0.0;

    static ClosedForm finite(double v) { return {false, v}; }
    static ClosedForm infinite() { return {true, 0.0}; }
};

struct Parameter {
    std::string name;
    Complex value;
};

/**
 * A named domain U = f(D) together with everything the routes need: the
 * coefficient stream of f, the base point f(0), a membership predicate for
 * simulation, and optional evaluators of f and f'.
 */
struct DomainSpec {
    std::string name;
    std::vector<Parameter> params;
    Complex base_point;
    CoefficientStream coeffs;
    std::function<bool(Complex)> contains;  ///< empty when membership is omitted
    std::function<Complex(Complex)> map;    ///< f on the open disc
    std::function<Complex(Complex)> deriv;  ///< f' on the open disc
    std::optional<ClosedForm> closed_form;
    bool bproper_only = false;  ///< B-proper but not injective
    bool mc_eligible = true;    ///< finite expectation and usable membership
    bool has_series = true;     ///< coeffs describes the map

    /// name(param=value,...) for reports.
    std::string label() const;
};

namespace catalog {

DomainSpec disc(double radius, Complex a);
DomainSpec identity_disc();
DomainSpec half_plane();
DomainSpec cardioid();
DomainSpec catenary();
DomainSpec strip();
DomainSpec wedge_inner(double p);
DomainSpec wedge_outer(double p);
DomainSpec mgon(int m);
DomainSpec koebe();
DomainSpec annulus_bproper();

/// The infinite wedge |Arg z| < pi p / 2 itself. It has no coefficient stream
/// here (its map has no tractable expansion); it exists for simulation.
DomainSpec wedge(double p);

/// |Arg z| < pi p / 2 with Arg in (-pi, pi].
bool in_wedge(Complex z, double p);
/// Re(z^{1/p}) > 1/2 on the wedge, principal branch.
bool in_wedge_inner(Complex z, double p);
/// (2^p - 1)/2^p z + 1/2^p lies in the inner domain.
bool in_wedge_outer(Complex z, double p);
/// Interior of the regular m-gon with vertices at the m-th roots of unity.
bool in_regular_polygon(Complex z, int m);

struct DomainParams {
    double radius = 1.0;
    Complex a{0.0, 0.0};
    double p = 0.25;
    int m = 4;
};

/// Catalog names addressable from the command line.
const std::vector<std::string>& names();

/// Builds a catalog entry by name; throws UnknownDomain for anything else.
DomainSpec by_name(std::string_view name, const DomainParams& params = {});

}  // namespace catalog
}  // namespace exittime
