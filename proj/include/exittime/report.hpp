#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exittime/catalog.hpp"
#include "exittime/green.hpp"
#include "exittime/montecarlo.hpp"

namespace exittime::report {

enum class Route { Series, ClosedForm, GreenQuadrature, MonteCarlo };

std::string_view to_string(Route route);
Route parse_route(std::string_view name);

/// One computed value. `value` is empty when the route reports divergence.
struct ReportRow {
    std::string domain;
    Route route = Route::Series;
    std::optional<double> value;
    double bound = 0.0;  ///< certified error bound, or standard error for mc
    std::string meta;    ///< key=value pairs separated by ';'
};

/// A row checked against a reference value for the reproduction table.
struct CheckRow {
    ReportRow row;
    std::string criterion;
    std::optional<double> target;  ///< empty: divergence expected
    std::optional<double> target_hi;  ///< set when the target is an interval
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;  ///< wall time; not serialized
};

struct RouteRequest {
    double r = 1.0;
    std::optional<double> tol;  ///< defaults per radius
    MCConfig mc;
    GreenOptions green;
    std::optional<Complex> start;  ///< mc start point; defaults to the base point
};

ReportRow series_row(const DomainSpec& d, double r, double tol);
ReportRow closed_form_row(const DomainSpec& d);
ReportRow green_row(const DomainSpec& d, double r, const GreenOptions& options);
ReportRow mc_row(const DomainSpec& d, Complex start, const MCConfig& cfg);

/// Rows for every route that applies to `d` (closed form and mc only at r = 1).
std::vector<ReportRow> all_routes(const DomainSpec& d, const RouteRequest& request);

/// Row label for `d` at radius r ("name(params)" plus "@r=..." when r < 1).
std::string domain_label(const DomainSpec& d, double r);

struct ReproduceOptions {
    MCConfig mc;
    double wedge_t_max = 200.0;
    /// Called after each row is computed.
    std::function<void(const CheckRow&)> on_row;
};

/// Every reproducible number with its reference value and tolerance.
std::vector<CheckRow> reproduce(const ReproduceOptions& options = {});

std::string format_number(double v);

/// CSV with header domain,route,value,bound,meta.
std::string to_csv(const std::vector<ReportRow>& rows);
/// Same columns plus criterion,target,tolerance,pass.
std::string to_csv(const std::vector<CheckRow>& rows);
std::string to_json(const std::vector<ReportRow>& rows);
std::string to_json(const std::vector<CheckRow>& rows);

}  // namespace exittime::report
