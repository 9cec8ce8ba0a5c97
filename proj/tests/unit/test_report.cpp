#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "exittime/catalog.hpp"
#include "exittime/error.hpp"
#include "exittime/report.hpp"

using namespace exittime;
using namespace exittime::report;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(EXITTIME_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

}  // namespace

TEST_CASE("route names") {
    for (Route r : {Route::Series, Route::ClosedForm, Route::GreenQuadrature, Route::MonteCarlo}) {
        CHECK(parse_route(to_string(r)) == r);
    }
    CHECK(parse_route("green") == Route::GreenQuadrature);
    CHECK_THROWS_AS(parse_route("magic"), Error);
}

TEST_CASE("rows and serialization") {
    const auto card = catalog::cardioid();
    const ReportRow s = series_row(card, 1.0, 1e-12);
    CHECK(*s.value == 2.5);
    CHECK(s.meta.find("terms=") != std::string::npos);
    const ReportRow div = series_row(catalog::half_plane(), 1.0, 1e-6);
    CHECK_FALSE(div.value.has_value());

    const std::string csv = to_csv(std::vector<ReportRow>{s, div});
    CHECK(csv.rfind("domain,route,value,bound,meta\n", 0) == 0);
    CHECK(csv.find("half-plane,series,divergent") != std::string::npos);

    const auto json = nlohmann::json::parse(to_json(std::vector<ReportRow>{s, div}));
    REQUIRE(json.is_array());
    CHECK(json[0]["value"] == 2.5);
    CHECK(json[1]["value"] == "divergent");
    CHECK(json[0]["route"] == "series");

    CHECK(domain_label(card, 0.9) == "cardioid@r=0.9");
    CHECK(format_number(0.1) == "0.1");
}

TEST_CASE("all_routes picks the applicable routes") {
    RouteRequest req;
    req.mc.n_paths = 200;
    req.mc.dt = 1e-3;
    req.green = {64, 64};
    auto rows = all_routes(catalog::cardioid(), req);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].route == Route::Series);
    CHECK(rows[1].route == Route::ClosedForm);
    CHECK(rows[2].route == Route::GreenQuadrature);
    CHECK(rows[3].route == Route::MonteCarlo);

    rows = all_routes(catalog::koebe(), req);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].value.has_value());
    CHECK_FALSE(rows[1].value.has_value());

    req.r = 0.5;
    rows = all_routes(catalog::koebe(), req);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].route == Route::GreenQuadrature);
}

TEST_CASE("cli exit-time") {
    auto res = run_cli("exit-time cardioid");
    CHECK(res.status == 0);
    CHECK(res.out == "domain,route,value,bound,meta\ncardioid,series,2.5,0,terms=2;raw=2.5;tail_correction=0\n");

    res = run_cli("exit-time mgon --m 4 --route closed-form");
    CHECK(res.status == 0);
    CHECK(res.out.find("0.2946854131") != std::string::npos);

    res = run_cli("exit-time half-plane");
    CHECK(res.status == 0);
    CHECK(res.out.find("divergent") != std::string::npos);
    CHECK(run_cli("exit-time half-plane --require-finite").status == 1);

    CHECK(run_cli("exit-time torus").status == 1);
    CHECK(run_cli("exit-time disc --a 2").status == 1);
    CHECK(run_cli("exit-time mgon --m 2").status == 1);
    CHECK(run_cli("exit-time cardioid --r 0").status == 1);
    CHECK(run_cli("exit-time cardioid --route nonsense").status != 0);

    const auto json = nlohmann::json::parse(run_cli("exit-time disc --radius 2 --a i --format json").out);
    CHECK(json[0]["domain"] == "disc(radius=2;a=1i)");
    CHECK(std::abs(json[0]["value"].get<double>() - 1.5) <= 1e-6);
    CHECK(run_cli("exit-time disc --radius 2 --a 0,1").out ==
          run_cli("exit-time disc --radius 2 --a 0+1i").out);
}

TEST_CASE("cli route all is byte-identical across runs") {
    const std::string args =
        "exit-time cardioid --route all --paths 500 --dt 1e-3 --n-radial 64 --n-angular 64";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("cardioid,closed-form,2.5") != std::string::npos);
    CHECK(a.out.find("cardioid,mc,") != std::string::npos);
}

TEST_CASE("cli green and simulate") {
    auto res = run_cli("green identity");
    CHECK(res.status == 0);
    CHECK(res.out.find("identity,green-quadrature,0.5") != std::string::npos);
    CHECK(run_cli("simulate disc --paths 200 --dt 1e-3").status == 0);
    CHECK(run_cli("simulate koebe --paths 200").status == 1);
    CHECK(run_cli("simulate disc --start 3 --paths 200").status == 1);
    CHECK(run_cli("simulate disc --paths 10").status == 1);
}

TEST_CASE("cli catalog") {
    const auto res = run_cli("catalog --format json");
    CHECK(res.status == 0);
    const auto json = nlohmann::json::parse(res.out);
    CHECK(json.size() == catalog::names().size());
}
