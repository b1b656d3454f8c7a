#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "qmc/error.hpp"

using namespace qmc;
using namespace qmc::cli;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qmchan");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::array<double, 4>> evolve_rows(const std::string& method, RunOptions o) {
    o.method = method;
    o.format = Format::Json;
    const json j = json::parse(cmd_evolve(o));
    std::vector<std::array<double, 4>> rows;
    for (const auto& r : j.at("rows")) rows.push_back({r.at("t"), r.at("u"), r.at("v"), r.at("w")});
    return rows;
}

double max_row_diff(const std::vector<std::array<double, 4>>& a, const std::vector<std::array<double, 4>>& b) {
    REQUIRE(a.size() == b.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(a[i][k] - b[i][k]));
    return d;
}

}  // namespace

TEST_CASE("show") {
    const Result r = invoke({"show"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("w_eq").get<double>() == doctest::Approx(-1.0 / 3.0));
    CHECK(j.at("unital") == false);
    CHECK(j.at("c_positive") == true);
    CHECK(j.at("bloch_rates").at("inv_Tw") == 3.0);
}

TEST_CASE("evolve: methods agree and start at the input") {
    RunOptions o;
    o.t_max = 3.0;
    o.dt = 0.1;
    o.bloch = {0.6, 0.0, -0.8};
    const auto closed = evolve_rows("closed", o);
    CHECK(closed.size() == 31);
    CHECK(closed[0] == std::array<double, 4>{0.0, 0.6, 0.0, -0.8});
    CHECK(max_row_diff(closed, evolve_rows("rk4", o)) <= 1e-6);
    CHECK(max_row_diff(closed, evolve_rows("exp", o)) <= 1e-10);

    o.channel.rates.omega = 0.5;
    CHECK(max_row_diff(evolve_rows("exp", o), evolve_rows("rk4", o)) <= 1e-6);
    CHECK_THROWS_AS(evolve_rows("closed", o), DomainError);
}

TEST_CASE("evolve: csv layout and density-matrix input") {
    const Result r = invoke({"evolve", "--t-max", "0.2", "--dt", "0.1", "--rho", "1,0,0,0,0,0,0,0"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,u,v,w\n0,0,0,1\n0.1,", 0) == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 4);

    CHECK(invoke({"evolve", "--rho", "2,0,0,0,0,0,-1,0"}).code == 2);
    CHECK(invoke({"evolve", "--dt", "0"}).code == 2);
    CHECK(invoke({"evolve", "--bloch", "1,1,1"}).code == 2);
}

TEST_CASE("ellipsoid frames") {
    RunOptions o;
    o.points = 40;
    o.format = Format::Json;
    const json j = json::parse(cmd_ellipsoid(o));
    REQUIRE(j.at("frames").size() == 3);
    const auto& f1 = j.at("frames")[2];
    CHECK(f1.at("t") == 1.0);
    CHECK(f1.at("semi_axes")[1].get<double>() == doctest::Approx(0.9177902157484243).epsilon(1e-14));
    CHECK(f1.at("minimal_entropy").at("states").size() == 2);
    CHECK(j.at("frames")[0].at("minimal_entropy").at("degenerate") == true);
    for (const auto& p : f1.at("surface")) {
        const double u = p[0], v = p[1], w = p[2];
        const double lhs = std::pow(u / 0.05424667588906951, 2) + std::pow(v / 0.9177902157484243, 2) +
                           std::pow((w + 0.3167376438773787) / 0.049787068367863944, 2);
        CHECK(std::abs(lhs - 1.0) < 1e-9);
    }

    o.format = Format::Csv;
    const std::string csv = cmd_ellipsoid(o);
    CHECK(csv.rfind("t,u,v,w\n", 0) == 0);
}

TEST_CASE("kraus") {
    const Result id = invoke({"kraus", "--t", "0"});
    REQUIRE(id.code == 0);
    const json j0 = json::parse(id.out);
    CHECK(j0.at("count") == 1);
    CHECK(j0.at("completeness_residual") == 0.0);
    CHECK(j0.at("constants").is_null());

    const json j1 = json::parse(invoke({"kraus", "--t", "1"}).out);
    CHECK(j1.at("count") == 4);
    CHECK(j1.at("completeness_residual").get<double>() <= 1e-10);
    CHECK(j1.at("appendix_residual").get<double>() <= 1e-10);
    CHECK(j1.at("constants").at("m13").get<double>() == doctest::Approx(0.1394185933890904).epsilon(1e-12));

    CHECK(invoke({"kraus", "--t", "-1"}).code == 2);
}

TEST_CASE("capacity") {
    const Result r = invoke({"capacity", "--t", "1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("C").get<double>() == doctest::Approx(0.8168870275204252).epsilon(1e-6));
    CHECK(j.at("v_axis_pair").get<double>() == doctest::Approx(0.8167602346409942).epsilon(1e-12));
    CHECK(j.at("decomposition").at("shift_error").get<double>() == doctest::Approx(0.07362891623011092));
    CHECK(j.at("params").at("max_states") == 4);
    CHECK(invoke({"capacity", "--max-states", "5"}).code == 1);
}

TEST_CASE("entangle") {
    RunOptions o;
    o.t_max = 2.0;
    o.dt = 0.01;
    o.format = Format::Json;
    const json j = json::parse(cmd_entangle(o));
    REQUIRE(j.at("curves").size() == 3);
    CHECK(j.at("curves")[0].at("label") == "M=0");
    CHECK(j.at("curves")[1].at("label") == "M=0.8Mmax");
    CHECK(j.at("curves")[2].at("label") == "M=Mmax");
    CHECK(j.at("curves")[0].at("t").size() == 201);
    const double t0 = j.at("curves")[0].at("critical_time");
    const double t1 = j.at("curves")[1].at("critical_time");
    const double t2 = j.at("curves")[2].at("critical_time");
    CHECK(t0 < t1);
    CHECK(t1 < t2);

    o.format = Format::Csv;
    const std::string csv = cmd_entangle(o);
    CHECK(csv.rfind("M_label,t,e3\nM=0,0,-0.5\n", 0) == 0);

    o.channel = channel_config_from_json(json::parse(R"({"kind": "phase_damping", "Gamma": 1})"));
    CHECK_THROWS_AS(cmd_entangle(o), DomainError);
}

TEST_CASE("validate") {
    const Result r = invoke({"validate"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("ok") == true);

    RunOptions o;
    o.channel.rates.omega = 2.0;
    CHECK(validation_report(o).at("ok") == true);
}

TEST_CASE("exit codes") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"show", "--format", "csv"}).code == 1);
    CHECK(invoke({"evolve", "--method", "euler"}).code == 1);
    CHECK(invoke({"show", "--help"}).code == 0);
    CHECK(invoke({"show", "--config", "/nonexistent.json"}).code == 1);
}

TEST_CASE("output file") {
    const std::string path = "test_cli_capacity_out.json";
    std::remove(path.c_str());
    const Result r = invoke({"kraus", "--t", "0.5", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    CHECK(json::parse(f).at("count") == 4);
    std::remove(path.c_str());
}
