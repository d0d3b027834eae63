#include "doctest.h"

#include "weingarten/cli.hpp"
#include "weingarten/profile_io.hpp"
#include "weingarten/radial_solver.hpp"
#include "weingarten/residual.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace weingarten;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("weingarten_cli_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }
    [[nodiscard]] const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    return Json::parse(in);
}

std::size_t count_lines(const std::string& path, const std::string& prefix) {
    std::ifstream in(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        n += line.starts_with(prefix) ? 1 : 0;
    }
    return n;
}

} // namespace

TEST_CASE("cli classify") {
    const auto r = run({"classify", "--a", "1", "--b", "-1", "--phi", "const:1"});
    CHECK(r.code == 0);
    CHECK(r.json()["kind"] == "parabolic");
    const auto e = run({"classify", "--a", "1", "--b", "1", "--phi", "identity"});
    CHECK(e.json()["kind"] == "elliptic");
    CHECK(e.json()["global"]["kind"] == "mixed");
}

TEST_CASE("cli solve exit codes") {
    SUBCASE("hyperbolic") {
        const auto r = run({"solve", "--a", "1", "--b", "-1", "--phi", "const:2", "--R", "0.1"});
        CHECK(r.code == cli::kExitNoSolution);
        CHECK(r.json()["status"] == "error");
        CHECK(r.json()["error"] == "NoSolution");
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("parabolic at the axis") {
        CHECK(run({"solve", "--a", "1", "--b", "-1", "--phi", "identity"}).code == cli::kExitDegenerate);
    }
    SUBCASE("slope blow-up") {
        CHECK(run({"solve", "--a", "1", "--b", "0", "--phi", "const:1", "--R", "2.5"}).code == cli::kExitDegenerate);
    }
    SUBCASE("iteration cap") {
        const auto r = run({"solve", "--a", "1", "--b", "1", "--phi", "identity", "--max-iter", "1"});
        CHECK(r.code == cli::kExitNonConvergence);
        CHECK(r.json()["error"] == "NonConvergence");
    }
    SUBCASE("bad input") {
        CHECK(run({"solve", "--a", "1", "--b", "x", "--phi", "const:1"}).code == cli::kExitBadInput);
        CHECK(run({"solve", "--a", "1", "--b", "1", "--phi", "const"}).code == cli::kExitBadInput);
        CHECK(run({"solve", "--a", "1", "--b", "1"}).code == cli::kExitBadInput);
        CHECK(run({"solve", "--a", "1", "--b", "1", "--phi", "const:1", "--branch", "up"}).code == cli::kExitBadInput);
        CHECK(run({"solve", "--a", "1", "--b", "1", "--phi", "const:1", "--n", "4"}).code == cli::kExitBadInput);
        CHECK(run({"solve", "--a", "0", "--b", "0", "--phi", "const:1"}).code == cli::kExitBadInput);
        CHECK(run({"frobnicate"}).code == cli::kExitBadInput);
        CHECK(run({}).code == cli::kExitBadInput);
    }
    SUBCASE("help") {
        CHECK(run({"--help"}).code == 0);
    }
}

TEST_CASE("cli exit-code table") {
    CHECK(cli::exit_code_for(ErrorCode::NoSolution) == 2);
    CHECK(cli::exit_code_for(ErrorCode::DegenerateParabolic) == 3);
    CHECK(cli::exit_code_for(ErrorCode::RadicandNegative) == 3);
    CHECK(cli::exit_code_for(ErrorCode::NonConvergence) == 4);
    CHECK(cli::exit_code_for(ErrorCode::ParseError) == 5);
    CHECK(cli::exit_code_for(ErrorCode::InvalidArgument) == 5);
}

TEST_CASE("cli solve writes the profile, report and mesh") {
    const TempDir dir;
    const auto csv = dir.file("p.csv");
    const auto rep = dir.file("rep.json");
    const auto obj = dir.file("p.obj");
    const auto r = run({"solve", "--a", "1", "--b", "1", "--phi", "const:3", "--R", "0.5", "--out", csv, "--report",
                        rep, "--obj", obj, "--ntheta", "16"});
    REQUIRE(r.code == 0);
    const auto j = read_json(rep);
    CHECK(j == r.json());
    CHECK(j["residual"]["max_abs"].get<double>() <= 1e-4);
    CHECK(j["initial_curvature"].get<double>() == 1.0);
    CHECK(j["grid"]["n"] == 512);
    // Key order is part of the report format.
    const auto text = r.out;
    std::size_t last = 0;
    for (const char* key : {"\"params\"", "\"phi\"", "\"branch\"", "\"classification\"", "\"grid\"", "\"iterations\"",
                            "\"residual\"", "\"initial_curvature\"", "\"status\""}) {
        const auto pos = text.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos >= last);
        last = pos;
    }
    CHECK(count_lines(csv, "") == 514);
    CHECK(count_lines(obj, "v ") == 1 + 16 * 512);
    for (const auto& entry : fs::directory_iterator(dir.path())) {
        CHECK(entry.path().extension() != ".tmp");
    }
}

TEST_CASE("cli solve then verify reproduces the residual") {
    const TempDir dir;
    const auto csv = dir.file("p.csv");
    for (const char* phi : {"const:3", "identity", "poly:1,0.5,-0.25"}) {
        const auto solved = run({"solve", "--a", "1.5", "--b", "0.75", "--phi", phi, "--R", "0.4", "--n", "300",
                                 "--out", csv});
        REQUIRE(solved.code == 0);
        const auto verified = run({"verify", "--in", csv, "--a", "1.5", "--b", "0.75", "--phi", phi});
        REQUIRE(verified.code == 0);
        CHECK(verified.json()["residual"] == solved.json()["residual"]);
        CHECK(verified.json()["provenance"] == "fixed_point");

        // Same numbers as the in-memory solve.
        SolverConfig c;
        c.R = 0.4;
        c.n = 300;
        const auto sol = fixed_point_solve({1.5, 0.75}, parse_phi(phi), Branch::Plus, c);
        const auto rep = ode_residual(sol.params, sol.phi, sol);
        CHECK(verified.json()["residual"]["max_abs"].get<double>() == rep.max_abs);
        CHECK(verified.json()["residual"]["rms"].get<double>() == rep.rms);
    }
}

TEST_CASE("cli auto-shrink") {
    const std::vector<std::string> base = {"solve", "--a", "1", "--b", "0", "--phi", "const:1", "--R", "2.5"};
    auto args = base;
    args.push_back("--auto-shrink");
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.json()["grid"]["R"] == 1.25);
    CHECK(r.json()["auto_shrink_halvings"] == 1);
    CHECK(run(base).code == cli::kExitDegenerate);
    // NoSolution is not a radius problem.
    CHECK(run({"solve", "--a", "1", "--b", "-1", "--phi", "const:2", "--auto-shrink"}).code == cli::kExitNoSolution);
}

TEST_CASE("cli config file") {
    const TempDir dir;
    const auto cfg = dir.file("run.ini");
    {
        std::ofstream out(cfg);
        out << "# sphere\na=1\nb=1\nphi=const:3\nR=0.2\nn=64\nauto-shrink=true\n";
    }
    const auto r = run({"solve", "--config", cfg});
    REQUIRE(r.code == 0);
    CHECK(r.json()["grid"]["R"] == 0.2);
    CHECK(r.json()["grid"]["n"] == 64);
    CHECK(r.json()["auto_shrink_halvings"] == 0);
    const auto overridden = run({"solve", "--config", cfg, "--n", "128"});
    CHECK(overridden.json()["grid"]["n"] == 128);
    CHECK(run({"solve", "--config", dir.file("missing.ini")}).code == cli::kExitBadInput);
}

TEST_CASE("cli parabolic") {
    const TempDir dir;
    SUBCASE("torus") {
        const auto obj = dir.file("torus.obj");
        const auto r = run({"parabolic", "--a", "2", "--b", "-4", "--phi", "const:1", "--k", "-3", "--n", "64",
                            "--obj", obj, "--ntheta", "32"});
        REQUIRE(r.code == 0);
        const auto j = r.json();
        CHECK(j["relation"]["a"] == 0.5);
        CHECK(j["arc"] == "torus_circle");
        CHECK(j["radius"] == 2.0);
        CHECK(j["residual"]["max_abs"].get<double>() <= 1e-9);
        CHECK(count_lines(obj, "v ") == 32 * 130);
        const auto meshed = run({"mesh", "--in", dir.file("none.csv"), "--obj", obj});
        CHECK(meshed.code == cli::kExitBadInput);
    }
    SUBCASE("half circle profile") {
        const auto csv = dir.file("half.csv");
        const auto r = run({"parabolic", "--a", "1", "--b", "-1", "--phi", "const:1", "--m", "1", "--branch", "minus",
                            "--out", csv});
        REQUIRE(r.code == 0);
        CHECK(r.json()["arc"] == "half_circle");
        const auto sol = read_profile_csv(csv, {1.0, -1.0}, Phi::constant(1.0));
        CHECK(sol.r.front() == 0.0);
        CHECK(sol.u.front() == 0.0);
    }
    SUBCASE("cylinder") {
        const auto r = run({"parabolic", "--a", "2", "--b", "-1", "--phi", "const:4", "--cylinder"});
        REQUIRE(r.code == 0);
        CHECK(r.json()["arc"] == "cylinder_line");
        CHECK(r.json()["radius"] == 0.5);
        CHECK(r.json()["relation_lhs"] == 4.0);
    }
    SUBCASE("errors") {
        CHECK(run({"parabolic", "--a", "1", "--b", "1", "--phi", "const:1"}).code == cli::kExitBadInput);
        CHECK(run({"parabolic", "--a", "1", "--b", "-1", "--phi", "const:1", "--k", "1.5"}).code ==
              cli::kExitBadInput);
        CHECK(run({"parabolic", "--a", "1", "--b", "-1", "--phi", "identity"}).code == cli::kExitBadInput);
    }
}

TEST_CASE("cli mesh") {
    const TempDir dir;
    const auto csv = dir.file("p.csv");
    const auto obj = dir.file("p.obj");
    REQUIRE(run({"solve", "--a", "1", "--b", "1", "--phi", "const:3", "--n", "32", "--out", csv}).code == 0);
    const auto r = run({"mesh", "--in", csv, "--obj", obj, "--ntheta", "8"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["vertices"] == 1 + 8 * 32);
    CHECK(r.json()["euler_characteristic"] == 1);
    CHECK(count_lines(obj, "f ") == r.json()["faces"].get<std::size_t>());
    CHECK(run({"mesh", "--in", csv}).code == cli::kExitBadInput);
}

TEST_CASE("cli dirichlet") {
    const auto r = run({"dirichlet", "--a", "1", "--b", "1", "--phi", "const:3", "--R", "0.5", "--grid", "16"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["sign"]["verdict"] == "negative");
    CHECK(j["boundary_value"] == 0.0);
    CHECK(j["residual_2d"]["max_abs"].get<double>() <= 1e-3);
    CHECK(run({"dirichlet", "--a", "1", "--b", "0", "--phi", "const:1", "--R", "2.5", "--fp-radius", "0.5"}).code ==
          cli::kExitDegenerate);
}

TEST_CASE("cli sweep") {
    const TempDir dir;
    const std::vector<std::string> base = {"sweep", "--a", "1,2", "--b", "1,-1", "--phi", "const:3", "--phi",
                                           "poly:1,0.5", "--R", "0.2", "--n", "64"};
    auto serial = base;
    serial.insert(serial.end(), {"--jobs", "1"});
    auto parallel = base;
    parallel.insert(parallel.end(), {"--jobs", "4", "--out", dir.file("sweep.csv"), "--report", dir.file("s.json")});
    const auto a = run(serial);
    const auto b = run(parallel);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    std::ifstream in(dir.file("sweep.csv"));
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == a.out);
    CHECK(count_lines(dir.file("sweep.csv"), "") == 9);
    CHECK(a.out.find("\"poly:1,0.5\"") != std::string::npos);
    CHECK(a.out.find("NoSolution,2") != std::string::npos);
    const auto summary = read_json(dir.file("s.json"));
    CHECK(summary["cases"] == 8);
    CHECK(summary["ok"].get<int>() + summary["failed"].get<int>() == 8);
}
