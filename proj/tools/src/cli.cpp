#include "weingarten/cli.hpp"

#include "weingarten/classify.hpp"
#include "weingarten/dirichlet.hpp"
#include "weingarten/geometry.hpp"
#include "weingarten/parabolic.hpp"
#include "weingarten/profile_io.hpp"
#include "weingarten/radial_solver.hpp"
#include "weingarten/residual.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

namespace weingarten::cli {

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NoSolution: return kExitNoSolution;
    case ErrorCode::DegenerateParabolic:
    case ErrorCode::RadicandNegative:
    case ErrorCode::SlopeBlowup:
    case ErrorCode::StoppedVertical: return kExitDegenerate;
    case ErrorCode::NonConvergence: return kExitNonConvergence;
    default: return kExitBadInput;
    }
}

namespace {

using Json = nlohmann::ordered_json;

/// Maximum number of R halvings under --auto-shrink.
constexpr int kMaxHalvings = 8;

struct Options {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<std::string> phi;
    std::vector<std::string> branch;
    double R = 0.5;
    int n = 512;
    double tol = 1e-10;
    int max_iter = 200;
    double slope_cap = 1e3;
    std::string out;
    std::string report;
    std::string obj;
    std::string in;
    int ntheta = 64;
    bool auto_shrink = false;
    double k = 0.0;
    double m = 0.0;
    bool cylinder = false;
    double height = 1.0;
    double fp_radius = 0.0;
    int grid = 0;
    double h = 1e-3;
    int jobs = 0;
};

template <typename T>
T single(const std::vector<T>& values, const char* name) {
    require(values.size() == 1, ErrorCode::InvalidArgument,
            std::string("--") + name + " takes exactly one value for this command");
    return values.front();
}

WeingartenParams params_of(const Options& o) { return {single(o.a, "a"), single(o.b, "b")}; }
Phi phi_of(const Options& o) { return parse_phi(single(o.phi, "phi")); }
Branch branch_of(const Options& o) { return o.branch.empty() ? Branch::Plus : parse_branch(single(o.branch, "branch")); }

SolverConfig config_of(const Options& o) {
    SolverConfig c;
    c.R = o.R;
    c.n = o.n;
    c.tol = o.tol;
    c.max_iter = o.max_iter;
    c.slope_cap = o.slope_cap;
    c.validate();
    return c;
}

Json params_json(const WeingartenParams& p) { return Json{{"a", p.a}, {"b", p.b}}; }
Json residual_json(const ResidualReport& rep) { return Json{{"max_abs", rep.max_abs}, {"rms", rep.rms}}; }

bool shrinkable(ErrorCode code) {
    return code == ErrorCode::NonConvergence || code == ErrorCode::RadicandNegative || code == ErrorCode::SlopeBlowup;
}

/// Runs `solve` with config.R, halving R on shrinkable failures when allowed.
template <typename Fn>
auto with_shrink(SolverConfig config, bool auto_shrink, int& halvings, Fn&& solve) {
    halvings = 0;
    for (;;) {
        try {
            return solve(config);
        } catch (const Error& e) {
            if (!auto_shrink || !shrinkable(e.code()) || halvings == kMaxHalvings) {
                throw;
            }
            config.R /= 2.0;
            ++halvings;
        }
    }
}

void write_json(const std::string& path, const Json& j) {
    if (!path.empty()) {
        write_file_atomic(path, j.dump(2) + "\n");
    }
}

Json solve_report(const RadialSolution& sol, int halvings, bool auto_shrink) {
    Json j;
    j["params"] = params_json(sol.params);
    j["phi"] = sol.phi.to_string();
    j["branch"] = to_string(sol.branch);
    j["classification"] = to_string(classify_at(sol.params, sol.phi, 1.0).kind);
    j["grid"] = Json{{"R", sol.r.back()}, {"n", sol.size() - 1}};
    j["iterations"] = sol.iterations;
    j["residual"] = residual_json(ode_residual(sol.params, sol.phi, sol));
    j["initial_curvature"] = initial_curvature(sol.params, sol.phi, sol.branch);
    j["status"] = "ok";
    if (auto_shrink) {
        j["auto_shrink_halvings"] = halvings;
    }
    return j;
}

void write_outputs(const Options& o, const RadialSolution& sol) {
    if (!o.out.empty()) {
        write_profile_csv(sol, o.out);
    }
    if (!o.obj.empty()) {
        write_obj(revolve_to_mesh(sol, o.ntheta), o.obj);
    }
}

Json cmd_classify(const Options& o) {
    const auto params = params_of(o);
    const auto phi = phi_of(o);
    const auto axis = classify_at(params, phi, 1.0);
    const auto global = classify_global(params, phi, 201);
    Json j;
    j["params"] = params_json(params);
    j["phi"] = phi.to_string();
    j["kind"] = to_string(axis.kind);
    j["discriminant"] = axis.discriminant;
    j["global"] = Json{{"kind", to_string(global.kind)},
                       {"min_discriminant", global.min_discriminant},
                       {"max_discriminant", global.max_discriminant}};
    j["status"] = "ok";
    return j;
}

Json cmd_solve(const Options& o) {
    const auto params = params_of(o);
    const auto phi = phi_of(o);
    const auto branch = branch_of(o);
    int halvings = 0;
    const auto sol = with_shrink(config_of(o), o.auto_shrink, halvings, [&](const SolverConfig& c) {
        return fixed_point_solve(params, phi, branch, c);
    });
    write_outputs(o, sol);
    return solve_report(sol, halvings, o.auto_shrink);
}

Json cmd_dirichlet(const Options& o) {
    const auto params = params_of(o);
    const auto phi = phi_of(o);
    const auto branch = branch_of(o);
    auto config = config_of(o);
    config.R = o.fp_radius > 0.0 ? std::min(o.fp_radius, o.R) : o.R;
    // Shrinking only moves work from the fixed-point stage to the continuation;
    // the disk radius itself stays at --R.
    int halvings = 0;
    const auto sol = with_shrink(config, o.auto_shrink, halvings, [&](const SolverConfig& c) {
        return solve_dirichlet_disk(params, phi, branch, o.R, c);
    });
    write_outputs(o, sol);
    auto j = solve_report(sol, halvings, o.auto_shrink);
    const auto sign = sign_report(sol);
    j["vertical_shift"] = sol.vertical_shift;
    j["boundary_value"] = sol.u.back();
    j["sign"] = Json{{"verdict", to_string(sign.verdict)},
                     {"min_u", sign.min_u},
                     {"max_u", sign.max_u},
                     {"tolerance", sign.tolerance}};
    if (o.grid > 0) {
        const auto res = functional_residual_2d(params, phi, sol, o.grid, o.h);
        j["residual_2d"] = Json{{"max_abs", res.report.max_abs}, {"rms", res.report.rms}, {"grid", o.grid}, {"h", o.h}};
    }
    return j;
}

Json cmd_parabolic(const Options& o) {
    const auto phi = phi_of(o);
    if (!phi.is_constant()) {
        fail(ErrorCode::NotParabolic, "a parabolic relation needs a constant phi");
    }
    const auto rel = normalize_parabolic(single(o.a, "a"), single(o.b, "b"), phi.eval(1.0));
    Json j;
    j["relation"] = Json{{"a", rel.a}, {"b", rel.b}, {"c", rel.c}};
    if (o.cylinder) {
        require(o.out.empty(), ErrorCode::InvalidArgument, "the cylinder is not a graph over r; use --obj");
        const auto cyl = cylinder_profile(rel.a, o.height, std::max(o.n, 2));
        if (!o.obj.empty()) {
            write_obj(revolve_to_mesh(cyl.profile, o.ntheta), o.obj);
        }
        j["arc"] = to_string(cyl.variant);
        j["radius"] = 1.0 / rel.a;
        j["H"] = cyl.mean_curvature;
        j["K"] = cyl.gauss_curvature;
        j["relation_lhs"] = cyl.relation_lhs();
        j["status"] = "ok";
        return j;
    }
    const CircleSolution csol(rel.a, o.k, o.m, branch_of(o));
    const auto sol = circle_profile(csol, o.n);
    if (!o.out.empty()) {
        write_profile_csv(sol, o.out);
    }
    if (!o.obj.empty()) {
        write_obj(revolve_to_mesh(stitch_circle(csol.a, csol.k, csol.m, o.n), o.ntheta), o.obj);
    }
    const auto centre = csol.center();
    const auto domain = csol.domain();
    j["arc"] = to_string(classify_arc(csol.a, csol.k));
    j["sign"] = to_string(csol.sign);
    j["k"] = csol.k;
    j["m"] = csol.m;
    j["radius"] = csol.radius();
    j["center"] = Json::array({centre[0], centre[1]});
    j["domain"] = Json::array({domain[0], domain[1]});
    j["grid"] = Json{{"n", o.n}};
    j["residual"] = residual_json(ode_residual(sol.params, sol.phi, sol));
    j["status"] = "ok";
    return j;
}

Json cmd_mesh(const Options& o) {
    require(!o.in.empty(), ErrorCode::InvalidArgument, "mesh needs --in <profile.csv>");
    require(!o.obj.empty(), ErrorCode::InvalidArgument, "mesh needs --obj <path>");
    // Meshing only looks at the heights, so the relation is irrelevant here.
    const auto sol = read_profile_csv(o.in, WeingartenParams(1.0, 0.0), Phi::constant(0.0));
    const auto mesh = revolve_to_mesh(sol, o.ntheta);
    write_obj(mesh, o.obj);
    Json j;
    j["input"] = o.in;
    j["ntheta"] = o.ntheta;
    j["vertices"] = mesh.vertices.size();
    j["faces"] = mesh.faces.size();
    j["euler_characteristic"] = euler_characteristic(mesh);
    j["closed"] = is_closed_manifold(mesh);
    j["status"] = "ok";
    return j;
}

Json cmd_verify(const Options& o) {
    require(!o.in.empty(), ErrorCode::InvalidArgument, "verify needs --in <profile.csv>");
    const auto params = params_of(o);
    const auto phi = phi_of(o);
    const auto sol = read_profile_csv(o.in, params, phi);
    const auto ode = ode_residual(params, phi, sol);
    Json j;
    j["params"] = params_json(params);
    j["phi"] = phi.to_string();
    j["provenance"] = to_string(sol.provenance);
    j["grid"] = Json{{"R", sol.r.back()}, {"n", sol.size() - 1}};
    j["residual"] = residual_json(ode);
    j["weingarten_residual"] = residual_json(weingarten_residual(params, phi, sol));
    j["skipped_nodes"] = ode.skipped_nodes.size();
    j["status"] = "ok";
    return j;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    return quoted + "\"";
}

struct SweepCase {
    double a = 0.0;
    double b = 0.0;
    std::string phi;
    std::string branch;
};

std::string sweep_row(const Options& o, const SweepCase& c) {
    std::ostringstream row;
    row << format_double(c.a) << ',' << format_double(c.b) << ',' << csv_field(c.phi) << ',' << c.branch << ',';
    try {
        const WeingartenParams params(c.a, c.b);
        const auto phi = parse_phi(c.phi);
        const auto branch = parse_branch(c.branch);
        int halvings = 0;
        const auto sol = with_shrink(config_of(o), o.auto_shrink, halvings, [&](const SolverConfig& cfg) {
            return fixed_point_solve(params, phi, branch, cfg);
        });
        const auto rep = ode_residual(params, phi, sol);
        row << "ok,0," << format_double(sol.r.back()) << ',' << sol.size() - 1 << ',' << sol.iterations << ','
            << format_double(rep.max_abs) << ',' << format_double(rep.rms) << ','
            << format_double(initial_curvature(params, phi, branch));
    } catch (const Error& e) {
        row << to_string(e.code()) << ',' << exit_code_for(e.code()) << ",,,,,,";
    }
    return row.str();
}

Json cmd_sweep(const Options& o, std::ostream& out, bool& printed) {
    require(!o.a.empty() && !o.b.empty() && !o.phi.empty(), ErrorCode::InvalidArgument,
            "sweep needs at least one --a, --b and --phi");
    const std::vector<std::string> branches = o.branch.empty() ? std::vector<std::string>{"plus"} : o.branch;
    std::vector<SweepCase> cases;
    for (double a : o.a) {
        for (double b : o.b) {
            for (const auto& phi : o.phi) {
                for (const auto& br : branches) {
                    cases.push_back({a, b, phi, br});
                }
            }
        }
    }
    const std::size_t jobs = o.jobs > 0 ? static_cast<std::size_t>(o.jobs)
                                        : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::string> rows(cases.size());
    for (std::size_t start = 0; start < cases.size(); start += jobs) {
        std::vector<std::future<std::string>> batch;
        const std::size_t stop = std::min(cases.size(), start + jobs);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, [&o, &c = cases[i]] { return sweep_row(o, c); }));
        }
        for (std::size_t i = start; i < stop; ++i) {
            rows[i] = batch[i - start].get();
        }
    }
    std::string csv = "a,b,phi,branch,status,exit_code,R,n,iterations,max_abs,rms,initial_curvature\n";
    std::size_t ok = 0;
    for (const auto& row : rows) {
        csv += row + "\n";
        ok += row.find(",ok,0,") != std::string::npos ? 1 : 0;
    }
    if (o.out.empty()) {
        out << csv;
        printed = true;
    } else {
        write_file_atomic(o.out, csv);
    }
    Json j;
    j["cases"] = cases.size();
    j["ok"] = ok;
    j["failed"] = cases.size() - ok;
    j["status"] = "ok";
    return j;
}

void add_options(CLI::App& app, Options& o) {
    app.add_option("--a", o.a, "Coefficient a (sweep: comma-separated list)")->delimiter(',');
    app.add_option("--b", o.b, "Coefficient b (sweep: comma-separated list)")->delimiter(',');
    app.add_option("--phi", o.phi, "phi as const:<c>, identity or poly:<c0>,<c1>,... (sweep: repeat)");
    app.add_option("--branch", o.branch, "plus or minus (sweep: repeat)");
    app.add_option("--R", o.R, "Solve radius (dirichlet: disk radius)")->capture_default_str();
    app.add_option("--n", o.n, "Number of grid intervals")->capture_default_str();
    app.add_option("--tol", o.tol, "Fixed-point tolerance")->capture_default_str();
    app.add_option("--max-iter", o.max_iter, "Fixed-point iteration cap")->capture_default_str();
    app.add_option("--slope-cap", o.slope_cap, "Largest admissible |u'|")->capture_default_str();
    app.add_option("--out", o.out, "Profile CSV (sweep: summary CSV)");
    app.add_option("--report", o.report, "JSON report path");
    app.add_option("--obj", o.obj, "OBJ mesh path");
    app.add_option("--in", o.in, "Input profile CSV (mesh, verify)");
    app.add_option("--ntheta", o.ntheta, "Angular samples for meshes")->capture_default_str();
    app.add_flag("--auto-shrink", o.auto_shrink, "Halve R up to 8 times when the fixed-point solve fails");
    app.add_option("--k", o.k, "Circle shift k (parabolic)")->capture_default_str();
    app.add_option("--m", o.m, "Circle height m (parabolic)")->capture_default_str();
    app.add_flag("--cylinder", o.cylinder, "Emit the cylinder instead of a circle arc (parabolic)");
    app.add_option("--height", o.height, "Cylinder height (parabolic)")->capture_default_str();
    app.add_option("--fp-radius", o.fp_radius, "Fixed-point radius before continuing (dirichlet)");
    app.add_option("--grid", o.grid, "Lattice size for the Cartesian residual (dirichlet, 0 = off)");
    app.add_option("--step", o.h, "Stencil step for the Cartesian residual (dirichlet)")->capture_default_str();
    app.add_option("--jobs", o.jobs, "Concurrent solves (sweep, 0 = hardware threads)");
    app.set_config("--config", "", "Read options from a key=value file");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radial solutions of linear Weingarten equations 2aH + bK = phi(nu)", "weingarten"};
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    add_options(app, o);
    const char* names[] = {"classify", "solve", "parabolic", "dirichlet", "mesh", "verify", "sweep"};
    const char* descriptions[] = {
        "Elliptic / parabolic / hyperbolic type of (a, b, phi)",
        "Fixed-point solve of the radial initial-value problem",
        "Closed-form circle arcs (or the cylinder) of a parabolic relation",
        "Radial solution with zero boundary values on a disk",
        "Revolve a profile CSV into an OBJ mesh",
        "Residuals of a profile CSV against (a, b, phi)",
        "Run solve over a grid of parameters",
    };
    for (std::size_t i = 0; i < std::size(names); ++i) {
        app.add_subcommand(names[i], descriptions[i]);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Json report;
        bool printed = false;
        if (command == "classify") {
            report = cmd_classify(o);
        } else if (command == "solve") {
            report = cmd_solve(o);
        } else if (command == "parabolic") {
            report = cmd_parabolic(o);
        } else if (command == "dirichlet") {
            report = cmd_dirichlet(o);
        } else if (command == "mesh") {
            report = cmd_mesh(o);
        } else if (command == "verify") {
            report = cmd_verify(o);
        } else {
            report = cmd_sweep(o, out, printed);
        }
        write_json(o.report, report);
        if (!printed) {
            out << report.dump(2) << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        Json j;
        j["status"] = "error";
        j["error"] = to_string(e.code());
        j["message"] = e.what();
        out << j.dump(2) << "\n";
        err << "weingarten " << command << ": " << e.what() << "\n";
        try {
            write_json(o.report, j);
        } catch (const Error&) {
            // The original failure is the one worth reporting.
        }
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "weingarten " << command << ": " << e.what() << "\n";
        return kExitBadInput;
    }
}

} // namespace weingarten::cli
