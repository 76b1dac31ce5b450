#include "sprk/cli.hpp"

#include "sprk/experiments.hpp"
#include "sprk/integrals.hpp"
#include "sprk/irk.hpp"
#include "sprk/models.hpp"
#include "sprk/oracle.hpp"
#include "sprk/tableau.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sprk::cli {

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitGateFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;

struct Options {
    std::string method = "gauss2";
    std::string tableau_file;
    std::string case_name = "I";
    double alpha1 = 1.0;
    double alpha2 = 0.1;
    double h = 0.01;
    long steps = 0;  // 0: case default
    std::string y0;
    std::string out;
    std::string summary;
    std::string error_mode = "absolute";
    double newton_tol = 1e-13;
    int newton_max_iter = 25;
    std::string config;

    std::string family;
    int stages = 2;
    std::string nodes;

    std::string hs = "0.1,0.05,0.025,0.0125";
    double horizon = 0.0;  // 0: command default
    int samples = 1000;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

OscillatorParams params_of(const Options& o)
{
    OscillatorParams p;
    p.case_id = parse_case(o.case_name);
    p.alpha1 = o.alpha1;
    p.alpha2 = o.alpha2;
    p.validate();
    return p;
}

State initial_state_of(const Options& o, CaseId c)
{
    if (o.y0.empty())
        return default_initial_state(c);
    const auto v = parse_list(o.y0);
    if (static_cast<int>(v.size()) != state_dim(c))
        throw UsageError("--y0 needs " + std::to_string(state_dim(c)) + " values for case " +
                         std::string(to_string(c)));
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

SolverConfig solver_of(const Options& o)
{
    SolverConfig cfg;
    cfg.newton_tol = o.newton_tol;
    cfg.max_newton_iters = o.newton_max_iter;
    cfg.validate();
    return cfg;
}

ButcherTableau tableau_of(const Options& o)
{
    if (o.method == "custom-file") {
        if (o.tableau_file.empty())
            throw UsageError("--method custom-file requires --tableau-file");
        std::ifstream in(o.tableau_file);
        if (!in)
            throw UsageError("cannot open tableau file '" + o.tableau_file + "'");
        return read_tableau(in);
    }
    return method_tableau(o.method);
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write '" + path + "'");
    return f;
}

void write_json(const std::string& path, const json& j)
{
    auto f = open_output(path);
    f << j.dump(2) << '\n';
}

// ---------------------------------------------------------------- tableau

int cmd_tableau(const Options& o, std::ostream& out)
{
    std::optional<ButcherTableau> tab;
    if (!o.nodes.empty()) {
        if (!o.family.empty())
            throw UsageError("--nodes and --family are mutually exclusive");
        const auto c = parse_list(o.nodes);
        if (c.size() != 2)
            throw UsageError("--nodes takes exactly two nodes (two-stage construction)");
        tab = construct_symplectic_2stage(c[0], c[1]);
    } else {
        const NodeFamily fam = parse_node_family(o.family.empty() ? "gauss" : o.family);
        if (fam == NodeFamily::Gauss) {
            tab = construct_gauss(o.stages);
        } else {
            if (o.stages != 2)
                throw UsageError("only two-stage Radau/Lobatto constructions are available");
            const auto c = nodes(fam, 2);
            tab = construct_symplectic_2stage(c[0], c[1]);
        }
    }

    const auto d = diagnostics(*tab);
    write_tableau(out, *tab);
    out << "symplectic_residual: " << num(d.symplectic_residual) << '\n';
    out << "order2_residuals: " << num(d.weight_sum_residual) << ' ' << num(d.node_moment_residual) << '\n';
    out << "row_sum_residual: " << num(d.row_sum_residual) << '\n';
    if (d.row_sum_residual > 1e-12)
        out << "warning: row sums differ from nodes (row_sum_residual " << num(d.row_sum_residual)
            << "); no order claim beyond 2\n";
    if (!o.out.empty()) {
        auto f = open_output(o.out);
        write_tableau(f, *tab);
    }
    return d.symplectic_residual <= 1e-12 ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------- integrate

int cmd_integrate(const Options& o, std::ostream& out)
{
    const auto params = params_of(o);
    const auto y0 = initial_state_of(o, params.case_id);
    const long steps = o.steps > 0 ? o.steps : default_steps(params.case_id);
    const auto tab = tableau_of(o);
    const auto traj = integrate(tab, vector_field(params), 0.0, y0, o.h, steps, solver_of(o));

    const auto labels = state_labels(params.case_id);
    if (!o.out.empty()) {
        auto f = open_output(o.out);
        f << "n,t";
        for (const auto& l : labels)
            f << ',' << l;
        f << '\n';
        for (std::size_t n = 0; n < traj.states.size(); ++n) {
            f << n << ',' << num(traj.time(n));
            for (Eigen::Index i = 0; i < traj.states[n].size(); ++i)
                f << ',' << num(traj.states[n](i));
            f << '\n';
        }
    }

    const double t_end = traj.time(traj.steps());
    const State exact = exact_flow(params, y0).eval(t_end);
    const double oracle_error = (traj.states.back() - exact).lpNorm<Eigen::Infinity>();
    out << "case " << to_string(params.case_id) << ", method " << o.method << ", h " << num(o.h) << ", steps "
        << steps << '\n';
    out << "final state:";
    for (Eigen::Index i = 0; i < traj.states.back().size(); ++i)
        out << ' ' << num(traj.states.back()(i));
    out << "\noracle error at t=" << num(t_end) << ": " << num(oracle_error) << '\n';
    out << "max solver iterations per step: " << traj.max_iterations << '\n';

    if (!o.summary.empty()) {
        json j;
        j["case"] = std::string(to_string(params.case_id));
        j["method"] = o.method;
        j["h"] = o.h;
        j["steps"] = steps;
        j["final_time"] = t_end;
        j["final_state"] = std::vector<double>(traj.states.back().data(),
                                               traj.states.back().data() + traj.states.back().size());
        j["oracle_error"] = oracle_error;
        j["max_solver_iterations"] = traj.max_iterations;
        write_json(o.summary, j);
    }
    return kExitOk;
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const Options& o, std::ostream& out)
{
    const auto params = params_of(o);
    const auto y0 = initial_state_of(o, params.case_id);
    const long steps = o.steps > 0 ? o.steps : default_steps(params.case_id);
    const auto mode = parse_error_mode(o.error_mode);
    const auto tab = tableau_of(o);
    const auto run = run_invariants(tab, params, y0, o.h, steps, solver_of(o));

    if (!o.out.empty()) {
        auto f = open_output(o.out);
        f << "n,t";
        for (const auto& s : run.series)
            f << ',' << s.label;
        f << '\n';
        for (std::size_t n = 0; n < run.trajectory.states.size(); ++n) {
            f << n << ',' << num(run.trajectory.time(n));
            for (const auto& s : run.series)
                f << ',' << num(s.values(mode)[n]);
            f << '\n';
        }
    }

    out << "case " << to_string(params.case_id) << ", method " << o.method << ", h " << num(o.h) << ", steps "
        << steps << ", error mode " << to_string(mode) << '\n';
    out << std::left << std::setw(6) << "label" << std::setw(12) << "kind" << std::setw(26) << "max_error"
        << std::setw(26) << "final_error" << std::setw(26) << "drift_slope" << "check\n";
    json integrals = json::object();
    for (std::size_t k = 0; k < run.series.size(); ++k) {
        const auto& s = run.series[k];
        const auto& sum = s.summary(mode);
        const auto& chk = run.checks[k];
        out << std::setw(6) << s.label << std::setw(12) << (s.autonomous ? "autonomous" : "time-dep")
            << std::setw(26) << num(sum.max_error) << std::setw(26) << num(sum.final_error) << std::setw(26)
            << num(sum.drift_slope) << (chk.passed ? "pass" : "FAIL") << "  " << chk.detail << '\n';
        integrals[s.label] = {
            {"max_error", sum.max_error},
            {"final_error", sum.final_error},
            {"drift_slope", sum.drift_slope},
            {"first_half_max", sum.first_half_max},
            {"second_half_max", sum.second_half_max},
            {"autonomous", s.autonomous},
            {"check_passed", chk.passed},
            {"check_detail", chk.detail},
        };
    }
    out << (run.all_passed ? "all boundedness checks passed\n" : "boundedness checks FAILED\n");

    if (!o.summary.empty()) {
        json j;
        j["case"] = std::string(to_string(params.case_id));
        j["method"] = o.method;
        j["h"] = o.h;
        j["steps"] = steps;
        j["alpha1"] = params.alpha1;
        j["alpha2"] = params.alpha2;
        j["y0"] = std::vector<double>(y0.data(), y0.data() + y0.size());
        j["error_mode"] = std::string(to_string(mode));
        j["integrals"] = integrals;
        j["all_passed"] = run.all_passed;
        write_json(o.summary, j);
    }
    return run.all_passed ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------- converge

int cmd_converge(const Options& o, std::ostream& out)
{
    const auto params = params_of(o);
    const auto y0 = initial_state_of(o, params.case_id);
    const auto hs = parse_list(o.hs);
    if (hs.size() < 3)
        throw UsageError("--hs needs at least 3 step sizes");
    const double horizon = o.horizon > 0.0 ? o.horizon : 1.0;
    const auto tab = tableau_of(o);
    const auto study = convergence_study(tab, params, y0, hs, horizon, solver_of(o));

    out << "case " << to_string(params.case_id) << ", method " << o.method << ", horizon " << num(horizon) << '\n';
    out << std::left << std::setw(26) << "h" << std::setw(10) << "steps" << "error\n";
    for (const auto& p : study.points)
        out << std::setw(26) << num(p.h) << std::setw(10) << p.steps << num(p.error) << '\n';
    out << "fitted slope: " << num(study.slope) << '\n';

    const auto band = order_band(o.method);
    bool ok = true;
    if (band) {
        ok = study.slope >= band->first && study.slope <= band->second;
        out << "declared band [" << band->first << ", " << band->second << "]: " << (ok ? "pass" : "FAIL") << '\n';
    } else {
        out << "no declared band for method '" << o.method << "'\n";
    }

    if (!o.out.empty()) {
        auto f = open_output(o.out);
        f << "h,steps,error\n";
        for (const auto& p : study.points)
            f << num(p.h) << ',' << p.steps << ',' << num(p.error) << '\n';
    }
    if (!o.summary.empty()) {
        json j;
        j["case"] = std::string(to_string(params.case_id));
        j["method"] = o.method;
        j["horizon"] = horizon;
        j["slope"] = study.slope;
        json pts = json::array();
        for (const auto& p : study.points)
            pts.push_back({{"h", p.h}, {"steps", p.steps}, {"error", p.error}});
        j["points"] = pts;
        if (band)
            j["band"] = {band->first, band->second};
        j["passed"] = ok;
        write_json(o.summary, j);
    }
    return ok ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto params = params_of(o);
    const auto y0 = initial_state_of(o, params.case_id);
    const double horizon = o.horizon > 0.0 ? o.horizon : default_validation_horizon(params.case_id);
    const auto report = validate_integrals(params, y0, horizon, o.samples);

    out << "case " << to_string(params.case_id) << ", oracle horizon " << num(horizon) << ", " << report.samples
        << " samples, tolerance " << num(kOracleConstancyTol) << '\n';
    json entries = json::array();
    for (const auto& e : report.entries) {
        out << std::left << std::setw(16) << e.label << std::setw(26) << num(e.max_deviation);
        if (e.implemented)
            out << (e.passed ? "pass" : "FAIL");
        else
            out << "published form (replaced by " << e.replaces << "), " << (e.passed ? "constant" : "NOT constant");
        out << '\n';
        entries.push_back({{"label", e.label},
                           {"implemented", e.implemented},
                           {"replaces", e.replaces},
                           {"max_deviation", e.max_deviation},
                           {"passed", e.passed}});
    }
    out << (report.all_implemented_passed ? "all implemented integrals constant\n"
                                          : "some implemented integrals are NOT constant\n");
    if (!o.summary.empty()) {
        json j;
        j["case"] = std::string(to_string(params.case_id));
        j["horizon"] = horizon;
        j["samples"] = report.samples;
        j["tolerance"] = kOracleConstancyTol;
        j["entries"] = entries;
        j["all_implemented_passed"] = report.all_implemented_passed;
        write_json(o.summary, j);
    }
    return report.all_implemented_passed ? kExitOk : kExitGateFailed;
}

// ---------------------------------------------------------------- wiring

void add_model_options(CLI::App* sub, Options& o)
{
    sub->add_option("--case", o.case_name, "Oscillator case: I, II or III")->capture_default_str();
    sub->add_option("--alpha1", o.alpha1, "Re k (Case III)")->capture_default_str();
    sub->add_option("--alpha2", o.alpha2, "Im k (Case III)")->capture_default_str();
    sub->add_option("--y0", o.y0, "Initial state, comma-separated");
    sub->add_option("--config", o.config, "key=value file; command-line flags take precedence");
}

void add_solver_options(CLI::App* sub, Options& o)
{
    sub->add_option("--method", o.method,
                    "gauss1, gauss2, gauss3, radau1_2, radau2_2, lobatto_2 or custom-file")
        ->capture_default_str();
    sub->add_option("--tableau-file", o.tableau_file, "Tableau text file for --method custom-file");
    sub->add_option("--newton-tol", o.newton_tol, "Stage-increment tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--newton-max-iter", o.newton_max_iter, "Maximum Newton iterations per step")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

void add_run_options(CLI::App* sub, Options& o)
{
    sub->add_option("--h", o.h, "Step size")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--steps", o.steps, "Number of steps (default 10000; 2000 for Case III)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "CSV output path");
    sub->add_option("--summary", o.summary, "JSON summary path");
}

// Appends `--key value` for every config entry the user did not pass.
void inject_config(std::vector<std::string>& args, CLI::App& app)
{
    auto it = std::find(args.begin(), args.end(), "--config");
    std::string path;
    if (it != args.end() && std::next(it) != args.end()) {
        path = *std::next(it);
    } else {
        for (const auto& a : args)
            if (a.rfind("--config=", 0) == 0)
                path = a.substr(9);
    }
    if (path.empty() || args.empty())
        return;
    CLI::App* sub = app.get_subcommand_no_throw(args.front());
    if (sub == nullptr)
        return;
    for (const auto& [key, value] : load_config(path)) {
        const std::string flag = "--" + key;
        if (key == "config")
            continue;
        if (sub->get_option_no_throw(flag) == nullptr)
            throw UsageError("config key '" + key + "' is not an option of '" + args.front() + "'");
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
}

}  // namespace

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty())
            throw UsageError("empty entry in list '" + text + "'");
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            throw UsageError("not a number: '" + item + "'");
        }
        if (used != item.size())
            throw UsageError("not a number: '" + item + "'");
        v.push_back(x);
    }
    return v;
}

std::map<std::string, std::string> load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0)
            key = key.substr(2);
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Symplectic Runge-Kutta construction and first-integral experiments", "sprk"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto* tab = app.add_subcommand("tableau", "Construct a tableau and print it with its diagnostics");
    tab->add_option("--family", o.family, "gauss, radau1, radau2 or lobatto");
    tab->add_option("--stages", o.stages, "Stage count")->capture_default_str();
    tab->add_option("--nodes", o.nodes, "Two custom nodes c1,c2 for the two-stage construction");
    tab->add_option("--out", o.out, "Also write the tableau text to this file");
    tab->add_option("--config", o.config, "key=value file; command-line flags take precedence");

    auto* integ = app.add_subcommand("integrate", "Integrate one case and write the trajectory");
    add_model_options(integ, o);
    add_solver_options(integ, o);
    add_run_options(integ, o);

    auto* inv = app.add_subcommand("invariants", "Integrate and measure first-integral errors");
    add_model_options(inv, o);
    add_solver_options(inv, o);
    add_run_options(inv, o);
    inv->add_option("--error-mode", o.error_mode, "absolute or relative")->capture_default_str();

    auto* conv = app.add_subcommand("converge", "Empirical convergence order against the exact solution");
    add_model_options(conv, o);
    add_solver_options(conv, o);
    conv->add_option("--hs", o.hs, "Step sizes, comma-separated")->capture_default_str();
    conv->add_option("--horizon", o.horizon, "Final time (default 1)");
    conv->add_option("--out", o.out, "CSV output path");
    conv->add_option("--summary", o.summary, "JSON summary path");

    auto* val = app.add_subcommand("validate", "Check every first integral for constancy along the exact flow");
    add_model_options(val, o);
    val->add_option("--horizon", o.horizon, "Oracle horizon (default 100; 20 for Case III)");
    val->add_option("--samples", o.samples, "Number of sample times")->capture_default_str();
    val->add_option("--summary", o.summary, "JSON summary path");

    try {
        inject_config(args, app);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (tab->parsed())
            return cmd_tableau(o, out);
        if (integ->parsed())
            return cmd_integrate(o, out);
        if (inv->parsed())
            return cmd_invariants(o, out);
        if (conv->parsed())
            return cmd_converge(o, out);
        if (val->parsed())
            return cmd_validate(o, out);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sprk::cli
