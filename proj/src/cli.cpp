#include "ocdd/cli.hpp"

#include "ocdd/csv.hpp"
#include "ocdd/dn.hpp"
#include "ocdd/model.hpp"
#include "ocdd/nn.hpp"
#include "ocdd/theory.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ocdd::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Flat `key = value` configuration: each entry becomes the matching --key
// flag unless that flag was already given on the command line, so explicit
// flags always win. `#` starts a comment.
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open '" + path + "'");

    const auto given = [&](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config: line " + std::to_string(line_no) +
                             " is not of the form key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw UsageError("config: line " + std::to_string(line_no) +
                             " is not of the form key = value");
        const std::string flag = "--" + key;
        if (!given(flag)) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

// Options shared by the problem-running subcommands.
struct Options {
    std::string nu_text = "1";
    int n_cells = 100;
    int m = -1;
    double alpha = std::numeric_limits<double>::quiet_NaN();
    int dim = 1;
    std::string kappa_text = "1";
    std::string target = "zero";
    std::string theta_text = "optimal";
    std::string method = "dn";
    std::string reg = "h1";
    std::string field = "u";
    int mode_k = -1;
    int iters = 50;
    double tol = 1e-10;
    std::string trace0 = "const";
    std::uint64_t seed = 0;
    int scan_k = 40;
    std::string out;
    std::string config_path;
    int jobs = 1;
    // sweep lists (value, comma list, or first:last:step range)
    std::string theta_list;
    std::string m_list;
};

double resolve_nu(const std::string& text, int n_cells) {
    if (text == "h2") {
        const double h = 1.0 / n_cells;
        return h * h;
    }
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size() || !(v > 0.0)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("nu: expected a positive number or 'h2', got '" + text + "'");
    }
}

// The interface lives on a grid node: either --m directly, or --alpha when it
// names a node exactly.
int resolve_interface(const Options& o) {
    const bool has_alpha = std::isfinite(o.alpha);
    if (o.m < 0 && !has_alpha)
        throw UsageError("m: interface position required (give --m, or --alpha = m/N)");
    if (has_alpha) {
        const double m_real = o.alpha * o.n_cells;
        const long m_round = std::lround(m_real);
        if (std::abs(m_real - static_cast<double>(m_round)) > 1e-9)
            throw UsageError("alpha: " + csv::format(o.alpha) +
                             " is not grid-aligned: require alpha = m/N with integer m (N = " +
                             std::to_string(o.n_cells) + ")");
        if (o.m >= 0 && o.m != m_round)
            throw UsageError("alpha: inconsistent with --m (alpha*N = " +
                             std::to_string(m_round) + ", m = " + std::to_string(o.m) + ")");
        return static_cast<int>(m_round);
    }
    return o.m;
}

Eigen::VectorXd build_kappa_1d(const std::string& text, int n_cells, int m) {
    if (text.rfind("jump:", 0) == 0) {
        const auto body = text.substr(5);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw UsageError("kappa: jump profile needs two values, e.g. jump:2,0.5");
        const double left = std::stod(body.substr(0, comma));
        const double right = std::stod(body.substr(comma + 1));
        const int split = m > 0 ? m : n_cells / 2;
        Eigen::VectorXd k(n_cells);
        for (int c = 0; c < n_cells; ++c) k(c) = c < split ? left : right;
        return k;
    }
    return Eigen::VectorXd::Constant(n_cells, std::stod(text));
}

Eigen::MatrixXd build_kappa_2d(const std::string& text, int n_cells, int m) {
    if (text.rfind("jump:", 0) == 0) {
        const auto body = text.substr(5);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw UsageError("kappa: jump profile needs two values, e.g. jump:2,0.5");
        const double left = std::stod(body.substr(0, comma));
        const double right = std::stod(body.substr(comma + 1));
        const int split = m > 0 ? m : n_cells / 2;
        Eigen::MatrixXd k(n_cells, n_cells);
        for (int i = 0; i < n_cells; ++i)
            for (int j = 0; j < n_cells; ++j) k(i, j) = i < split ? left : right;
        return k;
    }
    return Eigen::MatrixXd::Constant(n_cells, n_cells, std::stod(text));
}

bool looks_like_csv_path(const std::string& target) {
    return target.size() > 4 && target.rfind(".csv") == target.size() - 4;
}

GridFunction1D build_target(const std::string& text, const Mesh1D& mesh) {
    if (looks_like_csv_path(text)) {
        std::ifstream in(text);
        if (!in) throw UsageError("target: cannot open CSV file '" + text + "'");
        return csv::read_grid_function(in, mesh);
    }
    return make_target(mesh, text);
}

GridFunction2D build_target(const std::string& text, const Mesh2D& mesh) {
    if (looks_like_csv_path(text)) {
        std::ifstream in(text);
        if (!in) throw UsageError("target: cannot open CSV file '" + text + "'");
        return csv::read_grid_function(in, mesh);
    }
    return make_target(mesh, text);
}

theory::Method resolve_method(const std::string& name) {
    if (name == "dn") return theory::Method::DN;
    if (name == "nn") return theory::Method::NN;
    throw UsageError("method: expected dn or nn, got '" + name + "'");
}

// theta = "optimal" resolves through the closed-form optimum for the given
// method and dimension before the run.
double resolve_theta(const std::string& text, theory::Method method, double nu, double alpha,
                     int dim) {
    if (text == "optimal") {
        if (dim == 2) return theory::theta_star_2d(method, nu, alpha).theta_star;
        return method == theory::Method::DN ? theory::theta_star_dn_1d(nu, alpha)
                                            : theory::theta_star_nn_1d(nu, alpha);
    }
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("theta: expected a number or 'optimal', got '" + text + "'");
    }
}

// List syntax for sweeps: a single value, comma-separated values, or
// first:last:step (inclusive of the endpoint up to rounding slack).
std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<std::string> expand_list(const std::string& text, const char* flag) {
    std::vector<std::string> out;
    if (text.empty()) throw UsageError(std::string(flag) + ": empty range");
    for (const auto& piece : split_on(text, ',')) {
        if (piece.empty()) throw UsageError(std::string(flag) + ": empty range entry");
        const auto colon_parts = split_on(piece, ':');
        if (colon_parts.size() == 1) {
            out.push_back(piece);
            continue;
        }
        if (colon_parts.size() != 3)
            throw UsageError(std::string(flag) + ": range must be first:last:step, got '" +
                             piece + "'");
        const double first = std::stod(colon_parts[0]);
        const double last = std::stod(colon_parts[1]);
        const double step = std::stod(colon_parts[2]);
        if (!(step > 0.0) || last < first)
            throw UsageError(std::string(flag) + ": range needs first <= last and step > 0");
        const int count = static_cast<int>(std::floor((last - first) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) out.push_back(csv::format(first + i * step));
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty range");
    return out;
}

std::vector<double> expand_real_list(const std::string& text, const char* flag) {
    std::vector<double> vals;
    for (const auto& s : expand_list(text, flag)) vals.push_back(std::stod(s));
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<int> expand_int_list(const std::string& text, const char* flag) {
    std::vector<int> vals;
    for (const auto& s : expand_list(text, flag)) {
        const double v = std::stod(s);
        const long r = std::lround(v);
        if (std::abs(v - static_cast<double>(r)) > 1e-9)
            throw UsageError(std::string(flag) + ": expected integers, got '" + s + "'");
        vals.push_back(static_cast<int>(r));
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
};

Output open_output(const std::string& path) {
    Output out;
    if (!path.empty()) {
        out.file.open(path);
        if (!out.file) throw UsageError("out: cannot open '" + path + "' for writing");
        out.os = &out.file;
    }
    return out;
}

IterationConfig make_config(const Options& o, double theta) {
    IterationConfig cfg;
    cfg.theta = theta;
    cfg.tol = o.tol;
    cfg.max_iter = o.iters;
    return cfg;
}

int report_exit_code(const IterationReport& report) {
    return report.verdict == Verdict::Diverged ? 2 : 0;
}

// --- subcommand drivers ----------------------------------------------------

int run_solve(const Options& o) {
    Output out = open_output(o.out);
    if (o.dim == 2) {
        if (o.reg == "l2")
            throw UsageError("reg: the coupled l2 solve is one-dimensional; use --dim 1");
        const Mesh2D mesh{o.n_cells};
        const double nu = resolve_nu(o.nu_text, o.n_cells);
        const Problem2D problem{nu, build_kappa_2d(o.kappa_text, o.n_cells, o.m),
                                build_target(o.target, mesh)};
        const GridFunction2D y = solve_monolithic_h1(problem, mesh);
        if (o.field == "y")
            csv::write_grid_function(*out.os, mesh, y);
        else if (o.field == "u")
            csv::write_grid_function(*out.os, mesh, recover_control_h1(problem, mesh, y));
        else
            throw UsageError("field: expected y or u for --dim 2, got '" + o.field + "'");
        return 0;
    }

    const Mesh1D mesh{o.n_cells};
    const double nu = resolve_nu(o.nu_text, o.n_cells);
    const Problem1D problem{nu, build_kappa_1d(o.kappa_text, o.n_cells, o.m),
                            build_target(o.target, mesh)};
    if (o.reg == "l2") {
        const KktSolution1D kkt = solve_monolithic_l2_kkt(problem, mesh);
        const GridFunction1D& f = o.field == "y" ? kkt.y : (o.field == "p" ? kkt.p : kkt.u);
        if (o.field != "y" && o.field != "p" && o.field != "u")
            throw UsageError("field: expected y, p, or u, got '" + o.field + "'");
        csv::write_grid_function(*out.os, mesh, f);
        return 0;
    }
    if (o.reg != "h1") throw UsageError("reg: expected l2 or h1, got '" + o.reg + "'");
    const GridFunction1D y = solve_monolithic_h1(problem, mesh);
    if (o.field == "y")
        csv::write_grid_function(*out.os, mesh, y);
    else if (o.field == "u")
        csv::write_grid_function(*out.os, mesh, recover_control_h1(problem, mesh, y));
    else
        throw UsageError("field: expected y or u for --reg h1, got '" + o.field + "'");
    return 0;
}

int run_iteration_cmd(const Options& o, theory::Method method) {
    Output out = open_output(o.out);
    const int m = resolve_interface(o);
    const double nu = resolve_nu(o.nu_text, o.n_cells);
    const Decomposition dec{m};

    if (o.dim == 2) {
        const Mesh2D mesh{o.n_cells};
        dec.validate(mesh.n_cells);
        const double alpha = dec.alpha(o.n_cells);
        const double theta = resolve_theta(o.theta_text, method, nu, alpha, 2);
        const Problem2D problem{nu, build_kappa_2d(o.kappa_text, o.n_cells, m),
                                build_target(o.target, mesh)};
        Eigen::VectorXd trace0;
        if (o.mode_k >= 0) {
            trace0 = interface_mode(mesh, o.mode_k);
        } else if (o.trace0 == "random") {
            std::mt19937_64 rng(o.seed);
            std::uniform_real_distribution<double> unif(-1.0, 1.0);
            trace0.resize(o.n_cells - 1);
            for (int j = 0; j < o.n_cells - 1; ++j) trace0(j) = unif(rng);
        } else if (o.trace0 == "const") {
            trace0 = Eigen::VectorXd::Ones(o.n_cells - 1);
        } else {
            throw UsageError("trace0: expected const or random, got '" + o.trace0 + "'");
        }
        const IterationConfig cfg = make_config(o, theta);
        const IterationReport report =
            method == theory::Method::DN
                ? run_dn_2d(problem, mesh, dec, cfg, problem.target, trace0)
                : run_nn_2d(problem, mesh, dec, cfg, problem.target, trace0);
        *out.os << "# theta = " << csv::format(theta) << '\n';
        if (report.theta_flagged) *out.os << "# theta outside (0,1): out of theory\n";
        csv::write_report(*out.os, report);
        return report_exit_code(report);
    }

    if (o.mode_k >= 0) throw UsageError("mode-k: sine-mode initializers need --dim 2");
    const Mesh1D mesh{o.n_cells};
    dec.validate(mesh.n_cells);
    const double alpha = dec.alpha(o.n_cells);
    const double theta = resolve_theta(o.theta_text, method, nu, alpha, 1);
    const Problem1D problem{nu, build_kappa_1d(o.kappa_text, o.n_cells, m),
                            build_target(o.target, mesh)};
    double trace0 = 1.0;
    if (o.trace0 == "random") {
        std::mt19937_64 rng(o.seed);
        trace0 = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    } else if (o.trace0 != "const") {
        throw UsageError("trace0: expected const or random, got '" + o.trace0 + "'");
    }
    const IterationConfig cfg = make_config(o, theta);
    const IterationReport report = method == theory::Method::DN
                                       ? run_dn(problem, mesh, dec, cfg, problem.target, trace0)
                                       : run_nn(problem, mesh, dec, cfg, problem.target, trace0);
    *out.os << "# theta = " << csv::format(theta) << '\n';
    if (report.theta_flagged) *out.os << "# theta outside (0,1): out of theory\n";
    csv::write_report(*out.os, report);
    return report_exit_code(report);
}

int run_theory(const Options& o) {
    Output out = open_output(o.out);
    const theory::Method method = resolve_method(o.method);
    const double nu = resolve_nu(o.nu_text, o.n_cells);
    // The closed forms need no mesh, so a bare --alpha is accepted here;
    // --m is interpreted through N as usual.
    double alpha;
    if (std::isfinite(o.alpha) && o.m < 0)
        alpha = o.alpha;
    else if (o.m >= 0)
        alpha = Decomposition{resolve_interface(o)}.alpha(o.n_cells);
    else
        throw UsageError("alpha: interface position required (give --alpha, or --m with --N)");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw UsageError("alpha: must lie strictly inside (0,1), got " + csv::format(alpha));
    const double theta = resolve_theta(o.theta_text, method, nu, alpha, 2);
    *out.os << "# theta = " << csv::format(theta) << '\n';
    csv::write_theory_scan(*out.os, method, nu, alpha, theta, o.scan_k);
    return 0;
}

struct SweepCell {
    double nu;
    int m;
    double theta;
    theory::Method method;
};

int run_sweep(const Options& o) {
    Output out = open_output(o.out);
    if (o.theta_list.empty()) throw UsageError("theta: empty range");
    if (o.m_list.empty()) throw UsageError("m: empty range");

    std::vector<double> nus;
    for (const auto& s : expand_list(o.nu_text, "nu")) nus.push_back(resolve_nu(s, o.n_cells));
    std::sort(nus.begin(), nus.end());
    const std::vector<double> thetas = expand_real_list(o.theta_list, "theta");
    const std::vector<int> ms = expand_int_list(o.m_list, "m");
    std::vector<theory::Method> methods;
    for (const auto& name : expand_list(o.method, "method")) methods.push_back(resolve_method(name));

    std::vector<SweepCell> cells;
    for (double nu : nus)
        for (int m : ms)
            for (double theta : thetas)
                for (theory::Method method : methods) cells.push_back({nu, m, theta, method});

    std::vector<std::string> rows(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            const SweepCell& cell = cells[i];
            std::ostringstream row;
            const double alpha = Decomposition{cell.m}.alpha(o.n_cells);
            IterationConfig cfg;
            cfg.theta = cell.theta;
            cfg.tol = o.tol;
            cfg.max_iter = o.iters;
            double predicted;
            IterationReport report;
            if (o.dim == 2) {
                const Mesh2D mesh{o.n_cells};
                const Problem2D problem{cell.nu, uniform_kappa(mesh), make_target(mesh, "zero")};
                const Eigen::VectorXd trace0 = Eigen::VectorXd::Ones(o.n_cells - 1);
                report = cell.method == theory::Method::DN
                             ? run_dn_2d(problem, mesh, Decomposition{cell.m}, cfg,
                                         problem.target, trace0)
                             : run_nn_2d(problem, mesh, Decomposition{cell.m}, cfg,
                                         problem.target, trace0);
                predicted = theory::sup_rho_2d(cell.method, cell.nu, alpha, cell.theta).sup;
            } else {
                const Mesh1D mesh{o.n_cells};
                const Problem1D problem{cell.nu, uniform_kappa(mesh), make_target(mesh, "zero")};
                report = cell.method == theory::Method::DN
                             ? run_dn(problem, mesh, Decomposition{cell.m}, cfg, problem.target)
                             : run_nn(problem, mesh, Decomposition{cell.m}, cfg, problem.target);
                predicted = cell.method == theory::Method::DN
                                ? theory::rho_dn_1d(cell.nu, alpha, cell.theta)
                                : theory::rho_nn_1d(cell.nu, alpha, cell.theta);
            }
            row << csv::format(cell.nu) << ',' << csv::format(alpha) << ','
                << csv::format(cell.theta) << ','
                << (cell.method == theory::Method::DN ? "dn" : "nn") << ','
                << to_string(report.verdict) << ',' << csv::format(report.measured_rate) << ','
                << csv::format(predicted);
            rows[i] = row.str();
        }
    };

    const int jobs = std::max(1, o.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    *out.os << "nu,alpha,theta,method,verdict,measured_rate,predicted_rate\n";
    for (const auto& row : rows) *out.os << row << '\n';
    return 0;
}

void add_common_options(CLI::App* sub, Options& o) {
    sub->add_option("--nu", o.nu_text, "regularization weight (positive number, or h2 for nu = h^2)");
    sub->add_option("--N", o.n_cells, "cells per direction");
    sub->add_option("--dim", o.dim, "space dimension, 1 or 2")->check(CLI::IsMember({1, 2}));
    sub->add_option("--kappa", o.kappa_text, "conductivity: value, or jump:left,right");
    sub->add_option("--target", o.target, "target state: zero | bump | sine | path.csv");
    sub->add_option("--tol", o.tol, "stopping tolerance on the interface error");
    sub->add_option("--iters", o.iters, "iteration cap");
    sub->add_option("--trace0", o.trace0, "initial trace: const | random");
    sub->add_option("--seed", o.seed, "seed for pseudo-random options");
    sub->add_option("--out", o.out, "output CSV path (default stdout)");
    sub->add_option("--config", o.config_path,
                    "flat key = value configuration file; flags override");
}

void add_interface_options(CLI::App* sub, Options& o) {
    sub->add_option("--m", o.m, "interface node index (alpha = m/N)");
    sub->add_option("--alpha", o.alpha, "interface position; must equal m/N exactly");
    sub->add_option("--theta", o.theta_text, "relaxation parameter, or 'optimal'");
}

} // namespace

int run_main(int argc, char** argv) {
    CLI::App app{"Dirichlet-Neumann and Neumann-Neumann interface solvers for "
                 "energy-regularized elliptic optimal control"};
    app.require_subcommand(1);

    Options solve_opts, dn_opts, nn_opts, theory_opts, sweep_opts;

    CLI::App* solve = app.add_subcommand("solve", "direct monolithic solve; emits a field CSV");
    add_common_options(solve, solve_opts);
    solve->add_option("--m", solve_opts.m, "interface index for jump conductivity profiles");
    solve->add_option("--reg", solve_opts.reg, "regularization: h1 | l2");
    solve->add_option("--field", solve_opts.field, "emitted field: u | y | p (default u)");

    CLI::App* dn = app.add_subcommand("dn", "Dirichlet-Neumann iteration; emits a report CSV");
    add_common_options(dn, dn_opts);
    add_interface_options(dn, dn_opts);
    dn->add_option("--mode-k", dn_opts.mode_k, "2D sine-mode initializer (0 = constant)");

    CLI::App* nn = app.add_subcommand("nn", "Neumann-Neumann iteration; emits a report CSV");
    add_common_options(nn, nn_opts);
    add_interface_options(nn, nn_opts);
    nn->add_option("--mode-k", nn_opts.mode_k, "2D sine-mode initializer (0 = constant)");

    CLI::App* theo = app.add_subcommand("theory", "closed-form factor scan over frequencies");
    add_common_options(theo, theory_opts);
    add_interface_options(theo, theory_opts);
    theo->add_option("--method", theory_opts.method, "dn | nn");
    theo->add_option("--scan-k", theory_opts.scan_k, "highest frequency in the scan");

    CLI::App* sweep = app.add_subcommand("sweep", "cross-product of (nu, theta, m) runs");
    add_common_options(sweep, sweep_opts);
    sweep->add_option("--m", sweep_opts.m_list, "interface indices: list or first:last:step");
    sweep->add_option("--theta", sweep_opts.theta_list,
                      "relaxation values: list or first:last:step");
    sweep->add_option("--method", sweep_opts.method, "dn, nn, or dn,nn");
    sweep->add_option("--jobs", sweep_opts.jobs, "parallel sweep workers");

    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        args = apply_config_file(std::move(args));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    std::vector<const char*> cargv;
    cargv.reserve(args.size() + 1);
    cargv.push_back("ocdd");
    for (const auto& a : args) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opts);
        if (dn->parsed()) return run_iteration_cmd(dn_opts, theory::Method::DN);
        if (nn->parsed()) return run_iteration_cmd(nn_opts, theory::Method::NN);
        if (theo->parsed()) return run_theory(theory_opts);
        if (sweep->parsed()) return run_sweep(sweep_opts);
        std::cerr << "error: no subcommand given\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace ocdd::cli
