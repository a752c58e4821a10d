#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// Drives the installed binary end to end: exit codes, CSV artifacts, and
// byte-level determinism.

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "ocdd_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + OCDD_CLI_PATH + "\" " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, sep)) fields.push_back(f);
    return fields;
}

// rows of the iteration report (skips # comments, header, and the verdict block)
struct Report {
    std::vector<double> trace_err;
    std::string verdict;
    double rate = 0.0;
    double theta = 0.0;
};

Report parse_report(const std::string& text) {
    Report rep;
    const auto lines = lines_of(text);
    size_t i = 0;
    for (; i < lines.size(); ++i) {
        if (lines[i].rfind("# theta = ", 0) == 0) rep.theta = std::stod(lines[i].substr(10));
        if (lines[i] == "iter,trace_err,ratio") break;
    }
    for (++i; i < lines.size() && lines[i] != "verdict,rate"; ++i)
        rep.trace_err.push_back(std::stod(split(lines[i])[1]));
    if (i + 1 < lines.size()) {
        const auto fields = split(lines[i + 1]);
        rep.verdict = fields[0];
        rep.rate = std::stod(fields[1]);
    }
    return rep;
}

} // namespace

TEST_CASE("misaligned alpha is rejected with a diagnostic naming the key") {
    const RunResult r = run_cli("dn --nu 1 --alpha 0.3333333333 --N 100");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("alpha") != std::string::npos);
    CHECK(r.err.find("grid-aligned") != std::string::npos);
}

TEST_CASE("aligned alpha is accepted when it names a node exactly") {
    const RunResult r = run_cli("dn --nu 1 --alpha 0.25 --N 100 --theta 0.5 --iters 5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("optimal theta resolves and is echoed") {
    const RunResult r = run_cli("dn --nu 1 --N 99 --m 33 --theta optimal");
    CHECK(r.exit_code == 0);
    const Report rep = parse_report(r.out);
    CHECK(rep.theta == doctest::Approx(0.35553939227913027).epsilon(1e-12));
    CHECK(rep.verdict == "converged");
}

TEST_CASE("theory scan: one row per frequency plus limit and summary") {
    const RunResult r = run_cli("theory --method nn --nu 1 --m 33 --N 99 --scan-k 40 --theta 0.3");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    size_t header = 0;
    while (header < lines.size() && lines[header] != "k,rho") ++header;
    REQUIRE(header < lines.size());
    size_t n_rows = 0;
    size_t i = header + 1;
    for (; i < lines.size() && lines[i].rfind("limit,", 0) != 0; ++i) ++n_rows;
    CHECK(n_rows == 41);
    REQUIRE(i < lines.size());
    CHECK(lines[i].rfind("limit,", 0) == 0);
    REQUIRE(i + 2 < lines.size());
    CHECK(lines[i + 1] == "method,nu,alpha,theta_star,sup_rho");
    const auto summary = split(lines[i + 2]);
    CHECK(summary[0] == "nn");
    CHECK(std::stod(summary[3]) == doctest::Approx(0.23911108788715609).epsilon(1e-9));
    CHECK(std::stod(summary[4]) == doctest::Approx(0.043555648451375642).epsilon(1e-7));
}

TEST_CASE("repeated runs are byte-identical") {
    const std::string cmd = "dn --nu 1 --N 60 --m 20 --theta 0.4 --iters 12 --trace0 random --seed 7";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("parallel sweep output is schedule-independent") {
    const std::string sweep =
        "sweep --N 60 --m 15,20,30,45 --nu 0.5,1 --theta 0.2:0.8:0.2 --method dn,nn --iters 25";
    const RunResult serial = run_cli(sweep + " --jobs 1");
    const RunResult parallel = run_cli(sweep + " --jobs 4");
    CHECK(serial.exit_code == 0);
    CHECK(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
    CHECK(lines_of(serial.out).size() == 1 + 2 * 4 * 4 * 2);  // header + cells
}

TEST_CASE("symmetric sweep measures |1-2theta| exactly") {
    const RunResult r = run_cli(
        "sweep --N 64 --m 32 --nu 1e-4,1,1e4 --theta 0.1:0.9:0.2 --method dn --iters 30");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "nu,alpha,theta,method,verdict,measured_rate,predicted_rate");
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i]);
        const double theta = std::stod(f[2]);
        const double measured = std::stod(f[5]);
        const double predicted = std::stod(f[6]);
        CHECK(std::abs(measured - std::abs(1.0 - 2.0 * theta)) <= 1e-10);
        CHECK(std::abs(predicted - std::abs(1.0 - 2.0 * theta)) <= 1e-14);
    }
}

TEST_CASE("unrelaxed sweep flips verdict exactly past the midpoint") {
    const RunResult r = run_cli(
        "sweep --N 300 --m 60:240:30 --nu 1 --theta 1 --method dn --iters 100 --tol 1e-8");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i]);
        const double alpha = std::stod(f[1]);
        const std::string verdict = f[4];
        if (alpha > 0.5)
            CHECK(verdict == "converged");
        else
            CHECK(verdict != "converged");
    }
}

TEST_CASE("empty sweep range is a usage error") {
    const RunResult r = run_cli("sweep --N 64 --m 32 --nu 1");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("theta") != std::string::npos);
}

TEST_CASE("divergence verdict exits with code 2") {
    const RunResult r = run_cli("nn --nu 1 --N 99 --m 33 --theta 0.7 --iters 40");
    CHECK(r.exit_code == 2);
    const Report rep = parse_report(r.out);
    CHECK(rep.verdict == "diverged");
}

TEST_CASE("decay-table reproduction: relaxed runs decay, over-relaxed NN grows") {
    for (const std::string theta : {"0.3", "0.5", "0.7", "optimal"}) {
        const RunResult r =
            run_cli("dn --nu 1 --N 99 --m 33 --iters 15 --tol 1e-300 --theta " + theta);
        CHECK(r.exit_code == 0);
        const Report rep = parse_report(r.out);
        CHECK(rep.trace_err.size() == 16);
        CHECK(rep.trace_err.back() < rep.trace_err.front());
    }
    for (const std::string theta : {"0.3", "optimal"}) {
        const RunResult r =
            run_cli("nn --nu 1 --N 99 --m 33 --iters 15 --tol 1e-300 --theta " + theta);
        CHECK(r.exit_code == 0);
    }
    for (const std::string theta : {"0.5", "0.7"}) {
        const RunResult r =
            run_cli("nn --nu 1 --N 99 --m 33 --iters 15 --tol 1e-300 --theta " + theta);
        CHECK(r.exit_code == 2);
        const Report rep = parse_report(r.out);
        REQUIRE(rep.trace_err.size() == 16);
        for (size_t i = 1; i < rep.trace_err.size(); ++i)
            CHECK(rep.trace_err[i] > rep.trace_err[i - 1]);
    }
}

TEST_CASE("the two regularizations emit different control CSVs") {
    const fs::path u_l2 = scratch_dir() / "u_l2.csv";
    const fs::path u_h1 = scratch_dir() / "u_h1.csv";
    CHECK(run_cli("solve --reg l2 --nu 1 --N 128 --target bump --out " + u_l2.string()).exit_code ==
          0);
    CHECK(run_cli("solve --reg h1 --nu 1 --N 128 --target bump --out " + u_h1.string()).exit_code ==
          0);
    const auto a = lines_of(slurp(u_l2));
    const auto b = lines_of(slurp(u_h1));
    REQUIRE(a.size() == b.size());
    CHECK(a[0] == "x,value");
    double max_diff = 0.0;
    for (size_t i = 1; i < a.size(); ++i)
        max_diff = std::max(max_diff,
                            std::abs(std::stod(split(a[i])[1]) - std::stod(split(b[i])[1])));
    CHECK(max_diff > 1e-3);
}

TEST_CASE("a solve output makes a valid target CSV") {
    const fs::path path = scratch_dir() / "roundtrip.csv";
    CHECK(run_cli("solve --reg h1 --nu 1 --N 64 --target bump --field y --out " + path.string())
              .exit_code == 0);
    const RunResult r = run_cli("dn --nu 1 --N 64 --m 16 --theta optimal --target " + path.string());
    CHECK(r.exit_code == 0);
}

TEST_CASE("nu accepts the h2 token") {
    const RunResult a = run_cli("dn --nu h2 --N 64 --m 32 --theta 0.5 --iters 8");
    const RunResult b = run_cli("dn --nu 0.000244140625 --N 64 --m 32 --theta 0.5 --iters 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("config file supplies values, flags override") {
    const fs::path cfg = scratch_dir() / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "# run configuration\n"
          << "nu = 1\n"
          << "N = 99\n"
          << "m = 33\n"
          << "theta = 0.5\n"
          << "iters = 10\n";
    }
    const RunResult base = run_cli("dn --config " + cfg.string());
    CHECK(base.exit_code == 0);
    CHECK(parse_report(base.out).theta == doctest::Approx(0.5));

    const RunResult over = run_cli("dn --config " + cfg.string() + " --theta 0.7");
    CHECK(over.exit_code == 0);
    CHECK(parse_report(over.out).theta == doctest::Approx(0.7));
}

TEST_CASE("jump conductivity profile runs through the full pipeline") {
    const RunResult r = run_cli(
        "dn --nu 1 --N 60 --m 20 --theta 0.25 --kappa jump:1.2,0.8 --target bump --tol 1e-12");
    CHECK(r.exit_code == 0);
    CHECK(parse_report(r.out).verdict == "converged");
}

TEST_CASE("mode-k initializers are two-dimensional") {
    const RunResult r = run_cli("dn --nu 1 --N 64 --m 32 --theta 0.5 --mode-k 1");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("mode-k") != std::string::npos);
}

TEST_CASE("2D runs work end to end") {
    const RunResult r = run_cli("dn --dim 2 --nu 1 --N 24 --m 8 --theta optimal --mode-k 1");
    CHECK(r.exit_code == 0);
    const Report rep = parse_report(r.out);
    CHECK(rep.verdict == "converged");
    CHECK(rep.theta == doctest::Approx(0.41557337451404127).epsilon(1e-9));

    const RunResult s = run_cli("solve --dim 2 --nu 1 --N 16 --target bump --field y");
    CHECK(s.exit_code == 0);
    CHECK(lines_of(s.out)[0] == "x1,x2,value");
    CHECK(lines_of(s.out).size() == 1 + 17 * 17);
}

TEST_CASE("unknown flags and bad values exit 1") {
    CHECK(run_cli("dn --nu 1 --N 64 --m 32 --bogus 3").exit_code == 1);
    CHECK(run_cli("dn --nu -2 --N 64 --m 32 --theta 0.5").exit_code == 1);
    CHECK(run_cli("dn --nu 1 --N 64 --m 32 --theta fast").exit_code == 1);
    CHECK(run_cli("solve --reg l2 --dim 2 --nu 1 --N 16").exit_code == 1);
}
