#include "ocdd/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ocdd::csv {

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid_function(std::ostream& os, const Mesh1D& mesh, const GridFunction1D& g) {
    if (g.size() != mesh.n_nodes())
        throw std::invalid_argument("write_grid_function: field not sampled on this grid");
    os << "x,value\n";
    for (int j = 0; j < mesh.n_nodes(); ++j)
        os << format(mesh.node(j)) << ',' << format(g(j)) << '\n';
}

void write_grid_function(std::ostream& os, const Mesh2D& mesh, const GridFunction2D& g) {
    if (g.rows() != mesh.n_nodes() || g.cols() != mesh.n_nodes())
        throw std::invalid_argument("write_grid_function: field not sampled on this grid");
    os << "x1,x2,value\n";
    for (int i = 0; i < mesh.n_nodes(); ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j)
            os << format(mesh.node(i)) << ',' << format(mesh.node(j)) << ',' << format(g(i, j))
               << '\n';
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed numeric field: " + s);
    return v;
}

} // namespace

GridFunction1D read_grid_function(std::istream& is, const Mesh1D& mesh) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("grid-function CSV is empty");
    GridFunction1D g(mesh.n_nodes());
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2)
            throw std::invalid_argument("grid-function CSV row needs x,value");
        if (rows >= mesh.n_nodes())
            throw std::invalid_argument("grid-function CSV has more rows than grid nodes");
        g(rows++) = parse_double(fields[1]);
    }
    if (rows != mesh.n_nodes())
        throw std::invalid_argument("grid-function CSV does not cover every node of the grid");
    return g;
}

GridFunction2D read_grid_function(std::istream& is, const Mesh2D& mesh) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("grid-function CSV is empty");
    GridFunction2D g(mesh.n_nodes(), mesh.n_nodes());
    const int total = mesh.n_nodes() * mesh.n_nodes();
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 3)
            throw std::invalid_argument("grid-function CSV row needs x1,x2,value");
        if (rows >= total)
            throw std::invalid_argument("grid-function CSV has more rows than grid nodes");
        g(rows / mesh.n_nodes(), rows % mesh.n_nodes()) = parse_double(fields[2]);
        ++rows;
    }
    if (rows != total)
        throw std::invalid_argument("grid-function CSV does not cover every node of the grid");
    return g;
}

void write_report(std::ostream& os, const IterationReport& report) {
    os << "iter,trace_err,ratio\n";
    for (const auto& rec : report.records) {
        os << rec.iter << ',' << format(rec.trace_err) << ',';
        if (rec.iter > 0) os << format(rec.ratio);
        os << '\n';
    }
    os << "verdict,rate\n";
    os << to_string(report.verdict) << ',' << format(report.measured_rate) << '\n';
}

void write_theory_scan(std::ostream& os, theory::Method method, double nu, double alpha,
                       double theta, int k_scan) {
    os << "k,rho\n";
    for (int k = 0; k <= k_scan; ++k)
        os << k << ',' << format(theory::rho_2d(method, nu, alpha, theta, theory::Frequency::mode(k)))
           << '\n';
    os << "limit,"
       << format(theory::rho_2d(method, nu, alpha, theta, theory::Frequency::limit())) << '\n';

    const theory::Equioscillation eq = theory::theta_star_2d(method, nu, alpha);
    os << "method,nu,alpha,theta_star,sup_rho\n";
    os << (method == theory::Method::DN ? "dn" : "nn") << ',' << format(nu) << ','
       << format(alpha) << ',' << format(eq.theta_star) << ',' << format(eq.sup_rho) << '\n';
}

} // namespace ocdd::csv
