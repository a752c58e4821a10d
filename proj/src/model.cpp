#include "ocdd/model.hpp"

#include "ocdd/tridiag.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ocdd {

namespace {

using Triplet = Eigen::Triplet<double>;
using SparseMat = Eigen::SparseMatrix<double>;

// Edge conductivities of the five-point stencil. Cell (a,b) has lower-left
// node (a*h, b*h); an interior edge borders two cells and carries their
// harmonic mean.
double kappa_edge_x(const Eigen::MatrixXd& kappa, int i, int j) {
    // edge between nodes (i,j) and (i+1,j), valid for 1 <= j <= N-1
    return edge_kappa(kappa(i, j - 1), kappa(i, j));
}

double kappa_edge_y(const Eigen::MatrixXd& kappa, int i, int j) {
    // edge between nodes (i,j) and (i,j+1), valid for 1 <= i <= N-1
    return edge_kappa(kappa(i - 1, j), kappa(i, j));
}

// Assembles the interior-node system for -nu div(kappa grad y) + c*y with
// rows scaled by h^2; c = 1 for the reduced optimality equation, c = 0 for
// the plain state equation.
SparseMat assemble_2d(const Eigen::MatrixXd& kappa, const Mesh2D& mesh, double nu, double c) {
    const int n = mesh.n_cells - 1;  // interior nodes per direction
    const double h = mesh.h();
    const auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };

    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(5) * n * n);
    for (int i = 1; i < mesh.n_cells; ++i)
        for (int j = 1; j < mesh.n_cells; ++j) {
            const double kw = kappa_edge_x(kappa, i - 1, j);
            const double ke = kappa_edge_x(kappa, i, j);
            const double ks = kappa_edge_y(kappa, i, j - 1);
            const double kn = kappa_edge_y(kappa, i, j);
            trip.emplace_back(idx(i, j), idx(i, j), nu * (kw + ke + ks + kn) + c * h * h);
            if (i > 1) trip.emplace_back(idx(i, j), idx(i - 1, j), -nu * kw);
            if (i < n) trip.emplace_back(idx(i, j), idx(i + 1, j), -nu * ke);
            if (j > 1) trip.emplace_back(idx(i, j), idx(i, j - 1), -nu * ks);
            if (j < n) trip.emplace_back(idx(i, j), idx(i, j + 1), -nu * kn);
        }
    SparseMat a(n * n, n * n);
    a.setFromTriplets(trip.begin(), trip.end());
    return a;
}

// Sparse Cholesky with one step of iterative refinement; keeps the relative
// residual at rounding level even on fine grids.
Eigen::VectorXd solve_spd(const SparseMat& a, const Eigen::VectorXd& b) {
    Eigen::SimplicialLDLT<SparseMat> ldlt(a);
    if (ldlt.info() != Eigen::Success)
        throw std::runtime_error("sparse factorization failed on an SPD system");
    Eigen::VectorXd x = ldlt.solve(b);
    x += ldlt.solve(b - a * x);
    return x;
}

Eigen::VectorXd interior_2d(const GridFunction2D& g, int n_cells) {
    const int n = n_cells - 1;
    Eigen::VectorXd v(n * n);
    for (int i = 1; i < n_cells; ++i)
        for (int j = 1; j < n_cells; ++j) v((i - 1) * n + (j - 1)) = g(i, j);
    return v;
}

GridFunction2D embed_2d(const Eigen::VectorXd& v, int n_cells) {
    const int n = n_cells - 1;
    GridFunction2D g = GridFunction2D::Zero(n_cells + 1, n_cells + 1);
    for (int i = 1; i < n_cells; ++i)
        for (int j = 1; j < n_cells; ++j) g(i, j) = v((i - 1) * n + (j - 1));
    return g;
}

// Tridiagonal interior solve of -nu (kappa y')' + c*y = f; rows scaled h^2.
GridFunction1D solve_1d(const Eigen::VectorXd& kappa, const Mesh1D& mesh, double nu, double c,
                        const GridFunction1D& f) {
    const int n = mesh.n_cells - 1;
    const double h = mesh.h();
    Eigen::VectorXd diag(n), lower(n - 1), upper(n - 1), rhs(n);
    for (int j = 1; j <= n; ++j) {
        diag(j - 1) = nu * (kappa(j - 1) + kappa(j)) + c * h * h;
        rhs(j - 1) = h * h * f(j);
        if (j < n) upper(j - 1) = -nu * kappa(j);
        if (j > 1) lower(j - 2) = -nu * kappa(j - 1);
    }
    const Eigen::VectorXd x = solve_tridiagonal<double>(lower, diag, upper, rhs);
    GridFunction1D y = GridFunction1D::Zero(mesh.n_nodes());
    y.segment(1, n) = x;
    return y;
}

} // namespace

GridFunction1D solve_monolithic_h1(const Problem1D& problem, const Mesh1D& mesh) {
    problem.validate(mesh);
    return solve_1d(problem.kappa, mesh, problem.nu, 1.0, problem.target);
}

GridFunction2D solve_monolithic_h1(const Problem2D& problem, const Mesh2D& mesh) {
    problem.validate(mesh);
    const double h = mesh.h();
    const SparseMat a = assemble_2d(problem.kappa, mesh, problem.nu, 1.0);
    const Eigen::VectorXd b = h * h * interior_2d(problem.target, mesh.n_cells);
    return embed_2d(solve_spd(a, b), mesh.n_cells);
}

KktSolution1D solve_monolithic_l2_kkt(const Problem1D& problem, const Mesh1D& mesh) {
    problem.validate(mesh);
    const int n = mesh.n_cells - 1;
    const double h = mesh.h();
    const double h2 = h * h;

    // Block system in (y, p): K y + (h^2/nu) p = 0 and K p - h^2 y = -h^2 target,
    // with K the h^2-scaled diffusion operator. The discrete triple is the
    // exact first-order system of the trapezoid-weighted cost, so resolving
    // the state per perturbed control can never undercut its cost.
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(8) * n);
    for (int j = 1; j <= n; ++j) {
        const int r = j - 1;
        const double d = problem.kappa(j - 1) + problem.kappa(j);
        trip.emplace_back(r, r, d);
        trip.emplace_back(n + r, n + r, d);
        if (j < n) {
            trip.emplace_back(r, r + 1, -problem.kappa(j));
            trip.emplace_back(n + r, n + r + 1, -problem.kappa(j));
            trip.emplace_back(r + 1, r, -problem.kappa(j));
            trip.emplace_back(n + r + 1, n + r, -problem.kappa(j));
        }
        trip.emplace_back(r, n + r, h2 / problem.nu);
        trip.emplace_back(n + r, r, -h2);
    }
    SparseMat a(2 * n, 2 * n);
    a.setFromTriplets(trip.begin(), trip.end());

    Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * n);
    for (int j = 1; j <= n; ++j) b(n + j - 1) = -h2 * problem.target(j);

    Eigen::SparseLU<SparseMat> lu(a);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("sparse factorization failed on the coupled system");
    Eigen::VectorXd x = lu.solve(b);
    x += lu.solve(b - a * x);

    KktSolution1D sol;
    sol.y = GridFunction1D::Zero(mesh.n_nodes());
    sol.p = GridFunction1D::Zero(mesh.n_nodes());
    sol.y.segment(1, n) = x.head(n);
    sol.p.segment(1, n) = x.tail(n);
    sol.u = -sol.p / problem.nu;
    return sol;
}

GridFunction1D recover_control_h1(const Problem1D& problem, const Mesh1D& mesh,
                                  const GridFunction1D& y) {
    problem.validate(mesh);
    if (y.size() != mesh.n_nodes())
        throw std::invalid_argument("recover_control_h1: state and target live on different grids");
    return (problem.target - y) / problem.nu;
}

GridFunction2D recover_control_h1(const Problem2D& problem, const Mesh2D& mesh,
                                  const GridFunction2D& y) {
    problem.validate(mesh);
    if (y.rows() != mesh.n_nodes() || y.cols() != mesh.n_nodes())
        throw std::invalid_argument("recover_control_h1: state and target live on different grids");
    return (problem.target - y) / problem.nu;
}

GridFunction1D solve_state(const Eigen::VectorXd& kappa, const Mesh1D& mesh,
                           const GridFunction1D& u) {
    if (u.size() != mesh.n_nodes())
        throw std::invalid_argument("solve_state: source not sampled on this grid");
    return solve_1d(kappa, mesh, 1.0, 0.0, u);
}

GridFunction2D solve_state(const Eigen::MatrixXd& kappa, const Mesh2D& mesh,
                           const GridFunction2D& u) {
    if (u.rows() != mesh.n_nodes() || u.cols() != mesh.n_nodes())
        throw std::invalid_argument("solve_state: source not sampled on this grid");
    const double h = mesh.h();
    const SparseMat a = assemble_2d(kappa, mesh, 1.0, 0.0);
    const Eigen::VectorXd b = h * h * interior_2d(u, mesh.n_cells);
    return embed_2d(solve_spd(a, b), mesh.n_cells);
}

GridFunction1D apply_diffusion(const Eigen::VectorXd& kappa, const Mesh1D& mesh,
                               const GridFunction1D& v) {
    if (v.size() != mesh.n_nodes())
        throw std::invalid_argument("apply_diffusion: field not sampled on this grid");
    const double h2 = mesh.h() * mesh.h();
    GridFunction1D out = GridFunction1D::Zero(mesh.n_nodes());
    for (int j = 1; j < mesh.n_cells; ++j)
        out(j) = (kappa(j - 1) * (v(j) - v(j - 1)) + kappa(j) * (v(j) - v(j + 1))) / h2;
    return out;
}

GridFunction2D apply_diffusion(const Eigen::MatrixXd& kappa, const Mesh2D& mesh,
                               const GridFunction2D& v) {
    if (v.rows() != mesh.n_nodes() || v.cols() != mesh.n_nodes())
        throw std::invalid_argument("apply_diffusion: field not sampled on this grid");
    const double h2 = mesh.h() * mesh.h();
    GridFunction2D out = GridFunction2D::Zero(mesh.n_nodes(), mesh.n_nodes());
    for (int i = 1; i < mesh.n_cells; ++i)
        for (int j = 1; j < mesh.n_cells; ++j)
            out(i, j) = (kappa_edge_x(kappa, i - 1, j) * (v(i, j) - v(i - 1, j)) +
                         kappa_edge_x(kappa, i, j) * (v(i, j) - v(i + 1, j)) +
                         kappa_edge_y(kappa, i, j - 1) * (v(i, j) - v(i, j - 1)) +
                         kappa_edge_y(kappa, i, j) * (v(i, j) - v(i, j + 1))) /
                        h2;
    return out;
}

double l2_norm(const Mesh1D& mesh, const GridFunction1D& v) {
    const double h = mesh.h();
    double s = 0.5 * (v(0) * v(0) + v(mesh.n_cells) * v(mesh.n_cells));
    for (int j = 1; j < mesh.n_cells; ++j) s += v(j) * v(j);
    return std::sqrt(h * s);
}

double l2_norm(const Mesh2D& mesh, const GridFunction2D& v) {
    const double h = mesh.h();
    const int nn = mesh.n_nodes();
    double s = 0.0;
    for (int i = 0; i < nn; ++i) {
        const double wi = (i == 0 || i == mesh.n_cells) ? 0.5 : 1.0;
        for (int j = 0; j < nn; ++j) {
            const double wj = (j == 0 || j == mesh.n_cells) ? 0.5 : 1.0;
            s += wi * wj * v(i, j) * v(i, j);
        }
    }
    return std::sqrt(h * h * s);
}

namespace {

double misfit_term(const Mesh1D& mesh, const GridFunction1D& y, const GridFunction1D& target) {
    const double n = l2_norm(mesh, y - target);
    return 0.5 * n * n;
}

double misfit_term(const Mesh2D& mesh, const GridFunction2D& y, const GridFunction2D& target) {
    const double n = l2_norm(mesh, y - target);
    return 0.5 * n * n;
}

// Discrete energy integral kappa |grad w|^2, summed over edges; exact mate of
// the assembled diffusion operator.
double energy_sq(const Eigen::VectorXd& kappa, const Mesh1D& mesh, const GridFunction1D& w) {
    double s = 0.0;
    for (int c = 0; c < mesh.n_cells; ++c) {
        const double d = w(c + 1) - w(c);
        s += kappa(c) * d * d;
    }
    return s / mesh.h();
}

double energy_sq(const Eigen::MatrixXd& kappa, const Mesh2D& mesh, const GridFunction2D& w) {
    double s = 0.0;
    for (int i = 0; i < mesh.n_cells; ++i)
        for (int j = 1; j < mesh.n_cells; ++j) {
            const double d = w(i + 1, j) - w(i, j);
            s += kappa_edge_x(kappa, i, j) * d * d;
        }
    for (int i = 1; i < mesh.n_cells; ++i)
        for (int j = 0; j < mesh.n_cells; ++j) {
            const double d = w(i, j + 1) - w(i, j);
            s += kappa_edge_y(kappa, i, j) * d * d;
        }
    return s;
}

} // namespace

double cost(const Problem1D& problem, const Mesh1D& mesh, const GridFunction1D& y,
            const GridFunction1D& u, CostMode mode) {
    problem.validate(mesh);
    if (y.size() != mesh.n_nodes() || u.size() != mesh.n_nodes())
        throw std::invalid_argument("cost: fields not sampled on this grid");
    double control_sq;
    if (mode == CostMode::L2) {
        const double n = l2_norm(mesh, u);
        control_sq = n * n;
    } else {
        control_sq = energy_sq(problem.kappa, mesh, solve_state(problem.kappa, mesh, u));
    }
    return misfit_term(mesh, y, problem.target) + 0.5 * problem.nu * control_sq;
}

double cost(const Problem2D& problem, const Mesh2D& mesh, const GridFunction2D& y,
            const GridFunction2D& u, CostMode mode) {
    problem.validate(mesh);
    if (y.rows() != mesh.n_nodes() || u.rows() != mesh.n_nodes())
        throw std::invalid_argument("cost: fields not sampled on this grid");
    double control_sq;
    if (mode == CostMode::L2) {
        const double n = l2_norm(mesh, u);
        control_sq = n * n;
    } else {
        control_sq = energy_sq(problem.kappa, mesh, solve_state(problem.kappa, mesh, u));
    }
    return misfit_term(mesh, y, problem.target) + 0.5 * problem.nu * control_sq;
}

} // namespace ocdd
