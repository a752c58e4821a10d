#include "ocdd/subdomain.hpp"

#include "ocdd/model.hpp"
#include "ocdd/tridiag.hpp"

#include <stdexcept>
#include <vector>

namespace ocdd {

namespace {

double kappa_edge_x(const Eigen::MatrixXd& kappa, int i, int j) {
    return edge_kappa(kappa(i, j - 1), kappa(i, j));
}

double kappa_edge_y(const Eigen::MatrixXd& kappa, int i, int j) {
    return edge_kappa(kappa(i - 1, j), kappa(i, j));
}

void check_interface_data(const InterfaceBC1D& bc) {
    if (!std::isfinite(bc.value))
        throw std::invalid_argument("interface condition carries non-finite data");
}

void check_interface_data(const InterfaceBC2D& bc, int n_cells) {
    if (bc.values.size() != n_cells - 1)
        throw std::invalid_argument("interface condition needs one value per interior interface node");
    if (!bc.values.allFinite())
        throw std::invalid_argument("interface condition carries non-finite data");
}

} // namespace

SubdomainSolution1D solve_subdomain(const Problem1D& problem, const Mesh1D& mesh,
                                    const Decomposition& dec, Side side,
                                    const InterfaceBC1D& bc, const GridFunction1D& rhs) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);
    check_interface_data(bc);
    if (rhs.size() != mesh.n_nodes())
        throw std::invalid_argument("solve_subdomain: rhs not sampled on this grid");

    const int m = dec.interface_index;
    const int N = mesh.n_cells;
    const double h = mesh.h();
    const double h2 = h * h;
    const double nu = problem.nu;
    const auto& kap = problem.kappa;

    SubdomainSolution1D sol;
    sol.side = side;
    sol.interface_index = m;

    // Unknown node range; Dirichlet pins the interface node, Neumann keeps it.
    const int lo = side == Side::Left ? 1 : (bc.kind == BcKind::Dirichlet ? m + 1 : m);
    const int hi = side == Side::Left ? (bc.kind == BcKind::Dirichlet ? m - 1 : m) : N - 1;
    const int n = hi - lo + 1;

    Eigen::VectorXd diag(n), lower(n - 1), upper(n - 1), b(n);
    for (int j = lo; j <= hi; ++j) {
        const int r = j - lo;
        diag(r) = nu * (kap(j - 1) + kap(j)) + h2;
        b(r) = h2 * rhs(j);
        if (j > lo) lower(r - 1) = -nu * kap(j - 1);
        if (j < hi) upper(r) = -nu * kap(j);
    }
    if (bc.kind == BcKind::Dirichlet) {
        if (side == Side::Left)
            b(n - 1) += nu * kap(m - 1) * bc.value;
        else
            b(0) += nu * kap(m) * bc.value;
    } else {
        // Interface half-row, scaled by h: own flux term, half reaction, half load.
        const int r = side == Side::Left ? n - 1 : 0;
        diag(r) = (side == Side::Left ? nu * kap(m - 1) : nu * kap(m)) + 0.5 * h2;
        b(r) = h * bc.value + 0.5 * h2 * rhs(m);
    }

    const Eigen::VectorXd x = solve_tridiagonal<double>(lower, diag, upper, b);

    if (side == Side::Left) {
        sol.values = Eigen::VectorXd::Zero(m + 1);
        sol.values.segment(lo, n) = x;
        if (bc.kind == BcKind::Dirichlet) sol.values(m) = bc.value;
    } else {
        sol.values = Eigen::VectorXd::Zero(N - m + 1);
        sol.values.segment(lo - m, n) = x;
        if (bc.kind == BcKind::Dirichlet) sol.values(0) = bc.value;
    }
    return sol;
}

double variational_flux(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                        const SubdomainSolution1D& sol, const GridFunction1D& rhs) {
    if (sol.interface_index != dec.interface_index)
        throw std::invalid_argument("variational_flux: solution belongs to another decomposition");
    if (rhs.size() != mesh.n_nodes())
        throw std::invalid_argument("variational_flux: rhs not sampled on this grid");
    const int m = dec.interface_index;
    const double h = mesh.h();
    const double nu = problem.nu;
    const double vm = sol.interface_value();
    const double reaction = 0.5 * h * (vm - rhs(m));
    if (sol.side == Side::Left)
        return nu * problem.kappa(m - 1) * (vm - sol.at_node(m - 1)) / h + reaction;
    return nu * problem.kappa(m) * (vm - sol.at_node(m + 1)) / h + reaction;
}

// --- 2D ------------------------------------------------------------------

SubdomainSolver2D::SubdomainSolver2D(const Problem2D& problem, const Mesh2D& mesh,
                                     const Decomposition& dec, Side side, BcKind kind)
    : problem_(problem), mesh_(mesh), dec_(dec), side_(side), kind_(kind) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);

    const int m = dec.interface_index;
    const int N = mesh.n_cells;
    const double h2 = mesh.h() * mesh.h();
    const double nu = problem.nu;
    const auto& kap = problem.kappa;

    first_unknown_col_ = side == Side::Left ? 1 : (kind == BcKind::Dirichlet ? m + 1 : m);
    last_unknown_col_ = side == Side::Left ? (kind == BcKind::Dirichlet ? m - 1 : m) : N - 1;

    const int ncols = last_unknown_col_ - first_unknown_col_ + 1;
    const int nj = N - 1;
    const auto idx = [&](int i, int j) { return (i - first_unknown_col_) * nj + (j - 1); };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(5) * ncols * nj);
    for (int i = first_unknown_col_; i <= last_unknown_col_; ++i) {
        const bool half_row = kind == BcKind::Neumann && i == m;
        for (int j = 1; j < N; ++j) {
            const double ks = kappa_edge_y(kap, i, j - 1);
            const double kn = kappa_edge_y(kap, i, j);
            if (half_row) {
                // Interface half-row, scaled by h: own x1 flux term, half the
                // tangential terms, half the reaction.
                const double kx = side == Side::Left ? kappa_edge_x(kap, m - 1, j)
                                                     : kappa_edge_x(kap, m, j);
                trip.emplace_back(idx(i, j), idx(i, j),
                                  nu * (kx + 0.5 * (ks + kn)) + 0.5 * h2);
                const int inner = side == Side::Left ? m - 1 : m + 1;
                if (inner >= first_unknown_col_ && inner <= last_unknown_col_)
                    trip.emplace_back(idx(i, j), idx(inner, j), -nu * kx);
                if (j > 1) trip.emplace_back(idx(i, j), idx(i, j - 1), -0.5 * nu * ks);
                if (j < N - 1) trip.emplace_back(idx(i, j), idx(i, j + 1), -0.5 * nu * kn);
            } else {
                const double kw = kappa_edge_x(kap, i - 1, j);
                const double ke = kappa_edge_x(kap, i, j);
                trip.emplace_back(idx(i, j), idx(i, j), nu * (kw + ke + ks + kn) + h2);
                if (i - 1 >= first_unknown_col_)
                    trip.emplace_back(idx(i, j), idx(i - 1, j), -nu * kw);
                if (i + 1 <= last_unknown_col_)
                    trip.emplace_back(idx(i, j), idx(i + 1, j), -nu * ke);
                if (j > 1) trip.emplace_back(idx(i, j), idx(i, j - 1), -nu * ks);
                if (j < N - 1) trip.emplace_back(idx(i, j), idx(i, j + 1), -nu * kn);
            }
        }
    }
    matrix_.resize(ncols * nj, ncols * nj);
    matrix_.setFromTriplets(trip.begin(), trip.end());
    ldlt_.compute(matrix_);
    if (ldlt_.info() != Eigen::Success)
        throw std::runtime_error("sparse factorization failed on a subdomain operator");
}

Eigen::VectorXd SubdomainSolver2D::assemble_rhs(const Eigen::VectorXd& data,
                                                const GridFunction2D& rhs) const {
    const int m = dec_.interface_index;
    const int N = mesh_.n_cells;
    const double h = mesh_.h();
    const double h2 = h * h;
    const double nu = problem_.nu;
    const auto& kap = problem_.kappa;
    const int nj = N - 1;
    const auto idx = [&](int i, int j) { return (i - first_unknown_col_) * nj + (j - 1); };

    Eigen::VectorXd b(static_cast<Eigen::Index>(last_unknown_col_ - first_unknown_col_ + 1) * nj);
    for (int i = first_unknown_col_; i <= last_unknown_col_; ++i) {
        const bool half_row = kind_ == BcKind::Neumann && i == m;
        for (int j = 1; j < N; ++j) {
            if (half_row)
                b(idx(i, j)) = h * data(j - 1) + 0.5 * h2 * rhs(m, j);
            else
                b(idx(i, j)) = h2 * rhs(i, j);
        }
    }
    if (kind_ == BcKind::Dirichlet) {
        // Pinned interface column feeds the adjacent unknown column.
        const int adj = side_ == Side::Left ? m - 1 : m + 1;
        const int edge_col = side_ == Side::Left ? m - 1 : m;
        for (int j = 1; j < N; ++j)
            b(idx(adj, j)) += nu * kappa_edge_x(kap, edge_col, j) * data(j - 1);
    }
    return b;
}

SubdomainSolution2D SubdomainSolver2D::solve(const Eigen::VectorXd& data,
                                             const GridFunction2D& rhs) const {
    if (data.size() != mesh_.n_cells - 1)
        throw std::invalid_argument("subdomain solve: interface data has wrong length");
    if (!data.allFinite())
        throw std::invalid_argument("subdomain solve: interface data is non-finite");
    if (rhs.rows() != mesh_.n_nodes() || rhs.cols() != mesh_.n_nodes())
        throw std::invalid_argument("subdomain solve: rhs not sampled on this grid");

    const Eigen::VectorXd b = assemble_rhs(data, rhs);
    Eigen::VectorXd x = ldlt_.solve(b);
    x += ldlt_.solve(b - matrix_ * x);

    const int m = dec_.interface_index;
    const int N = mesh_.n_cells;
    const int nj = N - 1;

    SubdomainSolution2D sol;
    sol.side = side_;
    sol.interface_index = m;
    const int first_col = side_ == Side::Left ? 0 : m;
    const int last_col = side_ == Side::Left ? m : N;
    sol.values = Eigen::MatrixXd::Zero(last_col - first_col + 1, N + 1);
    for (int i = first_unknown_col_; i <= last_unknown_col_; ++i)
        for (int j = 1; j < N; ++j)
            sol.values(i - first_col, j) = x((i - first_unknown_col_) * nj + (j - 1));
    if (kind_ == BcKind::Dirichlet)
        for (int j = 1; j < N; ++j) sol.values(m - first_col, j) = data(j - 1);
    return sol;
}

SubdomainSolution2D solve_subdomain(const Problem2D& problem, const Mesh2D& mesh,
                                    const Decomposition& dec, Side side,
                                    const InterfaceBC2D& bc, const GridFunction2D& rhs) {
    check_interface_data(bc, mesh.n_cells);
    return SubdomainSolver2D(problem, mesh, dec, side, bc.kind).solve(bc.values, rhs);
}

Eigen::VectorXd variational_flux(const Problem2D& problem, const Mesh2D& mesh,
                                 const Decomposition& dec, const SubdomainSolution2D& sol,
                                 const GridFunction2D& rhs) {
    if (sol.interface_index != dec.interface_index)
        throw std::invalid_argument("variational_flux: solution belongs to another decomposition");
    if (rhs.rows() != mesh.n_nodes() || rhs.cols() != mesh.n_nodes())
        throw std::invalid_argument("variational_flux: rhs not sampled on this grid");

    const int m = dec.interface_index;
    const int N = mesh.n_cells;
    const double h = mesh.h();
    const double nu = problem.nu;
    const auto& kap = problem.kappa;

    Eigen::VectorXd flux(N - 1);
    for (int j = 1; j < N; ++j) {
        const double vm = sol.at_node(m, j);
        const double inner = sol.side == Side::Left ? sol.at_node(m - 1, j) : sol.at_node(m + 1, j);
        const double kx =
            sol.side == Side::Left ? kappa_edge_x(kap, m - 1, j) : kappa_edge_x(kap, m, j);
        const double tangential =
            0.5 * nu *
            (kappa_edge_y(kap, m, j - 1) * (vm - sol.at_node(m, j - 1)) +
             kappa_edge_y(kap, m, j) * (vm - sol.at_node(m, j + 1))) /
            h;
        flux(j - 1) = nu * kx * (vm - inner) / h + tangential + 0.5 * h * (vm - rhs(m, j));
    }
    return flux;
}

} // namespace ocdd
