#include "ocdd/dn.hpp"

#include "ocdd/model.hpp"

#include <cmath>
#include <utility>

namespace ocdd {

namespace {

GridFunction1D assemble_field(const Mesh1D& mesh, const Decomposition& dec,
                              const SubdomainSolution1D& left, const SubdomainSolution1D& right,
                              double interface_value) {
    GridFunction1D f(mesh.n_nodes());
    const int m = dec.interface_index;
    for (int j = 0; j < m; ++j) f(j) = left.at_node(j);
    f(m) = interface_value;
    for (int j = m + 1; j < mesh.n_nodes(); ++j) f(j) = right.at_node(j);
    return f;
}

GridFunction2D assemble_field(const Mesh2D& mesh, const Decomposition& dec,
                              const SubdomainSolution2D& left, const SubdomainSolution2D& right,
                              const Eigen::VectorXd& interface_values) {
    GridFunction2D f = GridFunction2D::Zero(mesh.n_nodes(), mesh.n_nodes());
    const int m = dec.interface_index;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j) f(i, j) = left.at_node(i, j);
    for (int j = 1; j < mesh.n_cells; ++j) f(m, j) = interface_values(j - 1);
    for (int i = m + 1; i < mesh.n_nodes(); ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j) f(i, j) = right.at_node(i, j);
    return f;
}

} // namespace

DnStep1D dn_step(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                 double trace, const IterationConfig& config, const GridFunction1D& rhs) {
    if (!std::isfinite(trace)) throw std::invalid_argument("dn_step: trace is non-finite");
    const Side d_side = config.swap_roles ? Side::Right : Side::Left;

    DnStep1D step;
    step.dirichlet_side =
        solve_subdomain(problem, mesh, dec, d_side, {BcKind::Dirichlet, trace}, rhs);
    const double flux = variational_flux(problem, mesh, dec, step.dirichlet_side, rhs);
    // Flux continuity: the Neumann side's outward flux must cancel the
    // Dirichlet side's.
    step.neumann_side =
        solve_subdomain(problem, mesh, dec, opposite(d_side), {BcKind::Neumann, -flux}, rhs);
    step.trace = (1.0 - config.theta) * trace + config.theta * step.neumann_side.interface_value();
    return step;
}

IterationReport run_dn(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                       const IterationConfig& config, const GridFunction1D& rhs, double trace0,
                       GridFunction1D* final_field) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);
    const GridFunction1D reference = solve_monolithic_h1(problem, mesh);
    const double ref_trace = reference(dec.interface_index);

    double last_trace = trace0;
    auto step_fn = [&](double trace) {
        DnStep1D s = dn_step(problem, mesh, dec, trace, config, rhs);
        const SubdomainSolution1D& left =
            config.swap_roles ? s.neumann_side : s.dirichlet_side;
        const SubdomainSolution1D& right =
            config.swap_roles ? s.dirichlet_side : s.neumann_side;
        const double sub_err =
            l2_norm(mesh, assemble_field(mesh, dec, left, right, s.trace) - reference);
        last_trace = s.trace;
        return std::pair<double, double>(s.trace, sub_err);
    };
    auto err_fn = [&](double trace) { return std::abs(trace - ref_trace); };
    IterationReport report = detail::run_interface_iteration(trace0, config, step_fn, err_fn);
    if (final_field) {
        // One more sweep at the final trace, so the returned field is in step
        // with the reported interface error rather than one update behind.
        const DnStep1D s = dn_step(problem, mesh, dec, last_trace, config, rhs);
        const SubdomainSolution1D& left = config.swap_roles ? s.neumann_side : s.dirichlet_side;
        const SubdomainSolution1D& right = config.swap_roles ? s.dirichlet_side : s.neumann_side;
        *final_field = assemble_field(mesh, dec, left, right, last_trace);
    }
    return report;
}

DnStep2D dn_step_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                    const Eigen::VectorXd& trace, const IterationConfig& config,
                    const GridFunction2D& rhs) {
    const Side d_side = config.swap_roles ? Side::Right : Side::Left;

    DnStep2D step;
    step.dirichlet_side =
        solve_subdomain(problem, mesh, dec, d_side, {BcKind::Dirichlet, trace}, rhs);
    const Eigen::VectorXd flux = variational_flux(problem, mesh, dec, step.dirichlet_side, rhs);
    step.neumann_side =
        solve_subdomain(problem, mesh, dec, opposite(d_side), {BcKind::Neumann, -flux}, rhs);
    step.trace = (1.0 - config.theta) * trace +
                 config.theta * step.neumann_side.interface_values();
    return step;
}

IterationReport run_dn_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                          const IterationConfig& config, const GridFunction2D& rhs,
                          const Eigen::VectorXd& trace0, GridFunction2D* final_field) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);
    if (trace0.size() != mesh.n_cells - 1)
        throw std::invalid_argument("run_dn_2d: trace0 needs one value per interior interface node");

    const GridFunction2D reference = solve_monolithic_h1(problem, mesh);
    const Eigen::VectorXd ref_trace =
        reference.row(dec.interface_index).segment(1, mesh.n_cells - 1).transpose();

    const Side d_side = config.swap_roles ? Side::Right : Side::Left;
    const SubdomainSolver2D dirichlet_solver(problem, mesh, dec, d_side, BcKind::Dirichlet);
    const SubdomainSolver2D neumann_solver(problem, mesh, dec, opposite(d_side), BcKind::Neumann);

    Eigen::VectorXd last_trace = trace0;
    auto step_fn = [&](const Eigen::VectorXd& trace) {
        SubdomainSolution2D d_sol = dirichlet_solver.solve(trace, rhs);
        const Eigen::VectorXd flux = variational_flux(problem, mesh, dec, d_sol, rhs);
        SubdomainSolution2D n_sol = neumann_solver.solve(-flux, rhs);
        Eigen::VectorXd next =
            (1.0 - config.theta) * trace + config.theta * n_sol.interface_values();
        const SubdomainSolution2D& left = config.swap_roles ? n_sol : d_sol;
        const SubdomainSolution2D& right = config.swap_roles ? d_sol : n_sol;
        const double sub_err =
            l2_norm(mesh, assemble_field(mesh, dec, left, right, next) - reference);
        last_trace = next;
        return std::pair<Eigen::VectorXd, double>(std::move(next), sub_err);
    };
    auto err_fn = [&](const Eigen::VectorXd& trace) {
        return (trace - ref_trace).cwiseAbs().maxCoeff();
    };
    IterationReport report = detail::run_interface_iteration(trace0, config, step_fn, err_fn);
    if (final_field) {
        // Re-solve at the final trace so the field matches the reported error.
        SubdomainSolution2D d_sol = dirichlet_solver.solve(last_trace, rhs);
        const Eigen::VectorXd flux = variational_flux(problem, mesh, dec, d_sol, rhs);
        SubdomainSolution2D n_sol = neumann_solver.solve(-flux, rhs);
        const SubdomainSolution2D& left = config.swap_roles ? n_sol : d_sol;
        const SubdomainSolution2D& right = config.swap_roles ? d_sol : n_sol;
        *final_field = assemble_field(mesh, dec, left, right, last_trace);
    }
    return report;
}

Eigen::VectorXd interface_mode(const Mesh2D& mesh, int k) {
    if (k < 0) throw std::invalid_argument("interface_mode: k must be nonnegative");
    const int n = mesh.n_cells - 1;
    Eigen::VectorXd v(n);
    if (k == 0) return Eigen::VectorXd::Ones(n);
    for (int j = 1; j <= n; ++j) v(j - 1) = std::sin(k * M_PI * mesh.node(j));
    return v;
}

} // namespace ocdd
