#include "ocdd/nn.hpp"

#include "ocdd/model.hpp"

#include <cmath>
#include <utility>

namespace ocdd {

namespace {

GridFunction1D zero_forcing(const Mesh1D& mesh) { return GridFunction1D::Zero(mesh.n_nodes()); }

GridFunction2D zero_forcing(const Mesh2D& mesh) {
    return GridFunction2D::Zero(mesh.n_nodes(), mesh.n_nodes());
}

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

NnStep1D nn_step(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                 double trace, const IterationConfig& config, const GridFunction1D& rhs) {
    if (!std::isfinite(trace)) throw std::invalid_argument("nn_step: trace is non-finite");

    NnStep1D step;
    step.e_left = solve_subdomain(problem, mesh, dec, Side::Left, {BcKind::Dirichlet, trace}, rhs);
    step.e_right =
        solve_subdomain(problem, mesh, dec, Side::Right, {BcKind::Dirichlet, trace}, rhs);
    step.flux_jump = variational_flux(problem, mesh, dec, step.e_left, rhs) +
                     variational_flux(problem, mesh, dec, step.e_right, rhs);

    const GridFunction1D zero = zero_forcing(mesh);
    step.psi_left =
        solve_subdomain(problem, mesh, dec, Side::Left, {BcKind::Neumann, step.flux_jump}, zero);
    step.psi_right =
        solve_subdomain(problem, mesh, dec, Side::Right, {BcKind::Neumann, step.flux_jump}, zero);

    step.trace = trace - config.theta *
                             (step.psi_left.interface_value() + step.psi_right.interface_value());
    return step;
}

IterationReport run_nn(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                       const IterationConfig& config, const GridFunction1D& rhs, double trace0,
                       GridFunction1D* final_field) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);
    const GridFunction1D reference = solve_monolithic_h1(problem, mesh);
    const double ref_trace = reference(dec.interface_index);

    double last_trace = trace0;
    auto step_fn = [&](double trace) {
        NnStep1D s = nn_step(problem, mesh, dec, trace, config, rhs);
        const double sub_err =
            l2_norm(mesh, assemble_field(mesh, dec, s.e_left, s.e_right, s.trace) - reference);
        last_trace = s.trace;
        return std::pair<double, double>(s.trace, sub_err);
    };
    auto err_fn = [&](double trace) { return std::abs(trace - ref_trace); };
    IterationReport report = detail::run_interface_iteration(trace0, config, step_fn, err_fn);
    if (final_field) {
        // Dirichlet re-solves at the final trace keep the returned field in
        // step with the reported interface error.
        const SubdomainSolution1D left = solve_subdomain(problem, mesh, dec, Side::Left,
                                                         {BcKind::Dirichlet, last_trace}, rhs);
        const SubdomainSolution1D right = solve_subdomain(problem, mesh, dec, Side::Right,
                                                          {BcKind::Dirichlet, last_trace}, rhs);
        *final_field = assemble_field(mesh, dec, left, right, last_trace);
    }
    return report;
}

NnStep2D nn_step_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                    const Eigen::VectorXd& trace, const IterationConfig& config,
                    const GridFunction2D& rhs) {
    NnStep2D step;
    step.e_left = solve_subdomain(problem, mesh, dec, Side::Left, {BcKind::Dirichlet, trace}, rhs);
    step.e_right =
        solve_subdomain(problem, mesh, dec, Side::Right, {BcKind::Dirichlet, trace}, rhs);
    step.flux_jump = variational_flux(problem, mesh, dec, step.e_left, rhs) +
                     variational_flux(problem, mesh, dec, step.e_right, rhs);

    const GridFunction2D zero = zero_forcing(mesh);
    step.psi_left = solve_subdomain(problem, mesh, dec, Side::Left,
                                    {BcKind::Neumann, step.flux_jump}, zero);
    step.psi_right = solve_subdomain(problem, mesh, dec, Side::Right,
                                     {BcKind::Neumann, step.flux_jump}, zero);

    step.trace = trace - config.theta * (step.psi_left.interface_values() +
                                         step.psi_right.interface_values());
    return step;
}

IterationReport run_nn_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                          const IterationConfig& config, const GridFunction2D& rhs,
                          const Eigen::VectorXd& trace0, GridFunction2D* final_field) {
    problem.validate(mesh);
    dec.validate(mesh.n_cells);
    if (trace0.size() != mesh.n_cells - 1)
        throw std::invalid_argument("run_nn_2d: trace0 needs one value per interior interface node");

    const GridFunction2D reference = solve_monolithic_h1(problem, mesh);
    const Eigen::VectorXd ref_trace =
        reference.row(dec.interface_index).segment(1, mesh.n_cells - 1).transpose();

    const SubdomainSolver2D d_left(problem, mesh, dec, Side::Left, BcKind::Dirichlet);
    const SubdomainSolver2D d_right(problem, mesh, dec, Side::Right, BcKind::Dirichlet);
    const SubdomainSolver2D n_left(problem, mesh, dec, Side::Left, BcKind::Neumann);
    const SubdomainSolver2D n_right(problem, mesh, dec, Side::Right, BcKind::Neumann);
    const GridFunction2D zero = zero_forcing(mesh);

    Eigen::VectorXd last_trace = trace0;
    auto step_fn = [&](const Eigen::VectorXd& trace) {
        SubdomainSolution2D e_left = d_left.solve(trace, rhs);
        SubdomainSolution2D e_right = d_right.solve(trace, rhs);
        const Eigen::VectorXd jump = variational_flux(problem, mesh, dec, e_left, rhs) +
                                     variational_flux(problem, mesh, dec, e_right, rhs);
        SubdomainSolution2D psi_left = n_left.solve(jump, zero);
        SubdomainSolution2D psi_right = n_right.solve(jump, zero);
        Eigen::VectorXd next =
            trace - config.theta * (psi_left.interface_values() + psi_right.interface_values());
        const double sub_err =
            l2_norm(mesh, assemble_field(mesh, dec, e_left, e_right, next) - reference);
        last_trace = next;
        return std::pair<Eigen::VectorXd, double>(std::move(next), sub_err);
    };
    auto err_fn = [&](const Eigen::VectorXd& trace) {
        return (trace - ref_trace).cwiseAbs().maxCoeff();
    };
    IterationReport report = detail::run_interface_iteration(trace0, config, step_fn, err_fn);
    if (final_field) {
        const SubdomainSolution2D left = d_left.solve(last_trace, rhs);
        const SubdomainSolution2D right = d_right.solve(last_trace, rhs);
        *final_field = assemble_field(mesh, dec, left, right, last_trace);
    }
    return report;
}

} // namespace ocdd
