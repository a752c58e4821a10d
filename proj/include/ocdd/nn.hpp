#pragma once

#include "ocdd/iteration.hpp"
#include "ocdd/subdomain.hpp"

namespace ocdd {

/// One Neumann-Neumann sweep: Dirichlet solves on both subdomains from the
/// common trace, flux jump r = sum of the two outward variational fluxes,
/// Neumann correction solves on both sides driven by r (zero volume forcing:
/// the corrections answer the interface residual alone), then
/// trace := trace - theta * (psi_left(interface) + psi_right(interface)).
struct NnStep1D {
    double trace = 0.0;
    double flux_jump = 0.0;
    SubdomainSolution1D e_left, e_right;      // Dirichlet solves
    SubdomainSolution1D psi_left, psi_right;  // correction solves
};

NnStep1D nn_step(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                 double trace, const IterationConfig& config, const GridFunction1D& rhs);

struct NnStep2D {
    Eigen::VectorXd trace;
    Eigen::VectorXd flux_jump;
    SubdomainSolution2D e_left, e_right;
    SubdomainSolution2D psi_left, psi_right;
};

NnStep2D nn_step_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                    const Eigen::VectorXd& trace, const IterationConfig& config,
                    const GridFunction2D& rhs);

IterationReport run_nn(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                       const IterationConfig& config, const GridFunction1D& rhs,
                       double trace0 = 1.0, GridFunction1D* final_field = nullptr);

IterationReport run_nn_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                          const IterationConfig& config, const GridFunction2D& rhs,
                          const Eigen::VectorXd& trace0, GridFunction2D* final_field = nullptr);

} // namespace ocdd
