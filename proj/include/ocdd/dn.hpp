#pragma once

#include "ocdd/iteration.hpp"
#include "ocdd/subdomain.hpp"

namespace ocdd {

/// One relaxed Dirichlet-Neumann sweep: Dirichlet solve on the left
/// subdomain with the current trace, Neumann solve on the right fed the
/// left's variational flux, then trace := (1-theta) trace + theta * (right
/// interface value). config.swap_roles mirrors the roles, which matters
/// because the method is not symmetric in the interface position.
struct DnStep1D {
    double trace = 0.0;
    SubdomainSolution1D dirichlet_side;
    SubdomainSolution1D neumann_side;
};

DnStep1D dn_step(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                 double trace, const IterationConfig& config, const GridFunction1D& rhs);

struct DnStep2D {
    Eigen::VectorXd trace;
    SubdomainSolution2D dirichlet_side;
    SubdomainSolution2D neumann_side;
};

DnStep2D dn_step_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                    const Eigen::VectorXd& trace, const IterationConfig& config,
                    const GridFunction2D& rhs);

/// Runs the DN iteration to the stopping rule. Errors are measured against
/// the monolithic solve of the same problem, so a zero-target run reports
/// the interface error itself. When final_field is given it receives the
/// last assembled iterate (both subdomains glued at the updated trace).
IterationReport run_dn(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                       const IterationConfig& config, const GridFunction1D& rhs,
                       double trace0 = 1.0, GridFunction1D* final_field = nullptr);

IterationReport run_dn_2d(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                          const IterationConfig& config, const GridFunction2D& rhs,
                          const Eigen::VectorXd& trace0, GridFunction2D* final_field = nullptr);

/// Sine-mode initializer sin(k pi x2) at the interior interface nodes; the
/// discrete modes are eigenvectors of the tangential operator, so a mode-k
/// run contracts at the mode-k factor. k = 0 falls back to the constant
/// vector (the zero-frequency end of the factor formulas; its literal sine
/// vanishes identically).
Eigen::VectorXd interface_mode(const Mesh2D& mesh, int k);

} // namespace ocdd
