#pragma once

#include "ocdd/grid.hpp"
#include "ocdd/problem.hpp"

namespace ocdd {

enum class CostMode { L2, Hminus1 };

/// Direct solve of the reduced optimality equation
///   -nu div(kappa grad y) + y = target,  y = 0 on the boundary,
/// by second-order central differences (tridiagonal elimination in 1D,
/// sparse Cholesky on the five-point system in 2D). The returned field has
/// relative discrete residual below 1e-12.
GridFunction1D solve_monolithic_h1(const Problem1D& problem, const Mesh1D& mesh);
GridFunction2D solve_monolithic_h1(const Problem2D& problem, const Mesh2D& mesh);

struct KktSolution1D {
    GridFunction1D y;  // state
    GridFunction1D p;  // adjoint
    GridFunction1D u;  // control, u = -p/nu
};

/// Direct solve of the coupled first-order system under L2 regularization:
///   -div(kappa grad y) = u,  -div(kappa grad p) = y - target,  p + nu u = 0,
/// eliminating u and solving the 2(N-1)-unknown block system. 1D only.
KktSolution1D solve_monolithic_l2_kkt(const Problem1D& problem, const Mesh1D& mesh);

/// Control recovery under the energy-norm regularization: u = (target - y)/nu.
GridFunction1D recover_control_h1(const Problem1D& problem, const Mesh1D& mesh,
                                  const GridFunction1D& y);
GridFunction2D recover_control_h1(const Problem2D& problem, const Mesh2D& mesh,
                                  const GridFunction2D& y);

/// Cost 1/2 ||y - target||^2 + nu/2 ||u||^2. In L2 mode the control norm is
/// the composite-trapezoid L2 norm; in Hminus1 mode it is the energy norm
/// sqrt(integral kappa |grad w|^2) of the state w driven by u.
double cost(const Problem1D& problem, const Mesh1D& mesh, const GridFunction1D& y,
            const GridFunction1D& u, CostMode mode);
double cost(const Problem2D& problem, const Mesh2D& mesh, const GridFunction2D& y,
            const GridFunction2D& u, CostMode mode);

/// Solves the state equation -div(kappa grad w) = u with zero boundary data.
GridFunction1D solve_state(const Eigen::VectorXd& kappa, const Mesh1D& mesh,
                           const GridFunction1D& u);
GridFunction2D solve_state(const Eigen::MatrixXd& kappa, const Mesh2D& mesh,
                           const GridFunction2D& u);

/// Applies the discrete -div(kappa grad .) to a nodal field; interior rows
/// only, zero in the boundary entries of the result.
GridFunction1D apply_diffusion(const Eigen::VectorXd& kappa, const Mesh1D& mesh,
                               const GridFunction1D& v);
GridFunction2D apply_diffusion(const Eigen::MatrixXd& kappa, const Mesh2D& mesh,
                               const GridFunction2D& v);

/// Composite-trapezoid L2 norm of a nodal field.
double l2_norm(const Mesh1D& mesh, const GridFunction1D& v);
double l2_norm(const Mesh2D& mesh, const GridFunction2D& v);

/// Conductivity on the edge between two cells (harmonic mean); what the
/// five-point flux terms use where an edge borders two cells.
inline double edge_kappa(double ka, double kb) { return 2.0 * ka * kb / (ka + kb); }

} // namespace ocdd
