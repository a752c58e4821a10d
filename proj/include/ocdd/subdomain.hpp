#pragma once

#include "ocdd/grid.hpp"
#include "ocdd/problem.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

namespace ocdd {

enum class BcKind { Dirichlet, Neumann };

/// Interface data for one subdomain solve. For a Dirichlet condition the
/// interface node is pinned to the data; for a Neumann condition the data
/// prescribes the subdomain's outward variational flux at the interface.
struct InterfaceBC1D {
    BcKind kind = BcKind::Dirichlet;
    double value = 0.0;
};

struct InterfaceBC2D {
    BcKind kind = BcKind::Dirichlet;
    Eigen::VectorXd values;  // interior interface nodes j = 1..N-1
};

/// Values on one subdomain's nodes, interface included. The outer physical
/// boundary entries are exact zeros.
struct SubdomainSolution1D {
    Side side = Side::Left;
    int interface_index = 0;
    Eigen::VectorXd values;  // left: nodes 0..m, right: nodes m..N

    int first_node() const { return side == Side::Left ? 0 : interface_index; }
    double at_node(int j) const { return values(j - first_node()); }
    double interface_value() const { return at_node(interface_index); }
};

struct SubdomainSolution2D {
    Side side = Side::Left;
    int interface_index = 0;
    Eigen::MatrixXd values;  // rows = local x1 nodes, cols = all x2 nodes 0..N

    int first_col() const { return side == Side::Left ? 0 : interface_index; }
    double at_node(int i, int j) const { return values(i - first_col(), j); }
    Eigen::VectorXd interface_values() const {
        const int n = static_cast<int>(values.cols()) - 2;
        return values.row(interface_index - first_col()).segment(1, n).transpose();
    }
};

/// Solves -nu div(kappa grad e) + e = rhs on one subdomain with zero data on
/// the physical boundary and the given interface condition. The Neumann
/// condition is imposed through the interface half-row: the monolithic
/// stencil row at the interface node split into this subdomain's share (its
/// own flux term, half the tangential and reaction terms, half the load), so
/// the fixed point of the interface iterations reproduces the monolithic
/// discrete solution exactly. rhs is given on the full grid; only the
/// subdomain's portion is read.
SubdomainSolution1D solve_subdomain(const Problem1D& problem, const Mesh1D& mesh,
                                    const Decomposition& dec, Side side,
                                    const InterfaceBC1D& bc, const GridFunction1D& rhs);

SubdomainSolution2D solve_subdomain(const Problem2D& problem, const Mesh2D& mesh,
                                    const Decomposition& dec, Side side,
                                    const InterfaceBC2D& bc, const GridFunction2D& rhs);

/// Outward variational flux at the interface: the subdomain's half-row
/// residual, a second-order discretization of nu kappa d(e)/dn. The left and
/// right values sum to the monolithic interface residual, so they cancel
/// exactly on the monolithic solution.
double variational_flux(const Problem1D& problem, const Mesh1D& mesh, const Decomposition& dec,
                        const SubdomainSolution1D& sol, const GridFunction1D& rhs);

Eigen::VectorXd variational_flux(const Problem2D& problem, const Mesh2D& mesh,
                                 const Decomposition& dec, const SubdomainSolution2D& sol,
                                 const GridFunction2D& rhs);

/// Factorizes one 2D subdomain operator once and solves it repeatedly with
/// fresh interface data; what the interface iterations use internally.
class SubdomainSolver2D {
public:
    SubdomainSolver2D(const Problem2D& problem, const Mesh2D& mesh, const Decomposition& dec,
                      Side side, BcKind kind);

    SubdomainSolution2D solve(const Eigen::VectorXd& data, const GridFunction2D& rhs) const;

private:
    const Problem2D& problem_;
    Mesh2D mesh_;
    Decomposition dec_;
    Side side_;
    BcKind kind_;
    int first_unknown_col_ = 0, last_unknown_col_ = 0;
    Eigen::SparseMatrix<double> matrix_;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;

    Eigen::VectorXd assemble_rhs(const Eigen::VectorXd& data, const GridFunction2D& rhs) const;
};

} // namespace ocdd
