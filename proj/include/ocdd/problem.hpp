#pragma once

#include "ocdd/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ocdd {

/// The continuous control problem data: regularization weight nu, cell-wise
/// conductivity kappa (> 0, default 1), and the target state sampled at the
/// grid nodes. The target is taken as given; it need not vanish on the
/// boundary even though the state does.
struct Problem1D {
    double nu = 1.0;
    Eigen::VectorXd kappa;  // one value per cell, size N
    GridFunction1D target;  // nodal samples, size N+1

    void validate(const Mesh1D& mesh) const;
};

struct Problem2D {
    double nu = 1.0;
    Eigen::MatrixXd kappa;  // N x N cells, (i,j) = cell with lower-left node (i*h, j*h)
    GridFunction2D target;  // (N+1) x (N+1) nodal samples

    void validate(const Mesh2D& mesh) const;
};

inline void Problem1D::validate(const Mesh1D& mesh) const {
    mesh.validate();
    if (!(nu > 0.0)) throw std::invalid_argument("Problem: nu must be positive");
    if (kappa.size() != mesh.n_cells)
        throw std::invalid_argument("Problem: kappa must hold one value per cell");
    if ((kappa.array() <= 0.0).any())
        throw std::invalid_argument("Problem: kappa must be positive in every cell");
    if (target.size() != mesh.n_nodes())
        throw std::invalid_argument("Problem: target must be sampled at every node");
    if (!target.allFinite())
        throw std::invalid_argument("Problem: target contains non-finite samples");
}

inline void Problem2D::validate(const Mesh2D& mesh) const {
    mesh.validate();
    if (!(nu > 0.0)) throw std::invalid_argument("Problem: nu must be positive");
    if (kappa.rows() != mesh.n_cells || kappa.cols() != mesh.n_cells)
        throw std::invalid_argument("Problem: kappa must hold one value per cell");
    if ((kappa.array() <= 0.0).any())
        throw std::invalid_argument("Problem: kappa must be positive in every cell");
    if (target.rows() != mesh.n_nodes() || target.cols() != mesh.n_nodes())
        throw std::invalid_argument("Problem: target must be sampled at every node");
    if (!target.allFinite())
        throw std::invalid_argument("Problem: target contains non-finite samples");
}

/// Built-in target families: "zero", "bump" = x(1-x), "sine" = sin(pi x);
/// the 2D variants are the tensor products.
inline GridFunction1D make_target(const Mesh1D& mesh, std::string_view name) {
    GridFunction1D t(mesh.n_nodes());
    for (int j = 0; j < mesh.n_nodes(); ++j) {
        const double x = mesh.node(j);
        if (name == "zero")
            t(j) = 0.0;
        else if (name == "bump")
            t(j) = x * (1.0 - x);
        else if (name == "sine")
            t(j) = std::sin(M_PI * x);
        else
            throw std::invalid_argument("unknown target family: " + std::string(name));
    }
    return t;
}

inline GridFunction2D make_target(const Mesh2D& mesh, std::string_view name) {
    GridFunction2D t(mesh.n_nodes(), mesh.n_nodes());
    for (int i = 0; i < mesh.n_nodes(); ++i)
        for (int j = 0; j < mesh.n_nodes(); ++j) {
            const double x1 = mesh.node(i), x2 = mesh.node(j);
            if (name == "zero")
                t(i, j) = 0.0;
            else if (name == "bump")
                t(i, j) = x1 * (1.0 - x1) * x2 * (1.0 - x2);
            else if (name == "sine")
                t(i, j) = std::sin(M_PI * x1) * std::sin(M_PI * x2);
            else
                throw std::invalid_argument("unknown target family: " + std::string(name));
        }
    return t;
}

inline Eigen::VectorXd uniform_kappa(const Mesh1D& mesh, double value = 1.0) {
    return Eigen::VectorXd::Constant(mesh.n_cells, value);
}

inline Eigen::MatrixXd uniform_kappa(const Mesh2D& mesh, double value = 1.0) {
    return Eigen::MatrixXd::Constant(mesh.n_cells, mesh.n_cells, value);
}

inline Problem1D make_problem(const Mesh1D& mesh, double nu, std::string_view target_name) {
    Problem1D p{nu, uniform_kappa(mesh), make_target(mesh, target_name)};
    p.validate(mesh);
    return p;
}

inline Problem2D make_problem(const Mesh2D& mesh, double nu, std::string_view target_name) {
    Problem2D p{nu, uniform_kappa(mesh), make_target(mesh, target_name)};
    p.validate(mesh);
    return p;
}

} // namespace ocdd
