#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace ocdd {

/// Nodal grid function on the unit interval: values at nodes x_j = j*h,
/// j = 0..N. Fields with Dirichlet conditions carry exact zeros at the ends.
using GridFunction1D = Eigen::VectorXd;

/// Nodal grid function on the unit square: entry (i,j) is the value at
/// (i*h, j*h). Dirichlet fields are zero on all four boundary lines.
using GridFunction2D = Eigen::MatrixXd;

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// Uniform mesh of [0,1] with N cells, h = 1/N.
struct Mesh1D {
    int n_cells = 0;

    double h() const { return 1.0 / n_cells; }
    int n_nodes() const { return n_cells + 1; }
    double node(int j) const { return static_cast<double>(j) / n_cells; }

    void validate() const {
        if (n_cells < 4)
            throw std::invalid_argument("Mesh1D: need at least 4 cells, got " +
                                        std::to_string(n_cells));
    }
};

/// Uniform tensor mesh of [0,1]^2 with N cells per direction and homogeneous
/// Dirichlet boundary on all four sides.
struct Mesh2D {
    int n_cells = 0;

    double h() const { return 1.0 / n_cells; }
    int n_nodes() const { return n_cells + 1; }
    double node(int j) const { return static_cast<double>(j) / n_cells; }

    void validate() const {
        if (n_cells < 4)
            throw std::invalid_argument("Mesh2D: need at least 4 cells per direction, got " +
                                        std::to_string(n_cells));
    }
};

/// Two-subdomain split at the grid node x = m*h (1D) or the grid column
/// x1 = m*h (2D). Keeping the interface on a node makes alignment structural.
struct Decomposition {
    int interface_index = 0;

    double alpha(int n_cells) const { return static_cast<double>(interface_index) / n_cells; }

    void validate(int n_cells) const {
        if (interface_index < 2 || interface_index > n_cells - 2)
            throw std::invalid_argument(
                "Decomposition: interface index m must satisfy 2 <= m <= N-2 "
                "(each subdomain needs at least 2 cells); got m = " +
                std::to_string(interface_index) + ", N = " + std::to_string(n_cells));
    }
};

} // namespace ocdd
