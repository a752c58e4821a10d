#pragma once

#include <Eigen/Dense>

#include <cassert>

namespace ocdd {

/// Thomas elimination for a tridiagonal system. No pivoting; callers assemble
/// strictly diagonally dominant SPD rows, for which the sweep is stable.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> solve_tridiagonal(
    Eigen::Vector<Scalar, Eigen::Dynamic> lower,   // size n-1, row i couples to i-1
    Eigen::Vector<Scalar, Eigen::Dynamic> diag,    // size n
    const Eigen::Vector<Scalar, Eigen::Dynamic>& upper,  // size n-1
    Eigen::Vector<Scalar, Eigen::Dynamic> rhs) {
    const Eigen::Index n = diag.size();
    assert(lower.size() == n - 1 && upper.size() == n - 1 && rhs.size() == n);

    for (Eigen::Index i = 1; i < n; ++i) {
        const Scalar w = lower(i - 1) / diag(i - 1);
        diag(i) -= w * upper(i - 1);
        rhs(i) -= w * rhs(i - 1);
    }
    Eigen::Vector<Scalar, Eigen::Dynamic> x(n);
    x(n - 1) = rhs(n - 1) / diag(n - 1);
    for (Eigen::Index i = n - 2; i >= 0; --i) x(i) = (rhs(i) - upper(i) * x(i + 1)) / diag(i);
    return x;
}

} // namespace ocdd
