#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ocdd::theory {

enum class Method { DN, NN };

/// Overflow-safe coth: tanh saturates to +-1 well before its argument can
/// overflow, so the reciprocal stays finite for any nonzero x.
inline double coth(double x) { return 1.0 / std::tanh(x); }

inline void check_factor_domain(double nu, double alpha) {
    if (!(nu > 0.0)) throw std::invalid_argument("convergence factor: nu must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("convergence factor: alpha must lie in (0,1)");
}

// -------------------------------------------------------------------------
// One-dimensional continuum factors. With a = sqrt(1/nu), the interface
// error of the Dirichlet-Neumann sweep is multiplied per iteration by
//   (1-theta) - theta * coth(a*alpha) * tanh(a*(1-alpha)),
// and the Neumann-Neumann trace update by
//   1 - theta * (tanh(a*alpha)+tanh(a*(1-alpha))) * (coth(a*alpha)+coth(a*(1-alpha))).
// The convergence factors are the absolute values; the optimal theta is the
// root of the multiplier, giving convergence in two iterations.
// -------------------------------------------------------------------------

/// Signed one-step multiplier of the DN interface trace.
inline double dn_trace_map(double nu, double alpha, double theta) {
    check_factor_domain(nu, alpha);
    const double a = std::sqrt(1.0 / nu);
    return (1.0 - theta) - theta * coth(a * alpha) * std::tanh(a * (1.0 - alpha));
}

/// Signed one-step multiplier of the NN interface trace.
inline double nn_trace_map(double nu, double alpha, double theta) {
    check_factor_domain(nu, alpha);
    const double a = std::sqrt(1.0 / nu);
    const double s = std::tanh(a * alpha) + std::tanh(a * (1.0 - alpha));
    const double c = coth(a * alpha) + coth(a * (1.0 - alpha));
    return 1.0 - theta * s * c;
}

inline double rho_dn_1d(double nu, double alpha, double theta) {
    return std::abs(dn_trace_map(nu, alpha, theta));
}

inline double rho_nn_1d(double nu, double alpha, double theta) {
    return std::abs(nn_trace_map(nu, alpha, theta));
}

inline double theta_star_dn_1d(double nu, double alpha) {
    check_factor_domain(nu, alpha);
    const double a = std::sqrt(1.0 / nu);
    return 1.0 / (1.0 + coth(a * alpha) * std::tanh(a * (1.0 - alpha)));
}

inline double theta_star_nn_1d(double nu, double alpha) {
    check_factor_domain(nu, alpha);
    const double a = std::sqrt(1.0 / nu);
    const double s = std::tanh(a * alpha) + std::tanh(a * (1.0 - alpha));
    const double c = coth(a * alpha) + coth(a * (1.0 - alpha));
    return 1.0 / (s * c);
}

// -------------------------------------------------------------------------
// Two-dimensional factors. A sine expansion in x2 turns the square problem
// into a family of interval problems indexed by the frequency k, with 1/nu
// replaced by k^2 pi^2 + 1/nu. The convergence factor of the method is the
// sup over k of the per-mode factor; it is attained at one of the extreme
// frequencies (k = 0 or the k -> infinity limit, where the bracket tends to
// 2 for DN and 4 for NN).
// -------------------------------------------------------------------------

/// A frequency index: a nonnegative mode number k, or the k -> infinity limit.
struct Frequency {
    int k = 0;
    bool is_limit = false;

    static Frequency mode(int k) {
        if (k < 0) throw std::invalid_argument("Frequency: k must be nonnegative");
        return {k, false};
    }
    static Frequency limit() { return {0, true}; }

    std::string str() const { return is_limit ? "limit" : std::to_string(k); }
};

/// Per-mode multiplier with the effective reaction lambda + 1/nu in place of
/// 1/nu; lambda = k^2 pi^2 for mode k of the continuum problem.
inline double trace_map_mode(Method method, double nu, double alpha, double theta,
                             double lambda) {
    check_factor_domain(nu, alpha);
    const double a = std::sqrt(lambda + 1.0 / nu);
    if (method == Method::DN)
        return (1.0 - theta) - theta * coth(a * alpha) * std::tanh(a * (1.0 - alpha));
    const double s = std::tanh(a * alpha) + std::tanh(a * (1.0 - alpha));
    const double c = coth(a * alpha) + coth(a * (1.0 - alpha));
    return 1.0 - theta * s * c;
}

inline double rho_2d(Method method, double nu, double alpha, double theta, Frequency freq) {
    if (freq.is_limit)
        return method == Method::DN ? std::abs(1.0 - 2.0 * theta) : std::abs(1.0 - 4.0 * theta);
    const double lambda = static_cast<double>(freq.k) * freq.k * M_PI * M_PI;
    return std::abs(trace_map_mode(method, nu, alpha, theta, lambda));
}

struct SupResult {
    double sup = 0.0;
    Frequency argmax;
    /// False when some interior frequency exceeded both extreme values; the
    /// scan is then the only reliable estimate of the sup.
    bool endpoint_dominated = true;
};

/// Sup of the per-mode factor over k in {0..k_scan} plus the analytic limit.
inline SupResult sup_rho_2d(Method method, double nu, double alpha, double theta,
                            int k_scan = 1000) {
    SupResult result;
    result.sup = rho_2d(method, nu, alpha, theta, Frequency::mode(0));
    result.argmax = Frequency::mode(0);
    double interior_max = -1.0;
    for (int k = 1; k <= k_scan; ++k) {
        const double r = rho_2d(method, nu, alpha, theta, Frequency::mode(k));
        interior_max = std::max(interior_max, r);
        if (r > result.sup) {
            result.sup = r;
            result.argmax = Frequency::mode(k);
        }
    }
    const double at_limit = rho_2d(method, nu, alpha, theta, Frequency::limit());
    // The tail of the scan and the analytic limit agree to rounding once the
    // hyperbolic terms saturate; prefer the limit as argmax on such ties.
    if (at_limit >= result.sup - 1e-12 * std::max(1.0, result.sup)) {
        result.sup = std::max(result.sup, at_limit);
        result.argmax = Frequency::limit();
    }
    const double endpoint_max =
        std::max(rho_2d(method, nu, alpha, theta, Frequency::mode(0)), at_limit);
    result.endpoint_dominated = interior_max <= endpoint_max + 1e-12;
    return result;
}

struct Equioscillation {
    double theta_star = 0.0;
    double rho_at_zero = 0.0;
    double rho_at_limit = 0.0;
    double sup_rho = 0.0;
    Frequency argmax;
    bool used_fallback = false;
};

namespace detail {

/// Golden-section minimizer for a unimodal scalar function on [a, b].
template <typename F>
double golden_section_min(F f, double a, double b, double tol = 1e-12) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// Optimal theta for the 2D iteration: equalize the factor at the two extreme
/// frequencies by bisection. The closed form is theta* = 2/(3 + P0) for DN
/// and 2/(4 + Q0) for NN, with P0/Q0 the k = 0 bracket products; bisection is
/// used so the result stays valid when the brackets are evaluated in regimes
/// where the closed form's branch assumptions fail, and a golden-section
/// minimization of the scanned sup serves as fallback if some interior
/// frequency dominates the endpoints.
inline Equioscillation theta_star_2d(Method method, double nu, double alpha, int k_scan = 1000) {
    check_factor_domain(nu, alpha);
    Equioscillation eq;

    const auto gap = [&](double th) {
        return rho_2d(method, nu, alpha, th, Frequency::mode(0)) -
               rho_2d(method, nu, alpha, th, Frequency::limit());
    };
    // Roots of the two endpoint factors bracket the equioscillation point.
    const double root_zero = method == Method::DN ? theta_star_dn_1d(nu, alpha)
                                                  : theta_star_nn_1d(nu, alpha);
    const double root_limit = method == Method::DN ? 0.5 : 0.25;
    double lo = std::min(root_zero, root_limit);
    double hi = std::max(root_zero, root_limit);

    if (hi - lo < 1e-15 || gap(lo) * gap(hi) > 0.0) {
        // Degenerate (symmetric split): both endpoint factors vanish together.
        eq.theta_star = root_limit;
    } else {
        double flo = gap(lo);
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = gap(mid);
            if (flo * fmid <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
        }
        eq.theta_star = 0.5 * (lo + hi);
    }

    SupResult sup = sup_rho_2d(method, nu, alpha, eq.theta_star, k_scan);
    if (!sup.endpoint_dominated) {
        eq.used_fallback = true;
        eq.theta_star = detail::golden_section_min(
            [&](double th) { return sup_rho_2d(method, nu, alpha, th, k_scan).sup; },
            0.0, 1.0);
        sup = sup_rho_2d(method, nu, alpha, eq.theta_star, k_scan);
    }
    eq.rho_at_zero = rho_2d(method, nu, alpha, eq.theta_star, Frequency::mode(0));
    eq.rho_at_limit = rho_2d(method, nu, alpha, eq.theta_star, Frequency::limit());
    eq.sup_rho = sup.sup;
    eq.argmax = sup.argmax;
    return eq;
}

// -------------------------------------------------------------------------
// Fully discrete symbols. On the uniform grid with N cells and half-row
// (variational) interface fluxes, the per-mode multiplier of the actual
// iteration has the same closed form as the continuum one with the argument
// a*x replaced by p*t, where p counts nodes from the interface to the outer
// boundary and t = 2 asinh(h sqrt(lambda + 1/nu) / 2) is the per-node angle
// of the three-point recurrence. These values match the measured per-mode
// contraction of the grid iteration to rounding.
// -------------------------------------------------------------------------

/// Eigenvalue of the discrete 1D Dirichlet second difference for sine mode k:
/// (4/h^2) sin^2(k pi h / 2); the discrete stand-in for k^2 pi^2.
inline double sine_eigenvalue(int n_cells, int k) {
    const double h = 1.0 / n_cells;
    const double s = std::sin(0.5 * k * M_PI * h);
    return 4.0 / (h * h) * s * s;
}

/// Per-node angle t of the discrete sinh-type solutions: cosh(t) = 1 + w/2
/// with w = h^2 (lambda + 1/nu), computed cancellation-free.
inline double grid_angle(double nu, int n_cells, double lambda = 0.0) {
    const double h = 1.0 / n_cells;
    const double w = h * h * (lambda + 1.0 / nu);
    return 2.0 * std::asinh(0.5 * std::sqrt(w));
}

inline void check_grid_domain(double nu, int n_cells, int m) {
    if (!(nu > 0.0)) throw std::invalid_argument("grid factor: nu must be positive");
    if (m < 1 || m > n_cells - 1)
        throw std::invalid_argument("grid factor: interface index out of range");
}

inline double dn_trace_map_grid(double nu, int n_cells, int m, double theta,
                                double lambda = 0.0) {
    check_grid_domain(nu, n_cells, m);
    const double t = grid_angle(nu, n_cells, lambda);
    return (1.0 - theta) - theta * coth(m * t) * std::tanh((n_cells - m) * t);
}

inline double nn_trace_map_grid(double nu, int n_cells, int m, double theta,
                                double lambda = 0.0) {
    check_grid_domain(nu, n_cells, m);
    const double t = grid_angle(nu, n_cells, lambda);
    const double s = std::tanh(m * t) + std::tanh((n_cells - m) * t);
    const double c = coth(m * t) + coth((n_cells - m) * t);
    return 1.0 - theta * s * c;
}

inline double rho_dn_grid(double nu, int n_cells, int m, double theta, double lambda = 0.0) {
    return std::abs(dn_trace_map_grid(nu, n_cells, m, theta, lambda));
}

inline double rho_nn_grid(double nu, int n_cells, int m, double theta, double lambda = 0.0) {
    return std::abs(nn_trace_map_grid(nu, n_cells, m, theta, lambda));
}

/// Exact root of the discrete DN multiplier: the grid iteration at this theta
/// annihilates the interface error in a single update.
inline double theta_star_dn_grid(double nu, int n_cells, int m, double lambda = 0.0) {
    check_grid_domain(nu, n_cells, m);
    const double t = grid_angle(nu, n_cells, lambda);
    return 1.0 / (1.0 + coth(m * t) * std::tanh((n_cells - m) * t));
}

inline double theta_star_nn_grid(double nu, int n_cells, int m, double lambda = 0.0) {
    check_grid_domain(nu, n_cells, m);
    const double t = grid_angle(nu, n_cells, lambda);
    const double s = std::tanh(m * t) + std::tanh((n_cells - m) * t);
    const double c = coth(m * t) + coth((n_cells - m) * t);
    return 1.0 / (s * c);
}

/// Discrete per-mode factor of the 2D grid iteration at sine frequency k.
inline double rho_2d_grid(Method method, double nu, int n_cells, int m, double theta, int k) {
    const double lambda = sine_eigenvalue(n_cells, k);
    return method == Method::DN ? rho_dn_grid(nu, n_cells, m, theta, lambda)
                                : rho_nn_grid(nu, n_cells, m, theta, lambda);
}

} // namespace ocdd::theory
