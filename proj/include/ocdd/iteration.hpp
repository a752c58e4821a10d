#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace ocdd {

/// Shared knobs of the interface iterations. theta is accepted on all of
/// (0,1] and beyond; values outside (0,1) are flagged out-of-theory in the
/// report rather than rejected, since driving the iteration past its
/// convergence bound is a supported experiment.
struct IterationConfig {
    double theta = 0.5;
    double tol = 1e-10;
    int max_iter = 50;
    double divergence_guard = 1e8;
    bool swap_roles = false;  // Dirichlet on the right, Neumann on the left

    void validate() const {
        if (!(tol > 0.0)) throw std::invalid_argument("IterationConfig: tol must be positive");
        if (max_iter < 2) throw std::invalid_argument("IterationConfig: max_iter must be >= 2");
        if (!(divergence_guard > 0.0))
            throw std::invalid_argument("IterationConfig: divergence_guard must be positive");
        if (!std::isfinite(theta)) throw std::invalid_argument("IterationConfig: theta must be finite");
    }

    bool theta_in_theory() const { return theta > 0.0 && theta < 1.0; }
};

enum class Verdict { Converged, Diverged, MaxIter };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Converged: return "converged";
        case Verdict::Diverged: return "diverged";
        default: return "max_iter";
    }
}

struct IterationRecord {
    int iter = 0;
    double trace_err = 0.0;  // sup norm of the interface error
    double sub_err = 0.0;    // L2 norm of the assembled field error
    double ratio = std::numeric_limits<double>::quiet_NaN();  // trace_err ratio to previous
};

struct IterationReport {
    std::vector<IterationRecord> records;  // records[0] is the initial state
    Verdict verdict = Verdict::MaxIter;
    double measured_rate = 0.0;  // geometric mean of the late-iteration ratios
    bool theta_flagged = false;  // theta outside (0,1)

    int iterations() const { return records.empty() ? 0 : records.back().iter; }
    double final_trace_err() const { return records.empty() ? 0.0 : records.back().trace_err; }
    double trace_err_at(int iter) const { return records.at(static_cast<size_t>(iter)).trace_err; }
};

namespace detail {

/// Drives a generic interface iteration. step maps the trace to (new trace,
/// assembled-field error); trace_err_of gives the sup-norm interface error.
/// The first-iteration transient is excluded from the measured rate.
template <typename Trace, typename Step, typename TraceErr>
IterationReport run_interface_iteration(Trace trace, const IterationConfig& config, Step step,
                                        TraceErr trace_err_of) {
    config.validate();
    IterationReport report;
    report.theta_flagged = !config.theta_in_theory();

    double err = trace_err_of(trace);
    report.records.push_back({0, err, std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()});

    bool decided = false;
    for (int n = 1; n <= config.max_iter; ++n) {
        auto [next, sub_err] = step(trace);
        trace = std::move(next);
        const double prev = err;
        err = trace_err_of(trace);
        const double ratio = prev > 0.0 ? err / prev : 0.0;
        report.records.push_back({n, err, sub_err, ratio});

        if (!std::isfinite(err) || err >= config.divergence_guard) {
            report.verdict = Verdict::Diverged;
            decided = true;
            break;
        }
        if (err <= config.tol) {
            report.verdict = Verdict::Converged;
            decided = true;
            break;
        }
    }

    const int n_done = report.iterations();
    const int n_rates = std::max(std::min(5, n_done - 1), std::min(1, n_done));
    double log_sum = 0.0;
    bool zero_rate = false;
    for (int i = n_done - n_rates + 1; i <= n_done; ++i) {
        const double r = report.records[static_cast<size_t>(i)].ratio;
        if (r <= 0.0) zero_rate = true;
        else log_sum += std::log(r);
    }
    report.measured_rate = (zero_rate || n_rates == 0) ? 0.0 : std::exp(log_sum / n_rates);

    if (!decided) report.verdict = report.measured_rate > 1.0 ? Verdict::Diverged : Verdict::MaxIter;
    return report;
}

} // namespace detail

} // namespace ocdd
