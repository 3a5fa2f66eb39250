#ifndef SDPLAB_HARNESS_HPP
#define SDPLAB_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sdplab/estimate.hpp"
#include "sdplab/geometry.hpp"
#include "sdplab/rng.hpp"

namespace sdplab {

// Deterministic Monte Carlo driver.  Trial i sees exactly source.substream(i);
// workers pull indices from a shared counter and only the hit total leaves the
// loop, so the count is a pure function of (source, samples) for any thread
// count.  A throwing trial aborts the run with its exception.
std::int64_t count_hits(std::int64_t samples, int threads, const RandomSource& source,
                        const std::function<bool(const RandomSource&)>& trial);

Estimate estimate_event(std::int64_t samples, int threads, const RandomSource& source,
                        std::string spec, const std::function<bool(const RandomSource&)>& trial);

// P_p probability of a left-right open crossing of a width x height box.
Estimate estimate_crossing(double p, std::int32_t width, std::int32_t height,
                           std::int64_t samples, int threads, const RandomSource& source);

struct BisectStep {
    double p = 0;
    double estimate = 0;
};

// The density at which the n x n square crossing probability passes 1/2, by
// bisection.  Every evaluation reuses the same substream family, so the
// per-site uniforms are shared and the trace is exactly monotone in p.  The
// reported interval is the final bracket, not a Wilson CI.
Estimate bisect_pc(std::int32_t n, std::int64_t samples, double tol, int threads,
                   const RandomSource& source, std::vector<BisectStep>* trace = nullptr);

// Joint event: omega crosses S_n left-right, and after killing the crossing
// clusters and enhancing, a top-bottom crossing of R_n survives.
Estimate estimate_theorem_cross(double p, double delta, std::int32_t n, std::int64_t samples,
                                int threads, const RandomSource& source);

// Circuit-killed then enhanced on B_2n: connection from the boundary of
// B_{n-1} to the boundary of B_2n.
Estimate estimate_annulus_recovery(double p, double delta, std::int32_t n, std::int64_t samples,
                                   int threads, const RandomSource& source);

// Finite one-arm proxy: origin joined to the boundary of B_m in the
// burned-and-enhanced configuration drawn on the horizon.
Estimate estimate_theta(double p, double delta, std::int32_t m, const Rect& horizon,
                        std::int64_t samples, int threads, const RandomSource& source);

struct DeltaScanRow {
    double p = 0;
    double delta_hat = -1;  // smallest grid delta whose CI clears zero; -1 when none does
    double theta_value = 0;
    double theta_ci_lo = 0;
    double closed_form = 0;  // (pc - p) / (1 - p) below pc, else 0
    double linear_ref = 0;   // (p - pc) / p above pc, else 0
};

// For each p, scan the delta grid upward until the theta proxy is significant
// (Wilson lower bound above zero); emits the comparison curves against the
// supplied critical-density estimate.  Shared substreams make the underlying
// hit counts monotone in delta exactly.
std::vector<DeltaScanRow> scan_delta_c(const std::vector<double>& p_grid,
                                       const std::vector<double>& delta_grid, std::int32_t m,
                                       const Rect& horizon, std::int64_t samples_per_cell,
                                       double pc_hat, int threads, const RandomSource& source);

// Stable text for CSV cells: round-trippable and identical across runs.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace sdplab

#endif
