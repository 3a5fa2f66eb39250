#ifndef SDPLAB_ESTIMATE_HPP
#define SDPLAB_ESTIMATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sdplab {

// Point estimate with a 95% Wilson interval and enough metadata to reproduce it.
// For power-law fits, value holds the exponent and the interval degenerates to
// value +- std_error.
struct Estimate {
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string spec;
};

// 95% Wilson score interval; requires 0 <= hits <= n, n >= 1.
std::pair<double, double> wilson_interval(std::int64_t hits, std::int64_t n);

Estimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed, std::string spec);

struct PowerLawPoint {
    double scale = 0.0;
    double value = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

struct PowerLawFit {
    double exponent = 0.0;  // fits value ~ scale^(-exponent)
    double std_error = 0.0;
    std::size_t used = 0;  // points that entered the fit
};

// Weighted least squares on log(value) vs log(scale); weights from the CI width
// on the log scale, or unweighted when every width is zero (exact inputs).
// Nonpositive values are excluded with a warning on stderr; fewer than three
// surviving points is an error.
PowerLawFit fit_power_law(const std::vector<PowerLawPoint>& pts);

}  // namespace sdplab

#endif
