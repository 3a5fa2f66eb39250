#include "sdplab/estimate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sdplab {

namespace {
constexpr double kZ95 = 1.959963984540054;
}

std::pair<double, double> wilson_interval(std::int64_t hits, std::int64_t n) {
    if (n < 1 || hits < 0 || hits > n) {
        throw std::invalid_argument("wilson_interval: need 0 <= hits <= n, n >= 1");
    }
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(hits) / nn;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half =
        kZ95 * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    double lo = center - half;
    double hi = center + half;
    // At the boundary counts the exact score-equation roots are 0 and 1;
    // center - half cancels to ~1e-18 there, which must not read as > 0.
    if (hits == 0 || lo < 0.0) lo = 0.0;
    if (hits == n || hi > 1.0) hi = 1.0;
    return {lo, hi};
}

Estimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed, std::string spec) {
    auto [lo, hi] = wilson_interval(hits, n);
    Estimate e;
    e.value = static_cast<double>(hits) / static_cast<double>(n);
    e.ci_lo = lo;
    e.ci_hi = hi;
    e.samples = n;
    e.seed = seed;
    e.spec = std::move(spec);
    return e;
}

PowerLawFit fit_power_law(const std::vector<PowerLawPoint>& pts) {
    std::vector<double> xs, ys, ses;
    std::size_t dropped = 0;
    for (const auto& p : pts) {
        if (!(p.scale > 0.0) || !(p.value > 0.0)) {
            ++dropped;
            continue;
        }
        xs.push_back(std::log(p.scale));
        ys.push_back(std::log(p.value));
        double se = 0.0;
        if (p.ci_hi > p.ci_lo && p.ci_lo > 0.0) {
            se = (std::log(p.ci_hi) - std::log(p.ci_lo)) / (2.0 * kZ95);
        }
        ses.push_back(se);
    }
    if (dropped > 0) {
        std::fprintf(stderr, "fit_power_law: dropped %zu nonpositive point(s)\n", dropped);
    }
    const std::size_t m = xs.size();
    if (m < 3) {
        throw std::invalid_argument("fit_power_law: need at least 3 positive points");
    }

    bool weighted = false;
    for (double se : ses) {
        if (se > 0.0) weighted = true;
    }

    std::vector<double> w(m, 1.0);
    if (weighted) {
        // A zero width among noisy points just means an extremely confident one.
        double min_se = 0.0;
        for (double se : ses) {
            if (se > 0.0 && (min_se == 0.0 || se < min_se)) min_se = se;
        }
        for (std::size_t i = 0; i < m; ++i) {
            const double se = ses[i] > 0.0 ? ses[i] : min_se;
            w[i] = 1.0 / (se * se);
        }
    }

    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sw += w[i];
        swx += w[i] * xs[i];
        swy += w[i] * ys[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += w[i] * (xs[i] - xbar) * (xs[i] - xbar);
        sxy += w[i] * (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("fit_power_law: scales must not be all equal");
    }
    const double slope = sxy / sxx;

    PowerLawFit fit;
    fit.exponent = -slope;
    fit.used = m;
    if (weighted) {
        fit.std_error = std::sqrt(1.0 / sxx);
    } else {
        double rss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = ys[i] - (ybar + slope * (xs[i] - xbar));
            rss += r * r;
        }
        if (m > 2) {
            fit.std_error = std::sqrt((rss / static_cast<double>(m - 2)) / sxx);
        }
    }
    return fit;
}

}  // namespace sdplab
