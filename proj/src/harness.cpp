#include "sdplab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "sdplab/cluster.hpp"
#include "sdplab/sdp.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

std::int64_t count_hits(std::int64_t samples, int threads, const RandomSource& source,
                        const std::function<bool(const RandomSource&)>& trial) {
    if (samples < 1) throw std::invalid_argument("count_hits: samples >= 1 required");
    const int workers = std::max(1, threads);
    if (workers == 1) {
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i < samples; ++i)
            if (trial(source.substream(std::uint64_t(i)))) ++hits;
        return hits;
    }

    std::atomic<std::int64_t> next{0};
    std::atomic<std::int64_t> hits{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            std::int64_t local = 0;
            try {
                for (;;) {
                    const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= samples) break;
                    if (trial(source.substream(std::uint64_t(i)))) ++local;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(samples, std::memory_order_relaxed);
            }
            hits.fetch_add(local, std::memory_order_relaxed);
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return hits.load();
}

Estimate estimate_event(std::int64_t samples, int threads, const RandomSource& source,
                        std::string spec, const std::function<bool(const RandomSource&)>& trial) {
    const std::int64_t hits = count_hits(samples, threads, source, trial);
    return make_estimate(hits, samples, source.seed, std::move(spec));
}

Estimate estimate_crossing(double p, std::int32_t width, std::int32_t height,
                           std::int64_t samples, int threads, const RandomSource& source) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("estimate_crossing: box sides >= 1 required");
    const Rect box = Rect::box(0, 0, width - 1, height - 1);
    char spec[96];
    std::snprintf(spec, sizeof spec, "crossing p=%.6g box=%dx%d", p, int(width), int(height));
    return estimate_event(samples, threads, source, spec, [=](const RandomSource& s) {
        return crosses(sample_config(box, p, s), box, Axis::horizontal, Polarity::open_sites,
                       Adjacency::primal);
    });
}

Estimate bisect_pc(std::int32_t n, std::int64_t samples, double tol, int threads,
                   const RandomSource& source, std::vector<BisectStep>* trace) {
    if (n < 1) throw std::invalid_argument("bisect_pc: n >= 1 required");
    if (samples < 1) throw std::invalid_argument("bisect_pc: samples >= 1 required");
    if (!(tol > 0)) throw std::invalid_argument("bisect_pc: tol > 0 required");

    const Rect box = Rect::box(0, 0, n - 1, n - 1);
    double lo = 0.0, hi = 1.0;
    std::int64_t total = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const std::int64_t hit = count_hits(samples, threads, source, [&](const RandomSource& s) {
            return crosses(sample_config(box, mid, s), box, Axis::horizontal,
                           Polarity::open_sites, Adjacency::primal);
        });
        total += samples;
        const double est = double(hit) / double(samples);
        if (trace) trace->push_back({mid, est});
        if (est < 0.5)
            lo = mid;
        else
            hi = mid;
    }

    Estimate e;
    e.value = 0.5 * (lo + hi);
    e.ci_lo = lo;
    e.ci_hi = hi;
    e.samples = total;
    e.seed = source.seed;
    char spec[96];
    std::snprintf(spec, sizeof spec, "pc-bisect n=%d tol=%.6g", int(n), tol);
    e.spec = spec;
    return e;
}

Estimate estimate_theorem_cross(double p, double delta, std::int32_t n, std::int64_t samples,
                                int threads, const RandomSource& source) {
    if (n < 1) throw std::invalid_argument("estimate_theorem_cross: n >= 1 required");
    const Rect sn = strip_s(n);
    const Rect rn = strip_r(n);
    char spec[96];
    std::snprintf(spec, sizeof spec, "sdp-cross p=%.6g delta=%.6g n=%d", p, delta, int(n));
    return estimate_event(samples, threads, source, spec, [=](const RandomSource& s) {
        const SiteConfig omega = sample_config(sn, p, s.substream(1));
        if (!crosses(omega, sn, Axis::horizontal, Polarity::open_sites, Adjacency::primal))
            return false;
        const SiteConfig sigma = sample_config(sn, delta, s.substream(2));
        const SiteConfig enhanced = tilde_enhanced(tilde_config(omega, n), sigma, n);
        return crosses(enhanced, rn, Axis::vertical, Polarity::open_sites, Adjacency::primal);
    });
}

Estimate estimate_annulus_recovery(double p, double delta, std::int32_t n, std::int64_t samples,
                                   int threads, const RandomSource& source) {
    if (n < 1) throw std::invalid_argument("estimate_annulus_recovery: n >= 1 required");
    const Rect dom = annulus_hull(n);
    char spec[96];
    std::snprintf(spec, sizeof spec, "annulus p=%.6g delta=%.6g n=%d", p, delta, int(n));
    return estimate_event(samples, threads, source, spec, [=](const RandomSource& s) {
        const SiteConfig omega = sample_config(dom, p, s.substream(1));
        const SiteConfig sigma = sample_config(dom, delta, s.substream(2));
        const SiteConfig cfg = overlay(check_config(omega, n), sigma);
        return connected_in(cfg, dom, internal_boundary(ball({0, 0}, n - 1)),
                            internal_boundary(dom), Polarity::open_sites, Adjacency::primal);
    });
}

Estimate estimate_theta(double p, double delta, std::int32_t m, const Rect& horizon,
                        std::int64_t samples, int threads, const RandomSource& source) {
    if (m < 0) throw std::invalid_argument("estimate_theta: m >= 0 required");
    if (!horizon.contains(ball({0, 0}, m)))
        throw std::invalid_argument("estimate_theta: ball beyond the horizon");
    char spec[128];
    std::snprintf(spec, sizeof spec, "theta p=%.6g delta=%.6g m=%d horizon=%ldx%ld", p, delta,
                  int(m), long(horizon.width()), long(horizon.height()));
    const std::vector<Coord> target = internal_boundary(ball({0, 0}, m));
    return estimate_event(samples, threads, source, spec, [=](const RandomSource& s) {
        const SdpSample smp = sdp_sample(p, delta, horizon, s);
        if (!smp.omega_bar_delta.get({0, 0})) return false;
        return connected_in(smp.omega_bar_delta, horizon, {{0, 0}}, target, Polarity::open_sites,
                            Adjacency::primal);
    });
}

std::vector<DeltaScanRow> scan_delta_c(const std::vector<double>& p_grid,
                                       const std::vector<double>& delta_grid, std::int32_t m,
                                       const Rect& horizon, std::int64_t samples_per_cell,
                                       double pc_hat, int threads, const RandomSource& source) {
    if (p_grid.empty() || delta_grid.empty())
        throw std::invalid_argument("scan_delta_c: grids must be nonempty");
    std::vector<double> deltas = delta_grid;
    std::sort(deltas.begin(), deltas.end());

    std::vector<DeltaScanRow> rows;
    rows.reserve(p_grid.size());
    for (const double p : p_grid) {
        DeltaScanRow row;
        row.p = p;
        row.closed_form = p < pc_hat ? (pc_hat - p) / (1.0 - p) : 0.0;
        row.linear_ref = p > pc_hat ? (p - pc_hat) / p : 0.0;
        for (const double d : deltas) {
            const Estimate e = estimate_theta(p, d, m, horizon, samples_per_cell, threads, source);
            if (e.ci_lo > 0.0) {
                row.delta_hat = d;
                row.theta_value = e.value;
                row.theta_ci_lo = e.ci_lo;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) os << ',';
        os << header[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) os << ',';
            os << row[i];
        }
        os << '\n';
    }
}

}  // namespace sdplab
