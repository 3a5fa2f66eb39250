#include "sdplab/sdp.hpp"

#include <fstream>
#include <limits>

#include <json.hpp>

#include "sdplab/detail/grid.hpp"

namespace sdplab {

using detail::Grid;

SiteConfig burn_boundary_clusters(const SiteConfig& config, const Rect& horizon) {
    if (!config.domain().contains(horizon))
        throw std::invalid_argument("burn_boundary_clusters: horizon exceeds domain");
    Grid g = Grid::from_config(config, horizon);
    std::vector<std::uint8_t> burned(g.v.size(), 0);
    std::vector<std::size_t> queue;
    for (Coord c : internal_boundary(horizon)) {
        std::size_t i = g.idx(c.x, c.y);
        if (g.v[i] && !burned[i]) {
            burned[i] = 1;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        Coord c = g.coord(i);
        for (auto d : primal_steps) {
            std::int32_t x = c.x + d.x, y = c.y + d.y;
            if (!g.in(x, y)) continue;
            std::size_t j = g.idx(x, y);
            if (g.v[j] && !burned[j]) {
                burned[j] = 1;
                queue.push_back(j);
            }
        }
    }
    SiteConfig out = config;
    for (std::size_t i = 0; i < burned.size(); ++i)
        if (burned[i]) out.set(g.coord(i), false);
    return out;
}

SdpSample sdp_sample(double p, double delta, const Rect& horizon,
                     const RandomSource& source) {
    if (p < 0 || p > 1 || delta < 0 || delta > 1)
        throw std::invalid_argument("sdp_sample: probabilities must lie in [0,1]");
    SdpSample s;
    s.p = p;
    s.delta = delta;
    s.horizon = horizon;
    s.source = source;
    s.omega = sample_config(horizon, p, source.substream(0));
    s.sigma = sample_config(horizon, delta, source.substream(1));
    s.omega_bar = burn_boundary_clusters(s.omega, horizon);
    s.omega_bar_delta = overlay(s.omega_bar, s.sigma);
    return s;
}

void dump_sdp_sample(const SdpSample& sample, const std::string& prefix) {
    sample.omega.save_file(prefix + "omega.bits");
    sample.sigma.save_file(prefix + "sigma.bits");
    sample.omega_bar.save_file(prefix + "omega_bar.bits");
    sample.omega_bar_delta.save_file(prefix + "omega_bar_delta.bits");
    nlohmann::json meta{
        {"p", sample.p},
        {"delta", sample.delta},
        {"horizon", {sample.horizon.x_min, sample.horizon.y_min, sample.horizon.x_max,
                     sample.horizon.y_max}},
        {"seed", sample.source.seed},
        {"stream", sample.source.stream_id},
    };
    std::ofstream os(prefix + "meta.json");
    if (!os) throw std::runtime_error("cannot open for write: " + prefix + "meta.json");
    os << meta.dump(2) << '\n';
}

namespace {

// Marks sites of S_n reachable from both short sides; byte 1|2 per direction.
std::vector<std::uint8_t> side_reach(const SiteConfig& omega, std::int32_t n) {
    Rect sn = strip_s(n);
    if (!omega.domain().contains(sn))
        throw std::invalid_argument("strip transform: domain must cover S_n");
    Grid g = Grid::from_config(omega, sn);
    std::vector<std::uint8_t> mark(g.v.size(), 0);
    std::vector<std::size_t> queue;
    for (int pass = 0; pass < 2; ++pass) {
        std::uint8_t bit = pass == 0 ? 1 : 2;
        std::int32_t x0 = pass == 0 ? sn.x_min : sn.x_max;
        queue.clear();
        for (std::int32_t y = sn.y_min; y <= sn.y_max; ++y) {
            std::size_t i = g.idx(x0, y);
            if (g.v[i]) {
                mark[i] |= bit;
                queue.push_back(i);
            }
        }
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            Coord c = g.coord(i);
            for (auto d : primal_steps) {
                std::int32_t x = c.x + d.x, y = c.y + d.y;
                if (!g.in(x, y)) continue;
                std::size_t j = g.idx(x, y);
                if (g.v[j] && !(mark[j] & bit)) {
                    mark[j] |= bit;
                    queue.push_back(j);
                }
            }
        }
    }
    return mark;
}

}  // namespace

std::vector<Coord> chi_set(const SiteConfig& omega, std::int32_t n) {
    Rect sn = strip_s(n);
    std::vector<std::uint8_t> mark = side_reach(omega, n);
    std::vector<Coord> out;
    Grid shape(sn);
    for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i] == 3) out.push_back(shape.coord(i));
    return out;
}

SiteConfig tilde_config(const SiteConfig& omega, std::int32_t n) {
    Rect sn = strip_s(n);
    std::vector<std::uint8_t> mark = side_reach(omega, n);
    SiteConfig out(sn, true);
    Grid shape(sn);
    for (std::size_t i = 0; i < mark.size(); ++i) {
        if (mark[i] != 3) continue;
        Coord c = shape.coord(i);
        out.set(c, false);
        for (auto d : primal_steps) {
            Coord b{c.x + d.x, c.y + d.y};
            if (sn.contains(b) && mark[shape.idx(b.x, b.y)] != 3) out.set(b, false);
        }
    }
    return out;
}

SiteConfig tilde_enhanced(const SiteConfig& omega_tilde, const SiteConfig& sigma,
                          std::int32_t n) {
    Rect sn = strip_s(n), rn = strip_r(n);
    if (!omega_tilde.domain().contains(sn) || !sigma.domain().contains(sn))
        throw std::invalid_argument("tilde_enhanced: domains must cover S_n");
    SiteConfig out(sn);
    for (std::int32_t y = sn.y_min; y <= sn.y_max; ++y)
        for (std::int32_t x = sn.x_min; x <= sn.x_max; ++x) {
            Coord c{x, y};
            bool v = omega_tilde.get(c);
            if (rn.contains(c)) v = v || sigma.get(c);
            out.set(c, v);
        }
    return out;
}

SiteConfig check_config(const SiteConfig& omega, std::int32_t n) {
    if (n < 1) throw std::invalid_argument("check_config: n >= 1 required");
    Rect ann = annulus_hull(n);
    if (!omega.domain().contains(ann))
        throw std::invalid_argument("check_config: domain must cover B_2n");

    Grid g = Grid::from_config(omega, ann);
    for (std::int32_t y = -(n - 1); y <= n - 1; ++y)
        for (std::int32_t x = -(n - 1); x <= n - 1; ++x) g.v[g.idx(x, y)] = 0;

    // Sheet index per visited site, relative to a cut along {x >= n, y = 0};
    // a cycle closing on two different sheets winds around the hole.
    constexpr std::int32_t unseen = std::numeric_limits<std::int32_t>::min();
    std::vector<std::int32_t> sheet(g.v.size(), unseen);
    std::vector<std::size_t> queue, component;
    std::vector<Coord> winding_seeds;
    auto step_shift = [n](Coord from, Coord to) -> std::int32_t {
        if (from.x != to.x || from.x < n) return 0;
        if (from.y == 0 && to.y == -1) return 1;
        if (from.y == -1 && to.y == 0) return -1;
        return 0;
    };
    for (std::size_t s = 0; s < g.v.size(); ++s) {
        if (!g.v[s] || sheet[s] != unseen) continue;
        bool winds = false;
        sheet[s] = 0;
        queue.assign(1, s);
        component.assign(1, s);
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            Coord c = g.coord(i);
            for (auto d : primal_steps) {
                Coord b{c.x + d.x, c.y + d.y};
                if (!g.in(b.x, b.y)) continue;
                std::size_t j = g.idx(b.x, b.y);
                if (!g.v[j]) continue;
                std::int32_t want = sheet[i] + step_shift(c, b);
                if (sheet[j] == unseen) {
                    sheet[j] = want;
                    queue.push_back(j);
                    component.push_back(j);
                } else if (sheet[j] != want) {
                    winds = true;
                }
            }
        }
        if (winds)
            for (std::size_t i : component) winding_seeds.push_back(g.coord(i));
    }
    if (winding_seeds.empty()) return omega;

    // Close the full clusters of the winding components across the domain.
    Grid full = Grid::from_config(omega, omega.domain());
    std::vector<std::uint8_t> burn(full.v.size(), 0);
    queue.clear();
    for (Coord c : winding_seeds) {
        std::size_t i = full.idx(c.x, c.y);
        if (!burn[i]) {
            burn[i] = 1;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        Coord c = full.coord(i);
        for (auto d : primal_steps) {
            std::int32_t x = c.x + d.x, y = c.y + d.y;
            if (!full.in(x, y)) continue;
            std::size_t j = full.idx(x, y);
            if (full.v[j] && !burn[j]) {
                burn[j] = 1;
                queue.push_back(j);
            }
        }
    }
    SiteConfig out = omega;
    for (std::size_t i = 0; i < burn.size(); ++i)
        if (burn[i]) out.set(full.coord(i), false);
    return out;
}

}  // namespace sdplab
