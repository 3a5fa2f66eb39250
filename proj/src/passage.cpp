#include "sdplab/passage.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sdplab/arms.hpp"
#include "sdplab/cluster.hpp"
#include "sdplab/sdp.hpp"

namespace sdplab {

namespace {

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();

struct StripIndex {
    std::int32_t n;
    std::int32_t w;  // 6n + 1

    explicit StripIndex(std::int32_t n_) : n(n_), w(6 * n_ + 1) {}
    std::size_t cells() const { return std::size_t(w) * std::size_t(n + 1); }
    std::size_t idx(Coord c) const {
        return std::size_t(c.y) * std::size_t(w) + std::size_t(c.x + 3 * n);
    }
    Coord coord(std::size_t i) const {
        return {std::int32_t(i % std::size_t(w)) - 3 * n, std::int32_t(i / std::size_t(w))};
    }
};

void check_strip_inputs(const SiteConfig& cfg, const SiteConfig& enhanced, std::int32_t n,
                        const char* fn) {
    if (n < 1) throw std::invalid_argument(std::string(fn) + ": n >= 1 required");
    const Rect sn = strip_s(n);
    if (!cfg.domain().contains(sn) || !enhanced.domain().contains(sn))
        throw std::invalid_argument(std::string(fn) + ": domains must cover S_n");
}

// Zero-one BDF over the open sites of S_n: seeds on the top row in left to
// right order (free seeds before enhanced ones), neighbor relaxation in the
// order (left, down, up, right).  Fills dist and parent for reconstruction.
void crossing_distances(const SiteConfig& cfg, const SiteConfig& enhanced, std::int32_t n,
                        std::vector<std::int32_t>& dist, std::vector<std::int32_t>& parent) {
    const StripIndex g(n);
    const Rect sn = strip_s(n);
    dist.assign(g.cells(), kInf);
    parent.assign(g.cells(), -1);
    std::deque<std::pair<std::int32_t, std::int32_t>> dq;  // (cell, dist at push)
    for (int pass = 0; pass < 2; ++pass) {
        for (std::int32_t x = -3 * n; x <= 3 * n; ++x) {
            const Coord c{x, n};
            if (!cfg.get(c)) continue;
            const std::int32_t w = enhanced.get(c) ? 1 : 0;
            if (w != pass) continue;
            dist[g.idx(c)] = w;
            dq.push_back({std::int32_t(g.idx(c)), w});
        }
    }
    while (!dq.empty()) {
        const auto [i, d] = dq.front();
        dq.pop_front();
        if (d > dist[std::size_t(i)]) continue;
        const Coord c = g.coord(std::size_t(i));
        for (Coord step : primal_steps) {
            const Coord b{c.x + step.x, c.y + step.y};
            if (!sn.contains(b) || !cfg.get(b)) continue;
            const std::int32_t w = enhanced.get(b) ? 1 : 0;
            const std::size_t j = g.idx(b);
            if (d + w < dist[j]) {
                dist[j] = d + w;
                parent[j] = i;
                if (w == 0)
                    dq.push_front({std::int32_t(j), dist[j]});
                else
                    dq.push_back({std::int32_t(j), dist[j]});
            }
        }
    }
}

std::int32_t best_bottom(const StripIndex& g, const std::vector<std::int32_t>& dist) {
    std::int32_t best = -1;
    std::int32_t best_d = kInf;
    for (std::int32_t x = -3 * g.n; x <= 3 * g.n; ++x) {
        const std::size_t i = g.idx({x, 0});
        if (dist[i] < best_d) {
            best_d = dist[i];
            best = std::int32_t(i);
        }
    }
    return best_d == kInf ? -1 : best;
}

std::set<Coord> as_set(const std::vector<Coord>& v) { return {v.begin(), v.end()}; }

// Largest s >= from such that every cell of the ring at radius s+1 satisfies
// keep; -1 when even radius `from` fails.
std::int32_t grow_ball(Coord u, std::int32_t from, std::int32_t bound, auto&& keep) {
    auto ring_ok = [&](std::int32_t s) {
        if (s == 0) return keep(u);
        for (std::int32_t t = -s; t <= s; ++t) {
            if (!keep({u.x + t, u.y - s}) || !keep({u.x + t, u.y + s})) return false;
            if (!keep({u.x - s, u.y + t}) || !keep({u.x + s, u.y + t})) return false;
        }
        return true;
    };
    std::int32_t s = from - 1;
    while (s < bound && ring_ok(s + 1)) ++s;
    return s;
}

}  // namespace

SiteConfig enhancement_mask(const SiteConfig& omega_tilde, const SiteConfig& omega_tilde_delta,
                            std::int32_t n) {
    check_strip_inputs(omega_tilde, omega_tilde_delta, n, "enhancement_mask");
    const Rect sn = strip_s(n), rn = strip_r(n);
    SiteConfig out(sn);
    for (std::int32_t y = rn.y_min; y <= rn.y_max; ++y)
        for (std::int32_t x = rn.x_min; x <= rn.x_max; ++x) {
            const Coord c{x, y};
            if (!omega_tilde.get(c) && omega_tilde_delta.get(c)) out.set(c, true);
        }
    return out;
}

std::optional<std::int32_t> min_enhanced_crossing_cost(const SiteConfig& omega_tilde_delta,
                                                       const SiteConfig& enhanced,
                                                       std::int32_t n) {
    check_strip_inputs(omega_tilde_delta, enhanced, n, "min_enhanced_crossing_cost");
    std::vector<std::int32_t> dist, parent;
    crossing_distances(omega_tilde_delta, enhanced, n, dist, parent);
    const StripIndex g(n);
    const std::int32_t at = best_bottom(g, dist);
    if (at < 0) return std::nullopt;
    return dist[std::size_t(at)];
}

std::optional<std::vector<Coord>> leftmost_minimal_crossing(const SiteConfig& omega_tilde_delta,
                                                            const SiteConfig& enhanced,
                                                            std::int32_t n) {
    check_strip_inputs(omega_tilde_delta, enhanced, n, "leftmost_minimal_crossing");
    std::vector<std::int32_t> dist, parent;
    crossing_distances(omega_tilde_delta, enhanced, n, dist, parent);
    const StripIndex g(n);
    std::int32_t at = best_bottom(g, dist);
    if (at < 0) return std::nullopt;
    std::vector<Coord> path;
    while (at >= 0) {
        path.push_back(g.coord(std::size_t(at)));
        at = parent[std::size_t(at)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

PassageSample passage_set(const SiteConfig& omega, const SiteConfig& sigma, std::int32_t n) {
    check_strip_inputs(omega, sigma, n, "passage_set");
    PassageSample s;
    s.n = n;
    s.omega = omega;
    s.sigma = sigma;
    s.omega_tilde = tilde_config(omega, n);
    s.omega_tilde_delta = tilde_enhanced(s.omega_tilde, sigma, n);

    const SiteConfig mask = enhancement_mask(s.omega_tilde, s.omega_tilde_delta, n);
    const Rect rn = strip_r(n);
    for (std::int32_t y = rn.y_min; y <= rn.y_max; ++y)
        for (std::int32_t x = rn.x_min; x <= rn.x_max; ++x)
            if (mask.get({x, y})) s.enhanced.push_back({x, y});
    std::sort(s.enhanced.begin(), s.enhanced.end());

    if (auto path = leftmost_minimal_crossing(s.omega_tilde_delta, mask, n))
        s.gamma = std::move(*path);
    const bool horizontal = crosses(omega, strip_s(n), Axis::horizontal, Polarity::open_sites,
                                    Adjacency::primal);
    if (!s.gamma.empty() && horizontal) {
        for (Coord c : s.gamma)
            if (mask.get(c)) s.passage_points.push_back(c);
        std::sort(s.passage_points.begin(), s.passage_points.end());
    }
    return s;
}

EventGeometry event_geometry(const std::vector<Coord>& a, const std::vector<Coord>& b,
                             std::int32_t n) {
    if (n < 1) throw std::invalid_argument("event_geometry: n >= 1 required");
    if (a.empty()) throw std::invalid_argument("event_geometry: inner set must be nonempty");
    const std::set<Coord> sa = as_set(a), sb = as_set(b);
    for (Coord c : sa)
        if (!sb.count(c))
            throw std::invalid_argument("event_geometry: inner set must lie inside the outer set");
    const Rect rn = strip_r(n);
    if (std::none_of(sa.begin(), sa.end(), [&](Coord c) { return rn.contains(c); }))
        throw std::invalid_argument("event_geometry: inner set must intersect R_n");

    Rect bb{a[0].x, a[0].y, a[0].x, a[0].y};
    for (Coord c : a) {
        bb.x_min = std::min(bb.x_min, c.x);
        bb.x_max = std::max(bb.x_max, c.x);
        bb.y_min = std::min(bb.y_min, c.y);
        bb.y_max = std::max(bb.y_max, c.y);
    }
    const std::int32_t diam = std::max(bb.x_max - bb.x_min, bb.y_max - bb.y_min);
    EventGeometry g;
    g.r = (diam + 1) / 2;
    g.u = {bb.x_max - g.r, bb.y_max - g.r};  // lexicographically least valid center

    const std::int32_t half = n / 2;
    g.v = {g.u.x, 2 * std::abs(g.u.y) <= n ? 0 : n};

    const Rect sn = strip_s(n);
    const std::int32_t bound = 7 * n + 2;
    const std::int32_t s_in = grow_ball(
        g.u, 0, bound, [&](Coord c) { return sn.contains(c) && sb.count(c) != 0; });
    g.R = std::max(s_in, g.r);

    g.r_half = std::min(g.R + linf_dist(g.u, g.v), half);
    const std::int32_t s_v =
        grow_ball(g.v, 0, bound, [&](Coord c) { return sb.count(c) != 0; });
    g.R_half = std::max(std::min(s_v, half), g.r_half);
    return g;
}

namespace {

bool defected_arms_hold(const SiteConfig& omega, Coord center, std::int32_t inner,
                        std::int32_t outer, ArmVariant variant, const char* fn) {
    if (inner >= outer) return true;  // empty annulus, event trivially holds
    Rect need = ball(center, outer);
    if (variant == ArmVariant::half_plane_above) need.y_min = center.y;
    if (variant == ArmVariant::half_plane_below) need.y_max = center.y;
    const Rect& dom = omega.domain();
    if (need.x_min < dom.x_min || need.x_max > dom.x_max || need.y_min < dom.y_min ||
        need.y_max > dom.y_max)
        throw std::invalid_argument(std::string(fn) + ": omega domain does not cover the annulus");
    const char* name = variant == ArmVariant::full_plane ? "Arm6" : "Arm4hp";
    ArmQuery q{center, inner, outer, canonical_sequence(name), variant, true};
    return has_defected_arm_event(omega, q);
}

}  // namespace

bool verify_passage_arms(const PassageSample& sample, Coord u, std::int32_t inner,
                         std::int32_t outer) {
    if (sample.n < 1) throw std::invalid_argument("verify_passage_arms: empty sample");
    if (inner < 0 || inner > outer)
        throw std::invalid_argument("verify_passage_arms: need 0 <= inner <= outer");
    bool hit = false, ring = false;
    for (Coord x : sample.passage_points) {
        const std::int32_t d = linf_dist(x, u);
        if (d <= inner) hit = true;
        else if (d <= outer) ring = true;
    }
    if (!hit)
        throw std::invalid_argument("verify_passage_arms: inner ball holds no passage point");
    if (ring)
        throw std::invalid_argument("verify_passage_arms: annulus holds a passage point");

    const std::int32_t n = sample.n;
    if ((u.y == 0 || u.y == n) && 2 * outer <= n) {
        const ArmVariant variant =
            u.y == 0 ? ArmVariant::half_plane_above : ArmVariant::half_plane_below;
        return defected_arms_hold(sample.omega, u, inner, outer, variant, "verify_passage_arms");
    }
    const Rect sn = strip_s(n);
    const Rect bl = ball(u, outer);
    if (!sn.contains(bl))
        throw std::invalid_argument(
            "verify_passage_arms: ball neither inside S_n nor on the strip boundary");
    return defected_arms_hold(sample.omega, u, inner, outer, ArmVariant::full_plane,
                              "verify_passage_arms");
}

bool verify_pair_arms(const PassageSample& sample, const std::vector<Coord>& a,
                      const std::vector<Coord>& b) {
    const EventGeometry g = event_geometry(a, b, sample.n);
    const std::set<Coord> sa = as_set(a), sb = as_set(b);
    bool hit = false;
    for (Coord x : sample.passage_points) {
        if (sa.count(x)) hit = true;
        else if (sb.count(x))
            throw std::invalid_argument("verify_pair_arms: outer set holds a stray passage point");
    }
    if (!hit) throw std::invalid_argument("verify_pair_arms: inner set holds no passage point");

    if (!defected_arms_hold(sample.omega, g.u, g.r, g.R, ArmVariant::full_plane,
                            "verify_pair_arms"))
        return false;
    const ArmVariant variant =
        g.v.y == 0 ? ArmVariant::half_plane_above : ArmVariant::half_plane_below;
    return defected_arms_hold(sample.omega, g.v, g.r_half, g.R_half, variant, "verify_pair_arms");
}

void write_passage_json(const PassageSample& sample, std::uint64_t seed, std::ostream& os) {
    nlohmann::json j;
    j["n"] = sample.n;
    j["seed"] = seed;
    j["passage_count"] = sample.passage_points.size();
    auto coords = nlohmann::json::array();
    for (Coord c : sample.passage_points) coords.push_back({c.x, c.y});
    j["passage_points"] = std::move(coords);
    if (sample.gamma.empty()) {
        j["cost"] = nullptr;
    } else {
        const std::set<Coord> enh = as_set(sample.enhanced);
        std::int64_t cost = 0;
        for (Coord c : sample.gamma) cost += enh.count(c) ? 1 : 0;
        j["cost"] = cost;
    }
    j["gamma_length"] = sample.gamma.size();
    os << j.dump(2) << '\n';
}

}  // namespace sdplab
