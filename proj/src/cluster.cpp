#include "sdplab/cluster.hpp"

#include <ostream>

#include "sdplab/detail/grid.hpp"

namespace sdplab {

using detail::Grid;

namespace {

// Passable = site has the polarity's value.
Grid passable_grid(const SiteConfig& cfg, const Rect& region, Polarity pol) {
    Grid g = Grid::from_config(cfg, region);
    if (pol == Polarity::closed_sites)
        for (auto& b : g.v) b ^= 1;
    return g;
}

template <typename Visit>
void for_neighbors(const Grid& g, std::size_t i, Adjacency adj, Visit&& visit) {
    Coord c = g.coord(i);
    const Coord* steps = adj == Adjacency::primal ? primal_steps : matching_steps;
    int n = adj == Adjacency::primal ? 4 : 8;
    for (int k = 0; k < n; ++k) {
        std::int32_t x = c.x + steps[k].x, y = c.y + steps[k].y;
        if (g.in(x, y)) visit(g.idx(x, y));
    }
}

}  // namespace

ClusterLabels label_clusters(const SiteConfig& cfg, const Rect& region, Polarity pol,
                             Adjacency adj) {
    Grid g = passable_grid(cfg, region, pol);
    ClusterLabels out;
    out.region = region;
    out.label.assign(g.v.size(), -1);
    std::vector<std::size_t> queue;
    for (std::size_t s = 0; s < g.v.size(); ++s) {
        if (!g.v[s] || out.label[s] != -1) continue;
        std::int32_t id = out.cluster_count++;
        std::int64_t size = 0;
        Coord c0 = g.coord(s);
        Rect bb{c0.x, c0.y, c0.x, c0.y};
        queue.clear();
        queue.push_back(s);
        out.label[s] = id;
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            ++size;
            Coord c = g.coord(i);
            bb.x_min = std::min(bb.x_min, c.x);
            bb.x_max = std::max(bb.x_max, c.x);
            bb.y_min = std::min(bb.y_min, c.y);
            bb.y_max = std::max(bb.y_max, c.y);
            for_neighbors(g, i, adj, [&](std::size_t j) {
                if (g.v[j] && out.label[j] == -1) {
                    out.label[j] = id;
                    queue.push_back(j);
                }
            });
        }
        out.sizes.push_back(size);
        out.bboxes.push_back(bb);
    }
    return out;
}

void write_cluster_csv(const ClusterLabels& labels, std::ostream& os) {
    os << "label,size,x_min,y_min,x_max,y_max\n";
    for (std::int32_t i = 0; i < labels.cluster_count; ++i) {
        const Rect& b = labels.bboxes[std::size_t(i)];
        os << i << ',' << labels.sizes[std::size_t(i)] << ',' << b.x_min << ',' << b.y_min
           << ',' << b.x_max << ',' << b.y_max << '\n';
    }
}

namespace {

bool grid_connected(const Grid& g, Adjacency adj, const std::vector<std::size_t>& from,
                    const std::vector<std::uint8_t>& is_target) {
    std::vector<std::uint8_t> seen(g.v.size(), 0);
    std::vector<std::size_t> queue;
    for (auto s : from) {
        if (!g.v[s] || seen[s]) continue;
        if (is_target[s]) return true;
        seen[s] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        bool hit = false;
        for_neighbors(g, i, adj, [&](std::size_t j) {
            if (!g.v[j] || seen[j]) return;
            if (is_target[j]) {
                hit = true;
                return;
            }
            seen[j] = 1;
            queue.push_back(j);
        });
        if (hit) return true;
    }
    return false;
}

}  // namespace

bool crosses(const SiteConfig& cfg, const Rect& rect, Axis axis, Polarity pol, Adjacency adj) {
    Grid g = passable_grid(cfg, rect, pol);
    std::vector<std::size_t> from;
    std::vector<std::uint8_t> target(g.v.size(), 0);
    if (axis == Axis::horizontal) {
        for (std::int32_t y = rect.y_min; y <= rect.y_max; ++y) {
            from.push_back(g.idx(rect.x_min, y));
            target[g.idx(rect.x_max, y)] = 1;
        }
    } else {
        for (std::int32_t x = rect.x_min; x <= rect.x_max; ++x) {
            from.push_back(g.idx(x, rect.y_max));
            target[g.idx(x, rect.y_min)] = 1;
        }
    }
    return grid_connected(g, adj, from, target);
}

bool connected_in(const SiteConfig& cfg, const Rect& region, const std::vector<Coord>& a,
                  const std::vector<Coord>& b, Polarity pol, Adjacency adj) {
    Grid g = passable_grid(cfg, region, pol);
    std::vector<std::size_t> from;
    std::vector<std::uint8_t> target(g.v.size(), 0);
    for (auto c : b)
        if (region.contains(c)) target[g.idx(c.x, c.y)] = 1;
    for (auto c : a)
        if (region.contains(c)) from.push_back(g.idx(c.x, c.y));
    return grid_connected(g, adj, from, target);
}

bool has_open_circuit(const SiteConfig& cfg, std::int32_t n) {
    if (n < 1) throw std::invalid_argument("has_open_circuit: n >= 1 required");
    if (!cfg.domain().contains(ball({0, 0}, 2 * n)))
        throw std::invalid_argument("has_open_circuit: domain must cover B_2n");
    Rect ann = ball({0, 0}, 2 * n);
    Grid g = passable_grid(cfg, ann, Polarity::closed_sites);
    // Blank the hole so closed sites of B_{n-1} cannot carry the dual path.
    for (std::int32_t y = -(n - 1); y <= n - 1; ++y)
        for (std::int32_t x = -(n - 1); x <= n - 1; ++x) g.v[g.idx(x, y)] = 0;
    std::vector<std::size_t> from;
    std::vector<std::uint8_t> target(g.v.size(), 0);
    for (std::int32_t y = ann.y_min; y <= ann.y_max; ++y)
        for (std::int32_t x = ann.x_min; x <= ann.x_max; ++x) {
            std::int32_t d = linf_dist({x, y}, {0, 0});
            if (d == n) from.push_back(g.idx(x, y));
            if (d == 2 * n) target[g.idx(x, y)] = 1;
        }
    return !grid_connected(g, Adjacency::matching, from, target);
}

bool framed_circuit_event(const SiteConfig& cfg, std::int32_t n) {
    if (n < 1) throw std::invalid_argument("framed_circuit_event: n >= 1 required");
    if (!cfg.domain().contains(ball({0, 0}, 3 * n)))
        throw std::invalid_argument("framed_circuit_event: domain must cover B_3n");
    Rect bottom = Rect::box(-3 * n, -2 * n, 3 * n, -n);
    Rect top = Rect::box(-3 * n, n, 3 * n, 2 * n);
    Rect left = Rect::box(-2 * n, -3 * n, -n, 3 * n);
    Rect right = Rect::box(n, -3 * n, 2 * n, 3 * n);
    return crosses(cfg, bottom, Axis::horizontal, Polarity::open_sites, Adjacency::primal) &&
           crosses(cfg, top, Axis::horizontal, Polarity::open_sites, Adjacency::primal) &&
           crosses(cfg, left, Axis::vertical, Polarity::open_sites, Adjacency::primal) &&
           crosses(cfg, right, Axis::vertical, Polarity::open_sites, Adjacency::primal);
}

}  // namespace sdplab
