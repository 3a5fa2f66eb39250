#include "sdplab/forest_fire.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sdplab {

FireLog simulate(const Rect& box, int threshold, double t_max, const RandomSource& source,
                 SizeMetric metric) {
    if (threshold < 2) throw std::invalid_argument("simulate: threshold >= 2 required");
    if (!(t_max > 0)) throw std::invalid_argument("simulate: t_max > 0 required");

    FireLog log;
    log.box = box;
    log.threshold = threshold;
    log.t_max = t_max;
    log.metric = metric;

    const std::size_t cells = std::size_t(box.area());
    const std::size_t width = std::size_t(box.width());
    auto idx = [&](Coord c) {
        return std::size_t(c.y - box.y_min) * width + std::size_t(c.x - box.x_min);
    };
    auto at = [&](std::size_t i) {
        return Coord{box.x_min + std::int32_t(i % width), box.y_min + std::int32_t(i / width)};
    };

    auto eng = source.engine();
    auto exp_delay = [&] {
        double u;
        do u = eng.next_unit(); while (u == 0.0);  // keeps every delay positive
        return -std::log(u);
    };

    using Entry = std::pair<double, std::size_t>;  // (opening time, cell)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (std::size_t i = 0; i < cells; ++i) heap.push({exp_delay(), i});

    // Union-find over opening epochs: each opening allocates a fresh node, so
    // a burned cluster's stale entries are simply never reachable again.  No
    // relabeling is needed elsewhere: a maximal open cluster has no open
    // neighbors, so burning it cannot strand any other label.
    std::vector<std::int64_t> node_of(cells, -1);  // -1 while closed
    std::vector<std::int64_t> parent;
    std::vector<std::int64_t> weight;
    std::vector<Rect> bounds;
    std::vector<std::int32_t> cdist;
    auto find = [&](std::int64_t i) {
        while (parent[std::size_t(i)] != i) {
            parent[std::size_t(i)] = parent[std::size_t(parent[std::size_t(i)])];
            i = parent[std::size_t(i)];
        }
        return i;
    };
    auto unite = [&](std::int64_t a, std::int64_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (weight[std::size_t(a)] < weight[std::size_t(b)]) std::swap(a, b);
        parent[std::size_t(b)] = a;
        weight[std::size_t(a)] += weight[std::size_t(b)];
        bounds[std::size_t(a)] =
            Rect{std::min(bounds[std::size_t(a)].x_min, bounds[std::size_t(b)].x_min),
                 std::min(bounds[std::size_t(a)].y_min, bounds[std::size_t(b)].y_min),
                 std::max(bounds[std::size_t(a)].x_max, bounds[std::size_t(b)].x_max),
                 std::max(bounds[std::size_t(a)].y_max, bounds[std::size_t(b)].y_max)};
        cdist[std::size_t(a)] = std::min(cdist[std::size_t(a)], cdist[std::size_t(b)]);
        return a;
    };

    const std::int64_t merge_cap = 4 * std::int64_t(threshold - 1) + 1;
    while (!heap.empty() && heap.top().first <= t_max) {
        const auto [now, cell] = heap.top();
        heap.pop();
        const Coord c = at(cell);

        std::int64_t node = std::int64_t(parent.size());
        parent.push_back(node);
        weight.push_back(1);
        bounds.push_back(Rect{c.x, c.y, c.x, c.y});
        cdist.push_back(linf_dist(c, {0, 0}));
        node_of[cell] = node;
        for (Coord step : primal_steps) {
            const Coord d{c.x + step.x, c.y + step.y};
            if (!box.contains(d)) continue;
            const std::int64_t other = node_of[idx(d)];
            if (other >= 0) node = unite(node, other);
        }

        const std::int64_t root = find(node);
        const std::int64_t measured =
            metric == SizeMetric::sites
                ? weight[std::size_t(root)]
                : std::max(bounds[std::size_t(root)].width(), bounds[std::size_t(root)].height()) -
                      1;
        if (measured < threshold) continue;

        // Burn: collect the cluster around the fresh opening and close it.
        std::vector<Coord> members;
        std::vector<std::size_t> stack{cell};
        node_of[cell] = -1;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            const Coord m = at(i);
            members.push_back(m);
            for (Coord step : primal_steps) {
                const Coord d{m.x + step.x, m.y + step.y};
                if (!box.contains(d)) continue;
                const std::size_t di = idx(d);
                if (node_of[di] >= 0) {
                    node_of[di] = -1;
                    stack.push_back(di);
                }
            }
        }
        if (std::int64_t(members.size()) != weight[std::size_t(root)])
            throw std::logic_error("simulate: cluster accounting mismatch");
        // One opening merges at most four clusters, each below threshold.
        if (metric == SizeMetric::sites && std::int64_t(members.size()) > merge_cap)
            throw std::logic_error("simulate: cluster size exceeded the merge bound");
        std::sort(members.begin(), members.end());

        FireEvent ev;
        ev.time = now;
        ev.cluster_size = measured;
        ev.bbox = bounds[std::size_t(root)];
        ev.center_dist = cdist[std::size_t(root)];
        ev.cluster_sites = std::move(members);
        for (Coord m : ev.cluster_sites) heap.push({now + exp_delay(), idx(m)});
        log.events.push_back(std::move(ev));
    }

    SiteConfig snap(box);
    for (std::size_t i = 0; i < cells; ++i)
        if (node_of[i] >= 0) snap.set(at(i), true);
    log.final_config = std::move(snap);
    return log;
}

std::int64_t fires_in_ball(const FireLog& log, std::int32_t m, double t) {
    if (m < 0) throw std::invalid_argument("fires_in_ball: m >= 0 required");
    if (!log.box.contains(ball({0, 0}, m)))
        throw std::invalid_argument("fires_in_ball: ball not inside the box");
    std::int64_t count = 0;
    for (const auto& ev : log.events) {
        if (ev.time > t) break;
        if (ev.center_dist <= m) ++count;
    }
    return count;
}

double critical_time(double p_c_value) {
    if (!(p_c_value > 0.0) || !(p_c_value < 1.0))
        throw std::invalid_argument("critical_time: probability in (0,1) required");
    return -std::log1p(-p_c_value);
}

void write_fire_log(const FireLog& log, std::ostream& os) {
    // Largest origin ball inside the box; negative when the origin is outside.
    const std::int32_t m_max = std::min(std::min(-log.box.x_min, log.box.x_max),
                                        std::min(-log.box.y_min, log.box.y_max));
    nlohmann::json meta;
    meta["box"] = {log.box.x_min, log.box.y_min, log.box.x_max, log.box.y_max};
    meta["threshold"] = log.threshold;
    meta["t_max"] = log.t_max;
    meta["metric"] = log.metric == SizeMetric::sites ? "sites" : "diameter";
    meta["events"] = log.events.size();
    os << meta.dump() << '\n';
    for (const auto& ev : log.events) {
        nlohmann::json j;
        j["time"] = ev.time;
        j["size"] = ev.cluster_size;
        j["bbox"] = {ev.bbox.x_min, ev.bbox.y_min, ev.bbox.x_max, ev.bbox.y_max};
        auto touches = nlohmann::json::array();
        for (std::int32_t m = 0; m <= m_max; ++m) touches.push_back(ev.center_dist <= m);
        j["touches"] = touches;
        os << j.dump() << '\n';
    }
}

}  // namespace sdplab
