#include "sdplab/merger.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include <json.hpp>

#include "sdplab/sdp.hpp"

namespace sdplab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = int(i);
    }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

std::vector<Coord> sorted_unique(std::vector<Coord> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

MergerTree build_merger_tree(const std::vector<Coord>& points) {
    if (points.empty()) throw std::invalid_argument("build_merger_tree: need at least one point");
    MergerTree tree;
    tree.vertices = sorted_unique(points);
    tree.root = tree.vertices.front();
    const auto& v = tree.vertices;

    // All pairs ordered by (dist, a, b).  A single greedy pass over this list
    // equals the per-distance construction: within one distance step it visits
    // the candidates in lexicographic order and keeps each one that leaves the
    // edge set acyclic, which is exactly the tie-break rule.
    struct Cand {
        std::int32_t dist;
        std::int32_t i, j;  // i < j, hence v[i] < v[j]
    };
    std::vector<Cand> cands;
    cands.reserve(v.size() * (v.size() - 1) / 2);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            cands.push_back({linf_dist(v[i], v[j]), std::int32_t(i), std::int32_t(j)});
    std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
        return std::tie(l.dist, l.i, l.j) < std::tie(r.dist, r.i, r.j);
    });

    UnionFind uf(v.size());
    tree.edges.reserve(v.size() - 1);
    for (const auto& c : cands) {
        if (!uf.unite(c.i, c.j)) continue;
        tree.edges.push_back({v[std::size_t(c.i)], v[std::size_t(c.j)], c.dist, c.dist / 2});
        if (tree.edges.size() + 1 == v.size()) break;
    }
    return tree;
}

std::vector<std::int32_t> merger_times(const MergerTree& tree) {
    std::vector<std::int32_t> times;
    times.reserve(tree.edges.size());
    for (const auto& e : tree.edges) times.push_back(e.time);
    std::sort(times.begin(), times.end());
    return times;
}

CoalescenceTree coalescence_tree(const MergerTree& tree) {
    const auto& v = tree.vertices;
    CoalescenceTree out;
    out.nodes.reserve(2 * v.size() - 1);
    std::vector<Rect> bbox;
    bbox.reserve(2 * v.size() - 1);
    for (auto c : v) {
        out.nodes.push_back({{c}, 0, 0, -1, -1});
        bbox.push_back(Rect{c.x, c.y, c.x, c.y});
    }

    UnionFind uf(v.size());
    std::vector<int> comp_node(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) comp_node[i] = int(i);
    auto index_of = [&](Coord c) {
        return int(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };

    // Edges arrive in construction order, so merge times are nondecreasing and
    // each internal node's time is the largest edge label inside it.
    for (const auto& e : tree.edges) {
        int ra = uf.find(index_of(e.a));
        int rb = uf.find(index_of(e.b));
        int na = comp_node[ra], nb = comp_node[rb];
        CoalescenceNode node;
        node.members.resize(out.nodes[std::size_t(na)].members.size() +
                            out.nodes[std::size_t(nb)].members.size());
        std::merge(out.nodes[std::size_t(na)].members.begin(),
                   out.nodes[std::size_t(na)].members.end(),
                   out.nodes[std::size_t(nb)].members.begin(),
                   out.nodes[std::size_t(nb)].members.end(), node.members.begin());
        node.merge_time = e.time;
        Rect bb{std::min(bbox[std::size_t(na)].x_min, bbox[std::size_t(nb)].x_min),
                std::min(bbox[std::size_t(na)].y_min, bbox[std::size_t(nb)].y_min),
                std::max(bbox[std::size_t(na)].x_max, bbox[std::size_t(nb)].x_max),
                std::max(bbox[std::size_t(na)].y_max, bbox[std::size_t(nb)].y_max)};
        node.half_diam = std::int32_t((std::max(bb.width(), bb.height()) - 1) / 2);
        node.left = na;
        node.right = nb;
        out.nodes.push_back(std::move(node));
        bbox.push_back(bb);
        uf.unite(ra, rb);
        comp_node[uf.find(ra)] = int(out.nodes.size()) - 1;
    }
    out.root = int(out.nodes.size()) - 1;
    return out;
}

std::int64_t enumerate_sets_with_times(std::int32_t n, std::vector<std::int32_t> times) {
    if (n < 1 || n > 3)
        throw std::invalid_argument("enumerate_sets_with_times: n in [1,3] required");
    if (times.size() > 2)
        throw std::invalid_argument("enumerate_sets_with_times: at most two merger times");
    std::sort(times.begin(), times.end());

    const Rect r = strip_r(n);
    std::vector<Coord> sites;
    sites.reserve(std::size_t(r.area()));
    for (std::int32_t x = r.x_min; x <= r.x_max; ++x)
        for (std::int32_t y = r.y_min; y <= r.y_max; ++y) sites.push_back({x, y});

    const std::size_t want = times.size() + 1;
    std::int64_t count = 0;
    std::vector<Coord> pick(want);
    auto choose = [&](auto&& self, std::size_t next, std::size_t depth) -> void {
        if (depth == want) {
            if (merger_times(build_merger_tree(pick)) == times) ++count;
            return;
        }
        for (std::size_t i = next; i + (want - depth) <= sites.size(); ++i) {
            pick[depth] = sites[i];
            self(self, i + 1, depth + 1);
        }
    };
    choose(choose, 0, 0);
    return count;
}

std::int64_t distinct_orderings(const std::vector<std::int32_t>& times) {
    if (times.size() > 20)
        throw std::invalid_argument("distinct_orderings: at most 20 entries");
    std::vector<std::int32_t> s(times);
    std::sort(s.begin(), s.end());
    std::int64_t perms = factorial(int(s.size()));
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        perms /= factorial(int(j - i));
        i = j;
    }
    return perms;
}

double count_bound(std::int32_t n, const std::vector<std::int32_t>& times) {
    double bound = double(distinct_orderings(times));
    bound *= std::pow(32.0, double(times.size() + 1));
    bound *= double(n) * double(n);
    for (auto d : times) bound *= double(std::max(d, std::int32_t(1)));
    return bound;
}

std::int64_t count_rooted_trees(int k) {
    if (k < 1 || k > 8) throw std::invalid_argument("count_rooted_trees: k in [1,8] supported");
    // forms[s]: canonical strings of rooted trees on s vertices, sorted.  A
    // form is "(" + the children's forms joined in nondecreasing order + ")",
    // so equal strings are exactly isomorphic trees.
    std::vector<std::vector<std::string>> forms(std::size_t(k) + 1);
    forms[1] = {"()"};
    for (int s = 2; s <= k; ++s) {
        std::set<std::string> made;
        std::string acc;
        auto extend = [&](auto&& self, int remaining, int min_size, std::size_t min_idx) -> void {
            if (remaining == 0) {
                made.insert("(" + acc + ")");
                return;
            }
            for (int c = min_size; c <= remaining; ++c) {
                const auto& pool = forms[std::size_t(c)];
                for (std::size_t i = (c == min_size ? min_idx : 0); i < pool.size(); ++i) {
                    acc += pool[i];
                    self(self, remaining - c, c, i);
                    acc.resize(acc.size() - pool[i].size());
                }
            }
        };
        extend(extend, s - 1, 1, 0);
        forms[std::size_t(s)].assign(made.begin(), made.end());
    }
    return std::int64_t(forms[std::size_t(k)].size());
}

std::int64_t catalan(int k) {
    if (k < 0 || k > 30) throw std::invalid_argument("catalan: k in [0,30] supported");
    // Prefix products are the integers C(k+i, i); the peak stays below 2^63
    // through k = 30.
    unsigned long long c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (unsigned long long)(k + i) / (unsigned long long)(i);
    return std::int64_t(c / (unsigned long long)(k + 1));
}

double first_merger_product(const std::vector<Coord>& points,
                            const std::vector<double>& pi6_by_radius, double delta) {
    if (points.empty())
        throw std::invalid_argument("first_merger_product: need at least one point");
    if (pi6_by_radius.empty())
        throw std::invalid_argument("first_merger_product: need a nonempty probability table");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("first_merger_product: delta in [0,1] required");
    const auto pts = sorted_unique(points);
    double product = 1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t radius;
        if (pts.size() == 1) {
            radius = pi6_by_radius.size() - 1;  // isolated point: deepest tabulated radius
        } else {
            std::int32_t nearest = std::numeric_limits<std::int32_t>::max();
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (j != i) nearest = std::min(nearest, linf_dist(pts[i], pts[j]));
            radius = std::size_t(nearest / 2);
            if (radius >= pi6_by_radius.size())
                throw std::invalid_argument("first_merger_product: radius beyond the table");
        }
        product *= delta * pi6_by_radius[radius];
    }
    return product;
}

void write_merger_json(const MergerTree& tree, std::ostream& os) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (auto c : tree.vertices) j["vertices"].push_back({c.x, c.y});
    j["root"] = {tree.root.x, tree.root.y};
    j["edges"] = nlohmann::json::array();
    for (const auto& e : tree.edges)
        j["edges"].push_back({{"a", {e.a.x, e.a.y}},
                              {"b", {e.b.x, e.b.y}},
                              {"dist", e.dist},
                              {"time", e.time}});
    os << j.dump(2) << '\n';
}

void write_enumeration_csv(const std::vector<EnumerationRow>& rows, std::ostream& os) {
    os << "n,times,count,bound\n";
    for (const auto& row : rows) {
        os << row.n << ',';
        for (std::size_t i = 0; i < row.times.size(); ++i) {
            if (i > 0) os << '|';
            os << row.times[i];
        }
        std::ostringstream bound;
        bound << std::setprecision(15) << row.bound;
        os << ',' << row.count << ',' << bound.str() << '\n';
    }
}

}  // namespace sdplab
