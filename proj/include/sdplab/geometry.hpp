#ifndef SDPLAB_GEOMETRY_HPP
#define SDPLAB_GEOMETRY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace sdplab {

// Sites live on the square lattice with signed 32-bit coordinates.
// Distances are L-infinity throughout; "primal" adjacency is the four axis
// neighbours, "matching" adjacency the eight kings-move neighbours.
struct Coord {
    std::int32_t x = 0;
    std::int32_t y = 0;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class Adjacency { primal, matching };
enum class Polarity { open_sites, closed_sites };
enum class Axis { horizontal, vertical };

inline std::int32_t linf_dist(Coord a, Coord b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// Closed integer rectangle [x_min,x_max] x [y_min,y_max].
struct Rect {
    std::int32_t x_min = 0, y_min = 0, x_max = -1, y_max = -1;

    static Rect box(std::int32_t x0, std::int32_t y0, std::int32_t x1, std::int32_t y1) {
        if (x1 < x0 || y1 < y0) throw std::invalid_argument("Rect: empty bounds");
        return Rect{x0, y0, x1, y1};
    }
    bool contains(Coord c) const {
        return c.x >= x_min && c.x <= x_max && c.y >= y_min && c.y <= y_max;
    }
    bool contains(const Rect& o) const {
        return o.x_min >= x_min && o.x_max <= x_max && o.y_min >= y_min && o.y_max <= y_max;
    }
    std::int64_t width() const { return std::int64_t(x_max) - x_min + 1; }
    std::int64_t height() const { return std::int64_t(y_max) - y_min + 1; }
    std::int64_t area() const { return width() * height(); }
    friend bool operator==(const Rect&, const Rect&) = default;
};

// B_r(u) = ([-r,r]^2) + u.  r = 0 is the singleton {u}.
inline Rect ball(Coord u, std::int32_t r) {
    if (r < 0) throw std::invalid_argument("ball: negative radius");
    return Rect{u.x - r, u.y - r, u.x + r, u.y + r};
}

inline const Coord primal_steps[4] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};  // left, down, up, right
inline const Coord matching_steps[8] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                        {1, 0},   {-1, 1}, {0, 1},  {1, 1}};

inline std::vector<Coord> neighbors(Coord c, Adjacency adj) {
    std::vector<Coord> out;
    if (adj == Adjacency::primal) {
        out.reserve(4);
        for (auto d : primal_steps) out.push_back({c.x + d.x, c.y + d.y});
    } else {
        out.reserve(8);
        for (auto d : matching_steps) out.push_back({c.x + d.x, c.y + d.y});
    }
    return out;
}

// Outer boundary dA: sites outside A primal-adjacent to A.
// For a rectangle this is the surrounding ring minus its four corners.
inline std::vector<Coord> outer_boundary(const Rect& r) {
    std::vector<Coord> out;
    out.reserve(std::size_t(2 * (r.width() + r.height())));
    for (std::int32_t x = r.x_min; x <= r.x_max; ++x) {
        out.push_back({x, r.y_min - 1});
        out.push_back({x, r.y_max + 1});
    }
    for (std::int32_t y = r.y_min; y <= r.y_max; ++y) {
        out.push_back({r.x_min - 1, y});
        out.push_back({r.x_max + 1, y});
    }
    return out;
}

// Internal boundary d_i A = d(A^c): sites of A primal-adjacent to the complement.
// For a rectangle, the full perimeter ring.
inline std::vector<Coord> internal_boundary(const Rect& r) {
    std::vector<Coord> out;
    if (r.width() <= 2 || r.height() <= 2) {
        for (std::int32_t y = r.y_min; y <= r.y_max; ++y)
            for (std::int32_t x = r.x_min; x <= r.x_max; ++x) out.push_back({x, y});
        return out;
    }
    for (std::int32_t x = r.x_min; x <= r.x_max; ++x) {
        out.push_back({x, r.y_min});
        out.push_back({x, r.y_max});
    }
    for (std::int32_t y = r.y_min + 1; y <= r.y_max - 1; ++y) {
        out.push_back({r.x_min, y});
        out.push_back({r.x_max, y});
    }
    return out;
}

// Generic set versions, brute force; fine for boundaries of small sets.
std::vector<Coord> outer_boundary(const std::vector<Coord>& a);
std::vector<Coord> internal_boundary(const std::vector<Coord>& a);

// Sides of a rectangle as full site rows/columns.
enum class Side { left, right, top, bottom };
inline std::vector<Coord> side_sites(const Rect& r, Side s) {
    std::vector<Coord> out;
    switch (s) {
        case Side::left:
            for (std::int32_t y = r.y_min; y <= r.y_max; ++y) out.push_back({r.x_min, y});
            break;
        case Side::right:
            for (std::int32_t y = r.y_min; y <= r.y_max; ++y) out.push_back({r.x_max, y});
            break;
        case Side::bottom:
            for (std::int32_t x = r.x_min; x <= r.x_max; ++x) out.push_back({x, r.y_min});
            break;
        case Side::top:
            for (std::int32_t x = r.x_min; x <= r.x_max; ++x) out.push_back({x, r.y_max});
            break;
    }
    return out;
}

}  // namespace sdplab

#endif
