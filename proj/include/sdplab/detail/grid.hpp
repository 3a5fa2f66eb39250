#ifndef SDPLAB_DETAIL_GRID_HPP
#define SDPLAB_DETAIL_GRID_HPP

#include <cstdint>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab::detail {

// Flat byte grid over a rectangle; the workhorse for BFS kernels.
// Index space is local: i = (x - x_min) + W * (y - y_min).
struct Grid {
    Rect r;
    std::int32_t W = 0, H = 0;
    std::vector<std::uint8_t> v;

    Grid() = default;
    Grid(const Rect& rect, std::uint8_t fill = 0)
        : r(rect), W(std::int32_t(rect.width())), H(std::int32_t(rect.height())),
          v(std::size_t(rect.area()), fill) {}

    static Grid from_config(const SiteConfig& cfg, const Rect& rect) {
        Grid g(rect);
        std::size_t i = 0;
        for (std::int32_t y = rect.y_min; y <= rect.y_max; ++y)
            for (std::int32_t x = rect.x_min; x <= rect.x_max; ++x, ++i)
                g.v[i] = cfg.get({x, y}) ? 1 : 0;
        return g;
    }

    bool in(std::int32_t x, std::int32_t y) const {
        return x >= r.x_min && x <= r.x_max && y >= r.y_min && y <= r.y_max;
    }
    std::size_t idx(std::int32_t x, std::int32_t y) const {
        return std::size_t(y - r.y_min) * std::size_t(W) + std::size_t(x - r.x_min);
    }
    Coord coord(std::size_t i) const {
        return {r.x_min + std::int32_t(i % std::size_t(W)),
                r.y_min + std::int32_t(i / std::size_t(W))};
    }
    std::uint8_t at(std::int32_t x, std::int32_t y) const { return v[idx(x, y)]; }
};

}  // namespace sdplab::detail

#endif
