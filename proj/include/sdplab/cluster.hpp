#ifndef SDPLAB_CLUSTER_HPP
#define SDPLAB_CLUSTER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

// Connected components of the chosen polarity under the chosen adjacency,
// restricted to a rectangular region.  label -1 marks sites of the other
// polarity.
struct ClusterLabels {
    Rect region;
    std::vector<std::int32_t> label;
    std::int32_t cluster_count = 0;
    std::vector<std::int64_t> sizes;
    std::vector<Rect> bboxes;

    std::int32_t at(Coord c) const {
        if (!region.contains(c)) return -1;
        return label[std::size_t(c.y - region.y_min) * std::size_t(region.width()) +
                     std::size_t(c.x - region.x_min)];
    }
};

ClusterLabels label_clusters(const SiteConfig& cfg, const Rect& region, Polarity pol,
                             Adjacency adj);

// CSV rows: label,size,x_min,y_min,x_max,y_max.
void write_cluster_csv(const ClusterLabels& labels, std::ostream& os);

// Ch (horizontal) joins the left and right side columns, Cv the top and
// bottom rows, by a path of the given polarity inside the rectangle.
bool crosses(const SiteConfig& cfg, const Rect& rect, Axis axis, Polarity pol, Adjacency adj);

// Path of the given polarity inside region from a site of a to a site of b.
bool connected_in(const SiteConfig& cfg, const Rect& region, const std::vector<Coord>& a,
                  const std::vector<Coord>& b, Polarity pol, Adjacency adj);

// Open primal circuit surrounding B_{n-1} inside Ann(n,2n) = B_2n \ B_{n-1}.
// Decided by the dual blocking criterion: such a circuit exists exactly when
// no closed matching path joins the inner ring (distance n) to the outer ring
// (distance 2n) of the annulus.
bool has_open_circuit(const SiteConfig& cfg, std::int32_t n);

// Four open crossings framing the annulus: horizontal across
// [-3n,3n]x[-2n,-n] and [-3n,3n]x[n,2n], vertical across [-2n,-n]x[-3n,3n]
// and [n,2n]x[-3n,3n].  Implies has_open_circuit(cfg, n).
bool framed_circuit_event(const SiteConfig& cfg, std::int32_t n);

}  // namespace sdplab

#endif
