#ifndef SDPLAB_PASSAGE_HPP
#define SDPLAB_PASSAGE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

// One (omega, sigma) pair pushed through the whole pipeline at scale n.
// enhanced and passage_points are sorted; gamma runs from the top row of S_n
// to the bottom row and is empty when omega_tilde_delta has no vertical
// crossing.  passage_points is empty unless omega crosses S_n horizontally
// and omega_tilde_delta crosses it vertically.
struct PassageSample {
    std::int32_t n = 0;
    SiteConfig omega;
    SiteConfig sigma;
    SiteConfig omega_tilde;
    SiteConfig omega_tilde_delta;
    std::vector<Coord> enhanced;
    std::vector<Coord> gamma;
    std::vector<Coord> passage_points;
};

// Geometry derived from a nested pair of site sets: the smallest ball cover
// of the inner set, its projection to the nearer strip edge, and the clamped
// radii of the two arm annuli.
struct EventGeometry {
    Coord u{0, 0};
    Coord v{0, 0};
    std::int32_t r = 0;
    std::int32_t R = 0;
    std::int32_t r_half = 0;  // inner radius of the half-plane annulus at v
    std::int32_t R_half = 0;  // outer radius, at most n/2
};

// Sites of R_n closed in omega_tilde but open in omega_tilde_delta, as an
// open-site mask on S_n.
SiteConfig enhancement_mask(const SiteConfig& omega_tilde, const SiteConfig& omega_tilde_delta,
                            std::int32_t n);

// Minimum number of mask-open sites on an omega_tilde_delta-open vertical
// crossing of S_n; nullopt when no such crossing exists.  Enhanced sites
// count 1 wherever they appear on the path, endpoints included.
std::optional<std::int32_t> min_enhanced_crossing_cost(const SiteConfig& omega_tilde_delta,
                                                       const SiteConfig& enhanced, std::int32_t n);

// The canonical minimal-cost crossing, self-avoiding, top row to bottom row.
// Uniqueness convention: deterministic zero-one BFS seeded from the top row
// scanned left to right, neighbors explored in the order (left, down, up,
// right), parent-pointer reconstruction from the leftmost minimal bottom
// endpoint.
std::optional<std::vector<Coord>> leftmost_minimal_crossing(const SiteConfig& omega_tilde_delta,
                                                            const SiteConfig& enhanced,
                                                            std::int32_t n);

// chi -> omega_tilde -> omega_tilde_delta -> gamma -> passage points.
// Domains of omega and sigma must cover S_n.
PassageSample passage_set(const SiteConfig& omega, const SiteConfig& sigma, std::int32_t n);

// u, v, r, R, r', R' for a nested pair a within b, both intersecting R_n.
EventGeometry event_geometry(const std::vector<Coord>& a, const std::vector<Coord>& b,
                             std::int32_t n);

// Passage points carry six arms, four on the strip boundary, with one defect
// allowed.  Checks the defected arm event around u on sample.omega: the full
// plane six-arm event when ball(u, outer) lies inside S_n, the half-plane
// four-arm event when u lies on the strip boundary with outer <= n/2.
// Preconditions (violations throw): ball(u, inner) holds a passage point,
// the annulus inner..outer holds none, one of the two cases applies, and the
// queried cells are covered by sample.omega's domain.
bool verify_passage_arms(const PassageSample& sample, Coord u, std::int32_t inner,
                         std::int32_t outer);

// Composite form for a nested pair: both defected arm events of the derived
// geometry hold on sample.omega.  Preconditions as for event_geometry, plus
// a passage point in a and none in b minus a.
bool verify_pair_arms(const PassageSample& sample, const std::vector<Coord>& a,
                      const std::vector<Coord>& b);

// JSON record: n, seed, passage point count and coordinates, crossing cost
// (null when gamma is empty), gamma length.
void write_passage_json(const PassageSample& sample, std::uint64_t seed, std::ostream& os);

}  // namespace sdplab

#endif
