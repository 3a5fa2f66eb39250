#ifndef SDPLAB_ARMS_HPP
#define SDPLAB_ARMS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdplab/estimate.hpp"
#include "sdplab/geometry.hpp"
#include "sdplab/rng.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

// Arm colors around an annulus, counter-clockwise: 1 asks for an open path on
// the primal lattice, 0 for a closed path on the matching (8-neighbor) lattice.
struct ColorSequence {
    std::vector<int> colors;

    std::size_t size() const { return colors.size(); }
    bool mixed() const;
    ColorSequence rotated(std::size_t r) const;
    ColorSequence reversed() const;
};

enum class ArmVariant {
    full_plane,
    half_plane_above,  // arms stay in y >= center.y, slots read right to left
    half_plane_below,  // mirror image: y <= center.y
};

struct ArmQuery {
    Coord center{0, 0};
    std::int32_t inner = 1;
    std::int32_t outer = 2;
    ColorSequence sequence;
    ArmVariant variant = ArmVariant::full_plane;
    bool allow_defect = false;
};

// The named sequences used throughout; the five-arm pattern registers as
// "Arm5" and the half-plane ones carry the "hp" suffix.
const std::vector<std::pair<std::string, ColorSequence>>& canonical_sequences();
const ColorSequence& canonical_sequence(std::string_view name);

// Largest number of pairwise vertex-disjoint color-crossings of the annulus
// between radius n (exclusive) and N, from the boundary ring at n+1 (square
// corners excluded) to the ring at N.  No order constraint.
int max_disjoint_crossings(const SiteConfig& config, Coord u, std::int32_t n, std::int32_t N,
                           int color, ArmVariant variant = ArmVariant::full_plane);

// Exact decision for the arm event described by q.  The inner radius is
// normalized to max(inner, |sequence|); a normalized inner radius >= outer
// makes the event trivially true.  The config domain must cover the ball of
// radius outer around the center (half-plane variants: only the queried
// side of that ball).  Rewrites of a defect never help outside that ball.
// q.allow_defect must be false here; use has_defected_arm_event for defects.
bool has_arm_event(const SiteConfig& config, const ArmQuery& q);

// Arm event up to one local defect: true iff some single ball of radius 3 can
// be rewritten arbitrarily to make the plain event hold.  q.allow_defect must
// be set.
bool has_defected_arm_event(const SiteConfig& config, const ArmQuery& q);

// Monte Carlo estimate of the event probability under P_p on the ball the
// query needs, one substream per sample index.
Estimate estimate_arm_probability(const ArmQuery& q, double p, std::int64_t samples,
                                  const RandomSource& source);

}  // namespace sdplab

#endif
