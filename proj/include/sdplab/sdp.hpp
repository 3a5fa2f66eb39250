#ifndef SDPLAB_SDP_HPP
#define SDPLAB_SDP_HPP

#include <string>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/rng.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

// The strip boxes used by the crossing criterion.
inline Rect strip_s(std::int32_t n) { return Rect::box(-3 * n, 0, 3 * n, n); }
inline Rect strip_r(std::int32_t n) { return Rect::box(-2 * n, 0, 2 * n, n); }
inline Rect annulus_hull(std::int32_t n) { return ball({0, 0}, 2 * n); }

// Close every open cluster (within horizon) touching the horizon's internal
// boundary.  Finite-volume stand-in for burning unbounded clusters; sites
// outside horizon are untouched.
SiteConfig burn_boundary_clusters(const SiteConfig& config, const Rect& horizon);

struct SdpSample {
    double p = 0;
    double delta = 0;
    Rect horizon;
    RandomSource source;
    SiteConfig omega;            // P_p
    SiteConfig sigma;            // P_delta enhancement mask
    SiteConfig omega_bar;        // omega after burning
    SiteConfig omega_bar_delta;  // omega_bar OR sigma
};

SdpSample sdp_sample(double p, double delta, const Rect& horizon, const RandomSource& source);

// Writes <prefix>{omega,sigma,omega_bar,omega_bar_delta}.bits plus
// <prefix>meta.json describing the draw.
void dump_sdp_sample(const SdpSample& sample, const std::string& prefix);

// Sites of S_n joined to both short sides of S_n by open paths inside S_n.
// Row-major order.
std::vector<Coord> chi_set(const SiteConfig& omega, std::int32_t n);

// Kill the crossing clusters: 0 on chi and its outer boundary, 1 on the rest
// of S_n, 0 outside.
SiteConfig tilde_config(const SiteConfig& omega, std::int32_t n);

// Enhance inside R_n only; elsewhere the tilde values pass through.
SiteConfig tilde_enhanced(const SiteConfig& omega_tilde, const SiteConfig& sigma,
                          std::int32_t n);

// Close every site whose open cluster contains a circuit of Ann(n,2n)
// surrounding the hole.  Winding is detected per annulus component by a
// sheet-tracking BFS across a cut ray; the touched clusters are then closed
// in full, wherever they reach in the domain.
SiteConfig check_config(const SiteConfig& omega, std::int32_t n);

}  // namespace sdplab

#endif
