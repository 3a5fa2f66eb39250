#ifndef SDPLAB_FOREST_FIRE_HPP
#define SDPLAB_FOREST_FIRE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdplab/geometry.hpp"
#include "sdplab/rng.hpp"
#include "sdplab/site_config.hpp"

namespace sdplab {

// Threshold fire process on a finite box with free boundary.  All sites start
// closed and open at rate 1; the instant an opening creates a cluster whose
// size reaches the threshold, the whole cluster closes and its sites restart
// their clocks.  Size is counted in sites or in L-infinity diameter.
enum class SizeMetric { sites, diameter };

struct FireEvent {
    double time = 0;
    std::int64_t cluster_size = 0;     // in the chosen metric, >= threshold
    std::vector<Coord> cluster_sites;  // sorted
    Rect bbox;
    std::int32_t center_dist = 0;      // min L-infinity norm over the cluster
};

struct FireLog {
    Rect box;
    int threshold = 2;
    double t_max = 0;
    SizeMetric metric = SizeMetric::sites;
    std::vector<FireEvent> events;  // ordered by time, all <= t_max
    SiteConfig final_config;        // state at t_max
};

FireLog simulate(const Rect& box, int threshold, double t_max, const RandomSource& source,
                 SizeMetric metric = SizeMetric::sites);

// Number of events up to time t whose cluster meets B_m(0).  The ball must
// sit inside the simulated box.
std::int64_t fires_in_ball(const FireLog& log, std::int32_t m, double t);

// Time at which the site density 1-e^{-t} reaches the given probability.
double critical_time(double p_c_value);

// One meta line, then one JSON line per event: time, size, bounding box, and
// touch flags for every origin ball that fits in the box.
void write_fire_log(const FireLog& log, std::ostream& os);

}  // namespace sdplab

#endif
