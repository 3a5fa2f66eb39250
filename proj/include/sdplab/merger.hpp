#ifndef SDPLAB_MERGER_HPP
#define SDPLAB_MERGER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdplab/geometry.hpp"

namespace sdplab {

// Greedy distance-ordered spanning tree of a finite point set: edges of
// L-infinity length j are added at step j, a maximal acyclic set each step,
// ties resolved by taking candidates in lexicographic order on ordered pairs
// (each edge stored with its smaller endpoint first).  The result is an
// L-infinity minimum spanning tree and is independent of the input order.
struct MergerEdge {
    Coord a, b;           // a < b lexicographically
    std::int32_t dist;    // linf_dist(a, b)
    std::int32_t time;    // floor(dist / 2), the merger time
};

struct MergerTree {
    std::vector<Coord> vertices;    // sorted, duplicates removed
    std::vector<MergerEdge> edges;  // in construction order, dist nondecreasing
    Coord root;                     // lexicographic minimum of the vertices
};

MergerTree build_merger_tree(const std::vector<Coord>& points);

// Edge labels as a sorted multiset; always |vertices| - 1 entries.
std::vector<std::int32_t> merger_times(const MergerTree& tree);

// Binary coalescence history of the same construction: leaves are the
// singletons, one internal node per tree edge taken in construction order,
// so simultaneous mergers split into sequential pairwise ones.
struct CoalescenceNode {
    std::vector<Coord> members;   // sorted
    std::int32_t merge_time = 0;  // label of the edge that formed the node
    std::int32_t half_diam = 0;   // floor(diam(members) / 2)
    int left = -1, right = -1;    // offspring, -1 on leaves
};

struct CoalescenceTree {
    std::vector<CoalescenceNode> nodes;  // leaves first, then internals
    int root = -1;
};

CoalescenceTree coalescence_tree(const MergerTree& tree);

// Exact number of subsets X of R_n whose sorted merger-time multiset equals
// times, by exhaustive enumeration.  Guarded to n <= 3 and |times| <= 2.
std::int64_t enumerate_sets_with_times(std::int32_t n, std::vector<std::int32_t> times);

// Number of distinct orderings of the multiset.
std::int64_t distinct_orderings(const std::vector<std::int32_t>& times);

// Counting bound for the above: permut(times) * 32^(k+1) * n^2 * prod max(d,1).
// Zero merger times contribute a factor 1; the neighbor-counting granularity
// of the bound absorbs them into the per-step constant.
double count_bound(std::int32_t n, const std::vector<std::int32_t>& times);

// Unlabeled rooted trees on k vertices by canonical-form enumeration (k <= 8),
// and the Catalan number that dominates them (k <= 30, overflow guarded).
std::int64_t count_rooted_trees(int k);
std::int64_t catalan(int k);

// Product over x of delta * pi6(floor(t(x))) where t(x) is half the nearest
// neighbor distance within the set; pi6_by_radius[r] estimates the six-arm
// probability at radius r.  Isolated points (singleton set) read the last
// table entry.  A required radius past the table throws.
double first_merger_product(const std::vector<Coord>& points,
                            const std::vector<double>& pi6_by_radius, double delta);

// Edge-list JSON with labels.
void write_merger_json(const MergerTree& tree, std::ostream& os);

struct EnumerationRow {
    std::int32_t n = 0;
    std::vector<std::int32_t> times;
    std::int64_t count = 0;
    double bound = 0;
};

// CSV rows "n,times,count,bound" with times joined by '|'.
void write_enumeration_csv(const std::vector<EnumerationRow>& rows, std::ostream& os);

}  // namespace sdplab

#endif
