#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "sdplab/cluster.hpp"
#include "sdplab/site_config.hpp"

using namespace sdplab;

namespace {

SiteConfig from_rows(const Rect& r, const std::vector<std::string>& rows) {
    // rows are listed top to bottom, '#' = open.
    REQUIRE(std::int64_t(rows.size()) == r.height());
    SiteConfig cfg(r);
    for (std::int32_t y = r.y_min; y <= r.y_max; ++y) {
        const std::string& row = rows[std::size_t(r.y_max - y)];
        REQUIRE(std::int64_t(row.size()) == r.width());
        for (std::int32_t x = r.x_min; x <= r.x_max; ++x)
            cfg.set({x, y}, row[std::size_t(x - r.x_min)] == '#');
    }
    return cfg;
}

}  // namespace

TEST_CASE("labeling a plus shape") {
    Rect r = Rect::box(0, 0, 2, 2);
    SiteConfig cfg = from_rows(r, {".#.", "###", ".#."});
    ClusterLabels open = label_clusters(cfg, r, Polarity::open_sites, Adjacency::primal);
    CHECK(open.cluster_count == 1);
    CHECK(open.sizes == std::vector<std::int64_t>{5});
    CHECK(open.bboxes[0] == r);
    CHECK(open.at({1, 1}) == 0);
    CHECK(open.at({0, 0}) == -1);

    // The four closed corners are pairwise non-adjacent even diagonally.
    ClusterLabels closed = label_clusters(cfg, r, Polarity::closed_sites, Adjacency::matching);
    CHECK(closed.cluster_count == 4);
    for (auto s : closed.sizes) CHECK(s == 1);
}

TEST_CASE("labels agree with reference connectivity") {
    Rect r = Rect::box(-2, 0, 4, 5);
    for (int k = 0; k < 25; ++k) {
        SiteConfig cfg = sample_config(r, 0.5, RandomSource(321, std::uint64_t(k)));
        for (Polarity pol : {Polarity::open_sites, Polarity::closed_sites})
            for (Adjacency adj : {Adjacency::primal, Adjacency::matching}) {
                ClusterLabels lab = label_clusters(cfg, r, pol, adj);
                std::int64_t covered = 0;
                for (auto s : lab.sizes) covered += s;
                std::int64_t want = pol == Polarity::open_sites ? cfg.open_count()
                                                                : r.area() - cfg.open_count();
                CHECK(covered == want);
                for (Coord a : {Coord{-2, 0}, Coord{0, 2}, Coord{4, 5}, Coord{1, 4}})
                    for (Coord b : {Coord{3, 1}, Coord{0, 2}, Coord{-1, 5}}) {
                        if (lab.at(a) == -1 || lab.at(b) == -1) continue;
                        bool same = lab.at(a) == lab.at(b);
                        CHECK(same == oracles::connected(cfg, r, {a}, {b}, pol, adj));
                    }
            }
    }
}

TEST_CASE("cluster csv") {
    Rect r = Rect::box(0, 0, 2, 0);
    SiteConfig cfg = from_rows(r, {"#.#"});
    std::ostringstream os;
    write_cluster_csv(label_clusters(cfg, r, Polarity::open_sites, Adjacency::primal), os);
    CHECK(os.str() == "label,size,x_min,y_min,x_max,y_max\n0,1,0,0,0,0\n1,1,2,0,2,0\n");
}

TEST_CASE("crossings agree with reference search") {
    Rect r = Rect::box(0, 0, 5, 4);
    for (int k = 0; k < 60; ++k) {
        SiteConfig cfg = sample_config(r, 0.55, RandomSource(9, std::uint64_t(k)));
        for (Axis ax : {Axis::horizontal, Axis::vertical})
            for (Polarity pol : {Polarity::open_sites, Polarity::closed_sites})
                for (Adjacency adj : {Adjacency::primal, Adjacency::matching})
                    CHECK(crosses(cfg, r, ax, pol, adj) ==
                          oracles::crosses(cfg, r, ax, pol, adj));
    }
}

TEST_CASE("crossing duality is exact on small rectangles") {
    for (Rect r : {Rect::box(0, 0, 2, 2), Rect::box(0, 0, 3, 2)}) {
        std::int64_t n = r.area();
        for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
            SiteConfig cfg(r);
            std::int64_t i = 0;
            for (std::int32_t y = r.y_min; y <= r.y_max; ++y)
                for (std::int32_t x = r.x_min; x <= r.x_max; ++x)
                    cfg.set({x, y}, (bits >> i++) & 1);
            bool open_h = crosses(cfg, r, Axis::horizontal, Polarity::open_sites,
                                  Adjacency::primal);
            bool closed_v = crosses(cfg, r, Axis::vertical, Polarity::closed_sites,
                                    Adjacency::matching);
            REQUIRE(open_h != closed_v);
            bool open_v = crosses(cfg, r, Axis::vertical, Polarity::open_sites,
                                  Adjacency::primal);
            bool closed_h = crosses(cfg, r, Axis::horizontal, Polarity::closed_sites,
                                    Adjacency::matching);
            REQUIRE(open_v != closed_h);
        }
    }
}

TEST_CASE("connected_in agrees with reference search") {
    Rect r = Rect::box(0, 0, 6, 6);
    std::vector<Coord> a = side_sites(r, Side::left);
    std::vector<Coord> b = {{6, 0}, {6, 6}, {3, 3}};
    for (int k = 0; k < 40; ++k) {
        SiteConfig cfg = sample_config(r, 0.5, RandomSource(12, std::uint64_t(k)));
        for (Adjacency adj : {Adjacency::primal, Adjacency::matching})
            CHECK(connected_in(cfg, r, a, b, Polarity::open_sites, adj) ==
                  oracles::connected(cfg, r, a, b, Polarity::open_sites, adj));
    }
}

TEST_CASE("annulus circuits, hand configurations") {
    std::int32_t n = 2;
    Rect dom = ball({0, 0}, 2 * n);

    SiteConfig ring(dom);
    for (std::int32_t y = -4; y <= 4; ++y)
        for (std::int32_t x = -4; x <= 4; ++x)
            if (linf_dist({x, y}, {0, 0}) == n) ring.set({x, y}, true);
    CHECK(has_open_circuit(ring, n));

    SiteConfig gap = ring;
    gap.set({2, 2}, false);
    CHECK(!has_open_circuit(gap, n));
    SiteConfig gap2 = ring;
    gap2.set({-2, 0}, false);
    CHECK(!has_open_circuit(gap2, n));

    CHECK(has_open_circuit(SiteConfig(dom, true), n));
    CHECK(!has_open_circuit(SiteConfig(dom, false), n));

    // A circuit strictly inside the hole does not count.
    SiteConfig inner(dom);
    for (std::int32_t y = -1; y <= 1; ++y)
        for (std::int32_t x = -1; x <= 1; ++x)
            if (linf_dist({x, y}, {0, 0}) == 1) inner.set({x, y}, true);
    CHECK(!has_open_circuit(inner, n));
}

TEST_CASE("annulus circuits agree with the topological reference") {
    for (std::int32_t n : {2, 3}) {
        Rect dom = ball({0, 0}, 2 * n);
        int hits = 0;
        int samples = n == 2 ? 300 : 150;
        for (int k = 0; k < samples; ++k)
            for (double p : {0.45, 0.6, 0.75}) {
                SiteConfig cfg = sample_config(
                    dom, p, RandomSource(500 + std::uint64_t(n), std::uint64_t(3 * k) + int(p * 10)));
                bool got = has_open_circuit(cfg, n);
                CHECK(got == oracles::has_open_circuit(cfg, n));
                hits += got;
            }
        CHECK(hits > 0);
    }
}

TEST_CASE("four framed crossings force a circuit") {
    std::int32_t n = 2;
    Rect dom = ball({0, 0}, 3 * n);
    CHECK(framed_circuit_event(SiteConfig(dom, true), n));
    CHECK(!framed_circuit_event(SiteConfig(dom, false), n));
    int framed_count = 0;
    for (int k = 0; k < 250; ++k) {
        SiteConfig cfg = sample_config(dom, 0.8, RandomSource(31, std::uint64_t(k)));
        if (framed_circuit_event(cfg, n)) {
            ++framed_count;
            CHECK(has_open_circuit(cfg, n));
        }
    }
    CHECK(framed_count > 10);
}
