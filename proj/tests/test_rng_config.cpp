#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sdplab/rng.hpp"
#include "sdplab/site_config.hpp"

using namespace sdplab;

TEST_CASE("splitmix64 reference vector") {
    std::uint64_t s = 0;
    CHECK(splitmix64(s) == 0xe220a8397b1dcdafull);
    CHECK(splitmix64(s) == 0x6e789e6aa1b965f4ull);
    CHECK(splitmix64(s) == 0x06c45d188009454full);
}

TEST_CASE("xoshiro first output follows from its seeding") {
    std::uint64_t key = 0x1234abcd5678ef01ull;
    std::uint64_t sm = key;
    splitmix64(sm);  // s[0]
    std::uint64_t s1 = splitmix64(sm);
    std::uint64_t expect = Xoshiro256ss::rotl(s1 * 5, 7) * 9;
    CHECK(Xoshiro256ss(key).next() == expect);
}

TEST_CASE("unit doubles are uniform-ish in [0,1)") {
    Xoshiro256ss eng(99);
    double sum = 0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) {
        double u = eng.next_unit();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("bernoulli threshold") {
    CHECK(bernoulli_threshold(0.0) == 0);
    CHECK(bernoulli_threshold(-1.0) == 0);
    CHECK(bernoulli_threshold(1.0) == ~0ull);
    CHECK(bernoulli_threshold(0.5) == 0x8000000000000000ull);
    CHECK(bernoulli_threshold(0.25) == 0x4000000000000000ull);
    std::uint64_t prev = 0;
    for (double p = 0.05; p < 1.0; p += 0.05) {
        std::uint64_t t = bernoulli_threshold(p);
        CHECK(t > prev);
        prev = t;
    }

    Xoshiro256ss eng(7);
    std::uint64_t thr = bernoulli_threshold(0.3);
    int hits = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) hits += eng.next() < thr;
    CHECK(std::abs(double(hits) / n - 0.3) < 0.006);
}

TEST_CASE("random source substreams are pure functions of the index") {
    RandomSource rs(42, 0);
    CHECK(rs.key() == RandomSource(42, 0).key());
    CHECK(rs.substream(5).key() == rs.substream(5).key());
    CHECK(rs.substream(5).key() != rs.substream(6).key());
    CHECK(rs.key() != RandomSource(42, 1).key());
    CHECK(rs.key() != RandomSource(43, 0).key());
    auto a = rs.engine(), b = rs.engine();
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("sampled configs match a per-site replay") {
    Rect r = Rect::box(-3, -2, 9, 4);
    RandomSource rs(2024, 3);
    SiteConfig cfg = sample_config(r, 0.4, rs);

    auto eng = rs.engine();
    std::uint64_t thr = bernoulli_threshold(0.4);
    for (std::int32_t y = r.y_min; y <= r.y_max; ++y)
        for (std::int32_t x = r.x_min; x <= r.x_max; ++x)
            REQUIRE(cfg.get({x, y}) == (eng.next() < thr));

    CHECK(cfg == sample_config(r, 0.4, rs));
    CHECK(!(cfg == sample_config(r, 0.4, rs.substream(1))));
}

TEST_CASE("degenerate densities") {
    Rect r = Rect::box(0, 0, 10, 6);
    CHECK(sample_config(r, 0.0, RandomSource(1, 0)).open_count() == 0);
    CHECK(sample_config(r, 1.0, RandomSource(1, 0)).open_count() == r.area());
}

TEST_CASE("open count matches density") {
    Rect r = Rect::box(0, 0, 199, 199);
    SiteConfig cfg = sample_config(r, 0.6, RandomSource(11, 0));
    double frac = double(cfg.open_count()) / double(r.area());
    CHECK(std::abs(frac - 0.6) < 0.01);

    std::int64_t brute = 0;
    for (std::int32_t y = 0; y < 40; ++y)
        for (std::int32_t x = 0; x < 40; ++x) brute += cfg.get({x, y});
    SiteConfig small(Rect::box(0, 0, 39, 39));
    for (std::int32_t y = 0; y < 40; ++y)
        for (std::int32_t x = 0; x < 40; ++x) small.set({x, y}, cfg.get({x, y}));
    CHECK(small.open_count() == brute);
}

TEST_CASE("outside default value") {
    SiteConfig closed_out(Rect::box(0, 0, 1, 1), true, false);
    CHECK(closed_out.get({5, 5}) == false);
    SiteConfig open_out(Rect::box(0, 0, 1, 1), false, true);
    CHECK(open_out.get({5, 5}) == true);
    CHECK(open_out.get({0, 0}) == false);
}

TEST_CASE("serialization round trip is byte exact") {
    Rect r = Rect::box(-5, 3, 11, 9);
    SiteConfig cfg = sample_config(r, 0.5, RandomSource(77, 2));
    std::ostringstream os1, os2;
    cfg.save(os1);
    cfg.save(os2);
    CHECK(os1.str() == os2.str());

    std::istringstream is(os1.str());
    SiteConfig back = SiteConfig::load(is);
    CHECK(back == cfg);
    CHECK(back.domain() == r);
}

TEST_CASE("load rejects junk") {
    std::istringstream bad("not a config");
    CHECK_THROWS(SiteConfig::load(bad));

    SiteConfig cfg(Rect::box(0, 0, 20, 20), true);
    std::ostringstream os;
    cfg.save(os);
    std::string cut = os.str().substr(0, os.str().size() - 3);
    std::istringstream truncated(cut);
    CHECK_THROWS(SiteConfig::load(truncated));
}

TEST_CASE("overlay is pointwise or") {
    Rect r = Rect::box(0, 0, 4, 4);
    SiteConfig base = sample_config(r, 0.3, RandomSource(5, 0));
    SiteConfig mask = sample_config(Rect::box(-1, -1, 5, 5), 0.3, RandomSource(5, 1));
    SiteConfig out = overlay(base, mask);
    CHECK(out.domain() == r);
    for (std::int32_t y = 0; y <= 4; ++y)
        for (std::int32_t x = 0; x <= 4; ++x)
            CHECK(out.get({x, y}) == (base.get({x, y}) || mask.get({x, y})));

    SiteConfig narrow(Rect::box(1, 1, 3, 3));
    CHECK_THROWS_AS(overlay(base, narrow), std::invalid_argument);
}
