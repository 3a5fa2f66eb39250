#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sdplab/arms.hpp"

using namespace sdplab;

namespace {

oracles::ArmSpec to_spec(const ArmQuery& q) {
    oracles::ArmSpec s;
    s.center = q.center;
    s.inner = q.inner;
    s.outer = q.outer;
    s.colors = q.sequence.colors;
    s.variant = q.variant == ArmVariant::full_plane      ? 0
                : q.variant == ArmVariant::half_plane_above ? 1
                                                            : 2;
    return s;
}

SiteConfig mirrored(const SiteConfig& cfg, bool flip_x, bool flip_y) {
    const Rect& d = cfg.domain();
    Rect md = d;
    if (flip_x) {
        md.x_min = -d.x_max;
        md.x_max = -d.x_min;
    }
    if (flip_y) {
        md.y_min = -d.y_max;
        md.y_max = -d.y_min;
    }
    SiteConfig out(md);
    for (std::int32_t y = d.y_min; y <= d.y_max; ++y)
        for (std::int32_t x = d.x_min; x <= d.x_max; ++x)
            out.set({flip_x ? -x : x, flip_y ? -y : y}, cfg.get({x, y}));
    return out;
}

const std::vector<std::vector<int>> kTestSequences = {
    {1}, {0}, {1, 0}, {1, 1}, {1, 0, 1}, {0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1, 0},
    {0, 1, 0, 0, 1, 0}};

}  // namespace

TEST_CASE("canonical sequences") {
    CHECK(canonical_sequences().size() == 5);
    CHECK(canonical_sequence("Arm1").colors == std::vector<int>{1});
    CHECK(canonical_sequence("Arm3hp").colors == std::vector<int>{1, 0, 1});
    CHECK(canonical_sequence("Arm4hp").colors == std::vector<int>{1, 0, 0, 1});
    CHECK(canonical_sequence("Arm5").colors == std::vector<int>{1, 0, 0, 1, 0});
    CHECK(canonical_sequence("Arm6").colors == std::vector<int>{0, 1, 0, 0, 1, 0});
    CHECK_THROWS_AS(canonical_sequence("Arm2"), std::invalid_argument);
}

TEST_CASE("degenerate radii are trivially true") {
    SiteConfig closed(ball({0, 0}, 8));
    for (auto variant :
         {ArmVariant::full_plane, ArmVariant::half_plane_above, ArmVariant::half_plane_below}) {
        ArmQuery q{{0, 0}, 5, 5, {{1}}, variant, false};
        CHECK(has_arm_event(closed, q));
        q.inner = 1;
        q.sequence = {{1, 0, 1}};
        q.outer = 3;  // normalized inner radius is 3
        CHECK(has_arm_event(closed, q));
        q.outer = 4;
        CHECK_FALSE(has_arm_event(closed, q));
    }
}

TEST_CASE("query validation") {
    SiteConfig cfg(ball({0, 0}, 4), true);
    ArmQuery q{{0, 0}, 1, 3, {{1}}, ArmVariant::full_plane, false};
    q.allow_defect = true;
    CHECK_THROWS_AS(has_arm_event(cfg, q), std::invalid_argument);
    q.allow_defect = false;
    CHECK_THROWS_AS(has_defected_arm_event(cfg, q), std::invalid_argument);
    q.sequence = {{}};
    CHECK_THROWS_AS(has_arm_event(cfg, q), std::invalid_argument);
    q.sequence = {{2}};
    CHECK_THROWS_AS(has_arm_event(cfg, q), std::invalid_argument);
    q.sequence = {{1}};
    q.outer = 6;  // domain only covers radius 4
    CHECK_THROWS_AS(has_arm_event(cfg, q), std::invalid_argument);
    q.outer = 3;
    q.inner = -1;
    CHECK_THROWS_AS(has_arm_event(cfg, q), std::invalid_argument);
    CHECK_THROWS_AS(max_disjoint_crossings(cfg, {0, 0}, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("saturated configurations") {
    SiteConfig open(ball({0, 0}, 8), true);
    SiteConfig closed(ball({0, 0}, 8));

    CHECK(has_arm_event(open, {{0, 0}, 1, 5, {{1}}, ArmVariant::full_plane, false}));
    CHECK(has_arm_event(open, {{0, 0}, 1, 8, {{1, 1, 1, 1}}, ArmVariant::full_plane, false}));
    CHECK_FALSE(has_arm_event(open, {{0, 0}, 1, 5, {{0}}, ArmVariant::full_plane, false}));
    CHECK_FALSE(
        has_arm_event(open, {{0, 0}, 1, 8, {{0, 1, 0, 0, 1, 0}}, ArmVariant::full_plane, false}));
    CHECK(has_arm_event(closed, {{0, 0}, 1, 5, {{0}}, ArmVariant::full_plane, false}));
    CHECK(has_arm_event(closed, {{0, 0}, 1, 8, {{0, 0, 0}}, ArmVariant::half_plane_above, false}));
    CHECK_FALSE(has_arm_event(closed, {{0, 0}, 1, 5, {{1}}, ArmVariant::half_plane_below, false}));

    CHECK(max_disjoint_crossings(open, {0, 0}, 2, 5, 1) >= 4);
    CHECK(max_disjoint_crossings(open, {0, 0}, 2, 5, 0) == 0);
    CHECK(max_disjoint_crossings(open, {0, 0}, 2, 5, 1, ArmVariant::half_plane_above) >= 2);
    CHECK(max_disjoint_crossings(closed, {0, 0}, 2, 5, 0) >= 4);
    CHECK(max_disjoint_crossings(open, {0, 0}, 5, 5, 1) == 0);
}

TEST_CASE("inner radius normalization") {
    const Rect dom = ball({1, 2}, 6);
    for (int k = 0; k < 50; ++k) {
        SiteConfig cfg = sample_config(dom, 0.5, RandomSource(911, std::uint64_t(k)));
        ArmQuery lo{{1, 2}, 0, 6, {{1, 0, 1}}, ArmVariant::full_plane, false};
        ArmQuery hi = lo;
        hi.inner = 3;
        CHECK(has_arm_event(cfg, lo) == has_arm_event(cfg, hi));
    }
}

TEST_CASE("max disjoint crossings matches exhaustive packing") {
    // Exhaustive max-count enumeration stays cheap only while the medium is
    // sparse for the queried color, so wider annuli pair color with sparsity.
    const Rect dom3 = ball({-1, 1}, 3);
    for (double p : {0.3, 0.5, 0.7}) {
        for (int k = 0; k < 40; ++k) {
            SiteConfig cfg =
                sample_config(dom3, p, RandomSource(1000 + std::uint64_t(p * 100), std::uint64_t(k)));
            for (int color : {0, 1}) {
                for (auto variant : {ArmVariant::full_plane, ArmVariant::half_plane_above,
                                     ArmVariant::half_plane_below}) {
                    const int var_code = variant == ArmVariant::full_plane        ? 0
                                         : variant == ArmVariant::half_plane_above ? 1
                                                                                   : 2;
                    INFO("p=" << p << " k=" << k << " color=" << color << " var=" << var_code);
                    CHECK(max_disjoint_crossings(cfg, {-1, 1}, 1, 3, color, variant) ==
                          oracles::max_crossings(cfg, {-1, 1}, 1, 3, color, var_code));
                }
            }
        }
    }
    for (std::int32_t N : {4, 5}) {
        const Rect dom = ball({-1, 1}, N);
        for (auto [color, p] : {std::pair<int, double>{1, 0.3}, {0, 0.7}}) {
            for (int k = 0; k < 25; ++k) {
                SiteConfig cfg = sample_config(dom, p, RandomSource(50, std::uint64_t(k)));
                for (auto variant : {ArmVariant::full_plane, ArmVariant::half_plane_above,
                                     ArmVariant::half_plane_below}) {
                    const int var_code = variant == ArmVariant::full_plane        ? 0
                                         : variant == ArmVariant::half_plane_above ? 1
                                                                                   : 2;
                    INFO("N=" << N << " k=" << k << " color=" << color << " var=" << var_code);
                    CHECK(max_disjoint_crossings(cfg, {-1, 1}, 1, N, color, variant) ==
                          oracles::max_crossings(cfg, {-1, 1}, 1, N, color, var_code));
                }
            }
        }
    }
    // deeper hole
    const Rect dom = ball({0, 0}, 5);
    for (auto [color, p] : {std::pair<int, double>{1, 0.35}, {0, 0.65}}) {
        for (int k = 0; k < 25; ++k) {
            SiteConfig cfg = sample_config(dom, p, RandomSource(77, std::uint64_t(k)));
            INFO("k=" << k << " color=" << color);
            CHECK(max_disjoint_crossings(cfg, {0, 0}, 2, 5, color) ==
                  oracles::max_crossings(cfg, {0, 0}, 2, 5, color, 0));
        }
    }
}

TEST_CASE("detector agrees with exhaustive ordered path systems") {
    for (const auto& colors : kTestSequences) {
        const auto k = std::int32_t(colors.size());
        const std::int32_t hole = std::max<std::int32_t>(1, k);
        // longer sequences keep a smaller corpus: the oracle's failure proofs
        // can blow up on adversarial wide-annulus instances
        const int reps = k >= 5 ? 12 : 30;
        for (std::int32_t N : {hole + 1, hole + 2}) {
            const Rect dom = ball({2, -3}, N);
            for (auto variant : {ArmVariant::full_plane, ArmVariant::half_plane_above,
                                 ArmVariant::half_plane_below}) {
                for (double p : {0.35, 0.5, 0.65}) {
                    for (int i = 0; i < reps; ++i) {
                        SiteConfig cfg = sample_config(
                            dom, p, RandomSource(4242 + std::uint64_t(p * 1000), std::uint64_t(i)));
                        ArmQuery q{{2, -3}, 1, N, {colors}, variant, false};
                        const int var_code = variant == ArmVariant::full_plane        ? 0
                                             : variant == ArmVariant::half_plane_above ? 1
                                                                                       : 2;
                        INFO("k=" << k << " N=" << N << " var=" << var_code << " p=" << p << " i=" << i);
                        CHECK(has_arm_event(cfg, q) == oracles::arm_event(cfg, to_spec(q)));
                    }
                }
            }
        }
    }
}

TEST_CASE("cyclic interleaving of open channels") {
    // All closed except narrow open radial channels crossing the annulus
    // between rings 7 and 8 around a hole of radius 6.  Closed arms exist
    // wherever a ring-7 head sits outside the channels, so the truth of a
    // mixed sequence reduces to how many closed heads separate the channels.
    // channels span rings 6..8 so they feed both the hole-5 and hole-6 cases
    auto channels = [](std::vector<std::int32_t> ys) {
        SiteConfig cfg(ball({0, 0}, 8));
        for (std::int32_t y : ys)
            for (std::int32_t x : {6, 7, 8}) cfg.set({x, y}, true);
        return cfg;
    };

    // Arm6 has gap pattern (2,2); Arm5 has (2,1).
    ColorSequence arm6 = canonical_sequence("Arm6");
    ColorSequence arm5 = canonical_sequence("Arm5");

    SiteConfig touching = channels({0, 1});    // no closed head between channels
    SiteConfig one_apart = channels({0, 2});   // exactly one closed head between
    SiteConfig opposite = [&] {
        SiteConfig cfg(ball({0, 0}, 8));
        for (std::int32_t x : {6, 7, 8}) {
            cfg.set({x, 0}, true);
            cfg.set({-x, 0}, true);
        }
        return cfg;
    }();

    auto q6 = [&](const SiteConfig& cfg) {
        return has_arm_event(cfg, {{0, 0}, 1, 8, arm6, ArmVariant::full_plane, false});
    };
    auto q5 = [&](const SiteConfig& cfg) {
        return has_arm_event(cfg, {{0, 0}, 1, 8, arm5, ArmVariant::full_plane, false});
    };

    CHECK_FALSE(q6(touching));  // needs two closed arms in each gap
    CHECK_FALSE(q6(one_apart));
    CHECK(q6(opposite));
    CHECK_FALSE(q5(touching));  // needs one closed arm in the short gap
    CHECK(q5(one_apart));
    CHECK(q5(opposite));

    // three open arms need three channels
    ColorSequence three{{0, 1, 0, 1, 0, 1}};
    CHECK_FALSE(
        has_arm_event(opposite, {{0, 0}, 1, 8, three, ArmVariant::full_plane, false}));

    // half plane: vertical channels through the top of the annulus
    auto hp_channels = [](std::vector<std::int32_t> xs) {
        SiteConfig cfg(ball({0, 0}, 8));
        for (std::int32_t x : xs)
            for (std::int32_t y = 4; y <= 8; ++y) cfg.set({x, y}, true);
        return cfg;
    };
    auto hp = [&](const SiteConfig& cfg, const std::vector<int>& colors) {
        return has_arm_event(cfg, {{0, 0}, 1, 8, {colors}, ArmVariant::half_plane_above, false});
    };
    SiteConfig hp_touch = hp_channels({2, 3});
    SiteConfig hp_apart = hp_channels({1, 3});
    CHECK_FALSE(hp(hp_touch, {1, 0, 1}));
    CHECK(hp(hp_apart, {1, 0, 1}));
    CHECK(hp(hp_touch, {0, 1, 1}));
    CHECK(hp(hp_touch, {0, 1, 1, 0}));
}

TEST_CASE("mirror symmetry reverses the sequence") {
    const Rect dom = ball({0, 0}, 7);
    for (int i = 0; i < 60; ++i) {
        SiteConfig cfg = sample_config(dom, 0.5, RandomSource(5150, std::uint64_t(i)));
        SiteConfig mx = mirrored(cfg, true, false);
        SiteConfig my = mirrored(cfg, false, true);

        ArmQuery q{{0, 0}, 1, 7, {{1, 0, 0, 1, 0}}, ArmVariant::full_plane, false};
        ArmQuery qr = q;
        qr.sequence = q.sequence.reversed();
        CHECK(has_arm_event(cfg, q) == has_arm_event(mx, qr));

        q.sequence = {{1, 0, 1}};
        q.outer = 5;
        qr = q;
        qr.sequence = q.sequence.reversed();
        q.variant = ArmVariant::half_plane_above;
        qr.variant = ArmVariant::half_plane_above;
        CHECK(has_arm_event(cfg, q) == has_arm_event(mx, qr));

        qr.variant = ArmVariant::half_plane_below;
        CHECK(has_arm_event(my, qr) == has_arm_event(cfg, q));
    }
}

TEST_CASE("defected events match exhaustive rewrites") {
    // A single patch must sometimes fix both colors at once: all closed except
    // an open circuit at distance 5, which blocks closed arms and feeds none.
    SiteConfig ring(ball({0, 0}, 6));
    for (std::int32_t y = -6; y <= 6; ++y)
        for (std::int32_t x = -6; x <= 6; ++x)
            if (linf_dist({x, y}, {0, 0}) == 5) ring.set({x, y}, true);
    ArmQuery alt{{0, 0}, 1, 6, {{1, 0, 1, 0}}, ArmVariant::full_plane, true};
    ArmQuery alt_plain = alt;
    alt_plain.allow_defect = false;
    CHECK_FALSE(has_arm_event(ring, alt_plain));
    CHECK(has_defected_arm_event(ring, alt));
    CHECK(oracles::defected_arm_event(ring, to_spec(alt_plain)));

    // all closed: one patch gives the open arm
    SiteConfig closed(ball({0, 0}, 3));
    ArmQuery one{{0, 0}, 1, 3, {{1}}, ArmVariant::full_plane, true};
    CHECK(has_defected_arm_event(closed, one));

    for (const auto& colors : {std::vector<int>{1}, std::vector<int>{1, 0}}) {
        const auto k = std::int32_t(colors.size());
        const std::int32_t N = std::max<std::int32_t>(1, k) + 2;
        const Rect dom = ball({0, 1}, N);
        for (int i = 0; i < 15; ++i) {
            SiteConfig cfg = sample_config(dom, 0.45, RandomSource(606, std::uint64_t(i)));
            ArmQuery q{{0, 1}, 1, N, {colors}, ArmVariant::full_plane, true};
            ArmQuery plain = q;
            plain.allow_defect = false;
            INFO("k=" << k << " i=" << i);
            const bool defected = has_defected_arm_event(cfg, q);
            if (has_arm_event(cfg, plain)) CHECK(defected);
            CHECK(defected == oracles::defected_arm_event(cfg, to_spec(plain)));
        }
    }
}

TEST_CASE("arm probability estimates") {
    ArmQuery q{{0, 0}, 1, 4, {{1}}, ArmVariant::full_plane, false};
    Estimate sure = estimate_arm_probability(q, 1.0, 200, RandomSource(9, 0));
    CHECK(sure.value == 1.0);
    CHECK(sure.ci_hi == 1.0);
    CHECK(sure.samples == 200);
    Estimate never = estimate_arm_probability(q, 0.0, 200, RandomSource(9, 0));
    CHECK(never.value == 0.0);

    Estimate a = estimate_arm_probability(q, 0.55, 400, RandomSource(10, 3));
    Estimate b = estimate_arm_probability(q, 0.55, 400, RandomSource(10, 3));
    CHECK(a.value == b.value);
    CHECK(a.ci_lo <= a.value);
    CHECK(a.value <= a.ci_hi);
    CHECK(a.spec.find("sigma=1") != std::string::npos);

    Estimate lo = estimate_arm_probability(q, 0.30, 400, RandomSource(11, 0));
    Estimate hi = estimate_arm_probability(q, 0.75, 400, RandomSource(11, 0));
    CHECK(hi.value >= lo.value);
}

TEST_CASE("one-arm quasi-multiplicativity, upper half") {
    ArmQuery wide{{0, 0}, 1, 8, {{1}}, ArmVariant::full_plane, false};
    ArmQuery near{{0, 0}, 1, 4, {{1}}, ArmVariant::full_plane, false};
    ArmQuery far{{0, 0}, 4, 8, {{1}}, ArmVariant::full_plane, false};
    const double p = 0.59;
    Estimate pw = estimate_arm_probability(wide, p, 4000, RandomSource(21, 0));
    Estimate pn = estimate_arm_probability(near, p, 4000, RandomSource(21, 1));
    Estimate pf = estimate_arm_probability(far, p, 4000, RandomSource(21, 2));
    const auto se = [](const Estimate& e) { return (e.ci_hi - e.ci_lo) / 2.0; };
    const double slack = 3.0 * (se(pw) + se(pn) + se(pf));
    CHECK(pw.value <= pn.value * pf.value + slack);
}
