#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hypgraft/errors.hpp"
#include "hypgraft/hexagon.hpp"
#include "hypgraft/hyptrig.hpp"

using namespace hypgraft;
using namespace hypgraft::hex;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

constexpr SideLabel F0{SideKind::Free, 0};
constexpr SideLabel F1{SideKind::Free, 1};
constexpr SideLabel F2{SideKind::Free, 2};

RAHexagon random_hexagon(std::mt19937_64& rng, double lo = -3, double hi = 1.5)
{
    std::uniform_real_distribution<double> log_side(lo, hi);
    return {std::exp(log_side(rng)), std::exp(log_side(rng)), std::exp(log_side(rng))};
}

} // namespace

TEST_CASE("cyclic labelling")
{
    const char* expected[] = {"F0", "D2", "F1", "D0", "F2", "D1"};
    for (int k = 0; k < 6; ++k) {
        CHECK(to_string(side_at(k)) == expected[k]);
        CHECK(cyclic_position(side_at(k)) == k);
        CHECK(parse_side(expected[k]) == side_at(k));
        CHECK(adjacent(side_at(k), side_at((k + 1) % 6)));
        CHECK_FALSE(adjacent(side_at(k), side_at((k + 2) % 6)));
    }
    CHECK(parse_neck("N2") == NeckId{NeckKind::NonSide, F2});
    CHECK(parse_neck("D1") == NeckId{NeckKind::Side, {SideKind::Determined, 1}});
    CHECK_THROWS_AS(parse_side("F3"), ConfigError);
    CHECK_THROWS_AS(parse_neck("X"), ConfigError);
}

TEST_CASE("solving a hexagon")
{
    const RAHexagon h(1, 1, 1);
    for (double d : h.determined_sides()) CHECK(d == doctest::Approx(1.7049128323580137).epsilon(1e-14));

    const RAHexagon thin(0.1, 3, 3);
    CHECK(thin.determined_sides()[0] == doctest::Approx(0.19956143505657724).epsilon(1e-12));
    CHECK(thin.side(F0) == 0.1);
    CHECK(thin.side_at_position(3) == thin.determined_sides()[0]);

    CHECK_THROWS_AS(RAHexagon(0, 1, 1), DomainError);
    CHECK_THROWS_AS(RAHexagon(1, -2, 1), DomainError);
    CHECK_THROWS_AS(RAHexagon(1, 1, HUGE_VAL), DomainError);
}

TEST_CASE("permuting free sides permutes determined sides")
{
    const RAHexagon h(0.4, 1.1, 2.7);
    const RAHexagon p(2.7, 0.4, 1.1);
    for (int i = 0; i < 3; ++i) CHECK(p.determined_sides()[(i + 1) % 3] == h.determined_sides()[i]);
}

TEST_CASE("determined sides satisfy the hexagon rule in every direction")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const RAHexagon h = random_hexagon(rng);
        const auto& f = h.free_sides();
        const auto& d = h.determined_sides();
        for (int i = 0; i < 3; ++i) {
            CHECK(d[i] > 0);
            const double back = trig::hexagon_opposite(d[i], d[(i + 1) % 3], d[(i + 2) % 3]);
            CHECK(back == doctest::Approx(f[i]).epsilon(1e-8));
        }
    }
}

TEST_CASE("non-side neck of a symmetric hexagon")
{
    const Neck n = nonside_neck(RAHexagon(1, 2, 1), 1);
    CHECK(n.id == NeckId{NeckKind::NonSide, F1});
    CHECK(n.plus_foot == n.minus_foot);
    CHECK(n.plus_foot == 1.0);
    CHECK(n.length == doctest::Approx(1.0863738530099856).epsilon(1e-13));

    const big oracle = asinh(cosh(big(1)) / sinh(big(1)));
    CHECK(n.length == doctest::Approx(static_cast<double>(oracle)).epsilon(1e-14));
}

TEST_CASE("symmetric splits are exact across scales")
{
    for (double a : {1e-3, 0.2, 1.0, 6.0})
        for (double b : {1e-4, 0.05, 1.0, 9.0}) {
            const Neck n = nonside_neck(RAHexagon(b, a, a), 0);
            CHECK(std::abs(n.plus_foot - n.minus_foot) <= 1e-12 * b);
        }
}

TEST_CASE("neck equations hold on random hexagons")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const RAHexagon h = random_hexagon(rng);
        const auto& f = h.free_sides();
        for (int i = 0; i < 3; ++i) {
            const Neck n = nonside_neck(h, i);
            const double prev = f[(i + 2) % 3], next = f[(i + 1) % 3];
            CHECK(n.plus_foot + n.minus_foot == doctest::Approx(f[i]).epsilon(1e-10));
            CHECK(std::sinh(n.length) * std::sinh(n.plus_foot) == doctest::Approx(std::cosh(prev)).epsilon(1e-9));
            CHECK(std::sinh(n.length) * std::sinh(n.minus_foot) == doctest::Approx(std::cosh(next)).epsilon(1e-9));
            CHECK(n.opposite_plus + n.opposite_minus == doctest::Approx(h.determined_sides()[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("cutting along a non-side neck gives two right-angled pentagons")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const RAHexagon h = random_hexagon(rng, -1, 1.5);
        const auto& f = h.free_sides();
        for (int i = 0; i < 3; ++i) {
            const Neck n = nonside_neck(h, i);
            // the side opposite the neck in each pentagon is a free side
            CHECK(std::cosh(f[(i + 2) % 3]) == doctest::Approx(std::sinh(n.length) * std::sinh(n.plus_foot)).epsilon(1e-9));
            CHECK(std::cosh(f[(i + 1) % 3]) == doctest::Approx(std::sinh(n.length) * std::sinh(n.minus_foot)).epsilon(1e-9));
        }
    }
}

TEST_CASE("all necks")
{
    const RAHexagon h(0.3, 0.8, 1.9);
    const auto necks = all_necks(h);
    CHECK(necks.size() == 9);
    for (const Neck& n : necks) {
        CHECK(find_neck(h, n.id).length == n.length);
        if (n.id.kind == NeckKind::Side) CHECK(n.length == h.side(n.id.side));
    }
}

TEST_CASE("reduced collars")
{
    CHECK(reduced_radius(std::asinh(1.0), 1) == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
    CHECK(reduced_radius(0.01, 0.25) == doctest::Approx(3.9124061123476830).epsilon(1e-13));

    const CollarSpec c = reduced_collar(side_neck(RAHexagon(0.01, 2, 2), F0), Coorientation::Inward, 0.25);
    CHECK(c.is_rectangle);
    CHECK(c.radius == reduced_radius(0.01, 0.25));

    CHECK_THROWS_AS(reduced_radius(0.1, 0), DomainError);
    CHECK_THROWS_AS(reduced_radius(0.1, 1.5), DomainError);

    double prev = HUGE_VAL;
    for (double l = 1e-4; l < 5; l *= 1.3) {
        const double r = reduced_radius(l, 0.1);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("quarter collars are ln 4 shorter than full collars up to a small excess")
{
    // The excess is positive and of order sinh(len)^2.
    for (double l : {1e-3, 1e-2, 0.1}) {
        const double excess = reduced_radius(l, 0.25) - (reduced_radius(l, 1) - std::log(4.0));
        const double s = std::sinh(l);
        CHECK(excess > 0);
        CHECK(excess < 4 * s * s);
    }
    const double at_thousandth = reduced_radius(1e-3, 0.25) - reduced_radius(1e-3, 1) + std::log(4.0);
    CHECK(at_thousandth == doctest::Approx(3.7499773439e-6).epsilon(1e-6));
}

TEST_CASE("thick-thin with no short necks keeps the whole hexagon")
{
    const RAHexagon h(1, 1.5, 2);
    const Decomposition d = thick_thin(h, {}, {}, [](const NeckId&, Coorientation) { return 0.1; });
    CHECK(d.collars.empty());
    REQUIRE(d.pieces.size() == 1);
    CHECK(d.pieces[0].sides.size() == 6);
}

TEST_CASE("thick-thin collars a short side")
{
    ThickThinParams params;
    params.eps_min = 2e-3;
    params.eps_max = 2e-2;
    const Decomposition d =
        thick_thin(RAHexagon(1e-3, 2, 2), params, {}, [](const NeckId&, Coorientation) { return 0.1; });
    REQUIRE(d.collars.size() == 1);
    CHECK(d.collars[0].neck == NeckId{NeckKind::Side, F0});
    CHECK(d.pieces.size() == 1);
    CHECK(d.min_separation > 0);
}

TEST_CASE("thick-thin validates its configuration")
{
    const RAHexagon h(1, 1.5, 2);
    auto delta = [](const NeckId&, Coorientation) { return 0.1; };
    CHECK_THROWS_AS(thick_thin(h, {}, {F0, F0}, delta), ConfigError);
    CHECK_THROWS_AS(thick_thin(h, {}, {F0, {SideKind::Determined, 2}}, delta), ConfigError);
    CHECK_THROWS_AS(thick_thin(RAHexagon(3, 1, 1), {}, {F0}, delta), ConfigError);
    CHECK_THROWS_AS(thick_thin(RAHexagon(1e-5, 1, 1), {}, {}, [](const NeckId&, Coorientation) { return 0.5; }),
                    ConfigError);
    ThickThinParams bad;
    bad.eps_min = bad.eps_max;
    CHECK_THROWS_AS(thick_thin(h, bad, {}, delta), ConfigError);
}

TEST_CASE("thick-thin collars stay disjoint on random admissible hexagons")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> log_side(std::log(1e-6), std::log(2.0));
    std::bernoulli_distribution use_extra(0.3);
    const ThickThinParams params;
    auto delta = [](const NeckId&, Coorientation) { return 0.1; };
    double worst = HUGE_VAL;
    for (int trial = 0; trial < 500; ++trial) {
        const RAHexagon h(std::exp(log_side(rng)), std::exp(log_side(rng)), std::exp(log_side(rng)));
        std::vector<SideLabel> extra;
        for (SideLabel s : {F0, F1, F2})
            if (use_extra(rng) && h.side(s) >= params.eps_max) extra.push_back(s);
        const Decomposition d = thick_thin(h, params, extra, delta);
        if (d.regions.size() > 1) worst = std::min(worst, d.min_separation);
    }
    CHECK(worst > 0);
}

TEST_CASE("short neck selection rule")
{
    const RAHexagon h(1e-5, 3e-4, 1.0);
    const auto necks = short_necks(h, 5e-5, 5e-4);
    bool has_tiny = false, has_middle = false;
    for (const Neck& n : necks) {
        CHECK(n.length < 2.5e-4);
        has_tiny |= n.id == NeckId{NeckKind::Side, F0};
        has_middle |= n.id == NeckId{NeckKind::Side, F1};
    }
    CHECK(has_tiny);
    CHECK_FALSE(has_middle);
}

TEST_CASE("collar boundary lengths lie in a positive window")
{
    const auto [lo, hi] = collar_arc_length_range({});
    CHECK(lo > 0);
    CHECK(lo <= 0.05);
    CHECK(hi >= 0.25);
    CHECK(std::isfinite(hi));
}

TEST_CASE("neck distortion")
{
    const RAHexagon h(0.5, 3, 3);
    const NeckDistortion same = neck_distortion(h, h, {NeckKind::Side, {SideKind::Determined, 0}});
    CHECK(same.length_ratio == 1);
    CHECK(same.foot_shift == 0);

    CHECK_THROWS_AS(neck_distortion(h, RAHexagon(2.5, 3, 3), {NeckKind::Side, F1}), DomainError);
    CHECK(neck_distortion_bound(2) > 1);
    CHECK(small_neck_threshold(2) > 0);
}

TEST_CASE("neck distortion stays within its bound on random pairs")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> altered(1e-3, 2.0);
    std::uniform_real_distribution<double> log_side(std::log(1e-3), std::log(12.0));
    const double threshold = small_neck_threshold(2);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double b = std::exp(log_side(rng)), c = std::exp(log_side(rng));
        const RAHexagon before(altered(rng), b, c), after(altered(rng), b, c);
        for (const Neck& n : all_necks(before)) {
            if (n.id == NeckId{NeckKind::Side, F0} || n.length >= threshold) continue;
            if (find_neck(after, n.id).length >= threshold) continue;
            const NeckDistortion d = neck_distortion(before, after, n.id);
            CHECK(d.length_ratio <= d.bound);
            CHECK(d.length_ratio >= 1 / d.bound);
            CHECK(d.foot_shift <= d.bound);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("embedding closes up and has right angles")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Embedding e(random_hexagon(rng, -2, 1.5));
        CHECK(e.closure_residual() < 1e-9);
        const auto sides = e.hexagon().cyclic_sides();
        for (int k = 0; k < 6; ++k) {
            const hyp::Frame end = e.side_frame_at(k, sides[k]);
            const hyp::Frame& next = e.side_frame((k + 1) % 6);
            CHECK(hyp::distance(end.pos, next.pos) < 1e-8);
            CHECK(std::abs(hyp::mink(end.tangent, next.tangent)) < 1e-6);
        }
    }
}
