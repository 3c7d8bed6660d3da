#include <doctest.h>

#include <cmath>

#include "hypgraft/errors.hpp"
#include "hypgraft/hexagon_map.hpp"

using namespace hypgraft;
using namespace hypgraft::hex;

TEST_CASE("identity alteration gives the identity map")
{
    const RAHexagon h(0.5, 12, 12);
    const PiecewiseMap map = hexagon_map(h, h);
    CHECK(map.altered_side() == -1);
    CHECK(map.distortion() == doctest::Approx(1).epsilon(1e-9));
    for (const ComplementBlock& b : map.complement_blocks()) CHECK(b.distortion() == doctest::Approx(1).epsilon(1e-9));

    const Embedding& e = map.source().embedding;
    for (int k = 0; k < 6; ++k) {
        const hyp::Vec3 p = e.point_on_side(k, 0.3 * e.hexagon().side_at_position(k));
        CHECK(hyp::distance(map(p), p) < 1e-9);
    }
}

TEST_CASE("free sides map at constant speed")
{
    const RAHexagon before(1.5, 2, 2.5), after(1.2, 2, 2.5);
    const PiecewiseMap map = hexagon_map(before, after);
    const Embedding& src = map.source().embedding;
    const Embedding& dst = map.target().embedding;
    for (int k : {0, 2, 4}) {
        const double a = before.side_at_position(k), a2 = after.side_at_position(k);
        for (double u : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const hyp::Vec3 image = map(src.point_on_side(k, u * a));
            CHECK(hyp::distance(image, dst.point_on_side(k, u * a2)) < 1e-8);
        }
    }
}

TEST_CASE("matched collar radii")
{
    const RAHexagon before(0.5, 12, 12), after(1.5, 12, 12);
    const PiecewiseMap map = hexagon_map(before, after);
    const auto& src = map.source().regions;
    const auto& dst = map.target().regions;
    for (const CollarBlock& b : map.collar_blocks()) {
        const CollarRegion& s = src.at(b.source);
        const CollarRegion& t = dst.at(b.target);
        CHECK(s.neck == t.neck);
        if (b.rule == CollarRule::DeterminedSide) CHECK(t.radius_plus == s.radius_plus);
        if (b.rule == CollarRule::NonSide) {
            const Neck n = find_neck(before, s.neck), n2 = find_neck(after, t.neck);
            CHECK(n2.plus_foot - t.radius_plus == doctest::Approx(n.plus_foot - s.radius_plus).epsilon(1e-12));
            CHECK(t.radius_plus + t.radius_minus == doctest::Approx(s.radius_plus + s.radius_minus).epsilon(1e-12));
        }
    }
}

TEST_CASE("map stays finite and bi-Lipschitz for a moderate alteration")
{
    const PiecewiseMap map = hexagon_map(RAHexagon(1.5, 12, 12), RAHexagon(1.501, 12, 12));
    CHECK(std::isfinite(map.complement_distortion()));
    CHECK(map.complement_distortion() >= 1);
    CHECK(map.collar_distortion() >= 1);
}

TEST_CASE("matched requests align with source collars")
{
    const RAHexagon before(0.5, 12, 12), after(1.5, 12, 12);
    const MapParams params;
    const Decomposition src = thick_thin(before, {params.eps_min, params.eps_max, params.length_cap, 0.05}, {{SideKind::Free, 0}},
                                         [&](const NeckId&, Coorientation) { return params.delta; });
    const auto requests = matched_requests(before, after, src, params);
    CHECK(requests.size() == src.regions.size());
    for (std::size_t i = 0; i < requests.size(); ++i) CHECK(requests[i].neck == src.regions[i].neck);
}

TEST_CASE("alterations must change a single free side")
{
    CHECK_THROWS(hexagon_map(RAHexagon(0.5, 1, 1), RAHexagon(0.6, 1.1, 1)));
}
