#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"
#include "hypgraft/pants.hpp"

using namespace hypgraft;
using namespace hypgraft::pants;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

Slot curve_slot(const std::string& id) { return {Slot::Kind::Curve, id, 0}; }
Slot cusp_slot() { return {Slot::Kind::Cusp, {}, 0}; }

SurfaceFN two_pants()
{
    return SurfaceFN({{"a", 0.3, 0.1, CurveKind::Regular}, {"b", 1.2, 0, CurveKind::Regular}},
                     {{{curve_slot("a"), curve_slot("b"), cusp_slot()}},
                      {{curve_slot("a"), curve_slot("b"), Slot{Slot::Kind::Boundary, {}, 0.8}}}});
}

} // namespace

TEST_CASE("pants as doubled hexagons")
{
    const PantsData p = pants_from_boundary(2, 2, 2);
    REQUIRE(p.hexagon());
    for (int i = 0; i < 3; ++i) CHECK(p.seam_length(i) == doctest::Approx(1.7049128323580137).epsilon(1e-14));

    const PantsData q = pants_from_boundary(1, 4, 4);
    CHECK(q.seam_length(0) == trig::hexagon_opposite(0.5, 2, 2));
}

TEST_CASE("doubling matches the hexagon exactly")
{
    for (double a : {0.01, 0.4, 2.5})
        for (double b : {0.2, 1.0})
            for (double c : {0.05, 3.0}) {
                const PantsData p = pants_from_boundary(2 * a, 2 * b, 2 * c);
                const hex::RAHexagon h(a, b, c);
                for (int i = 0; i < 3; ++i) {
                    CHECK(p.seam_length(i) == h.determined_sides()[i]);
                    CHECK(p.boundary_lengths()[i] == 2 * h.free_sides()[i]);
                }
            }
}

TEST_CASE("seams permute with the boundary")
{
    const PantsData p = pants_from_boundary(0.7, 1.3, 2.9);
    const PantsData q = pants_from_boundary(2.9, 0.7, 1.3);
    for (int i = 0; i < 3; ++i) CHECK(q.seam_length((i + 1) % 3) == p.seam_length(i));
}

TEST_CASE("cusped pants")
{
    const PantsData p = pants_from_boundary(0, 1, 1);
    CHECK(p.has_cusp());
    CHECK_FALSE(p.hexagon());
    CHECK_THROWS_AS(p.seam_length(1), Unsupported);
    CHECK_THROWS_AS(p.seam_length(2), Unsupported);
    CHECK_THROWS_AS(pants_from_boundary(-1, 1, 1), DomainError);
}

TEST_CASE("standard collar at 2 asinh 1")
{
    const Collar c = standard_collar(2 * std::asinh(1.0));
    CHECK(c.radius == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
    CHECK(c.conformal_half_width == doctest::Approx(trig::pi / 4).epsilon(1e-15));
    CHECK(c.modulus == doctest::Approx(trig::half_pi / (2 * std::asinh(1.0))).epsilon(1e-15));
    CHECK_THROWS_AS(standard_collar(0), DomainError);
}

TEST_CASE("standard collar modulus is squeezed between pi/len - 1 and pi/len")
{
    for (double l = 1e-4; l <= 2; l *= 1.25) {
        const double mod = standard_collar(l).modulus;
        CHECK(mod <= trig::pi / l);
        CHECK(mod >= trig::pi / l - 1);
    }
}

TEST_CASE("standard collar against the oracle")
{
    for (double l : {1e-3, 0.3, 1.7}) {
        const big m = asinh(1 / sinh(big(l) / 2));
        const big rho = 2 * atan(tanh(m / 2));
        const Collar c = standard_collar(l);
        CHECK(c.radius == doctest::Approx(static_cast<double>(m)).epsilon(1e-14));
        CHECK(c.modulus == doctest::Approx(static_cast<double>(2 * rho / l)).epsilon(1e-14));
    }
}

TEST_CASE("collar boundaries approach length 2")
{
    CHECK(std::abs(standard_collar(1e-3).boundary_length - 2) < 1e-3);
    const Collar cusp = cusp_collar();
    CHECK(cusp.kind == Collar::Kind::Cusp);
    CHECK(cusp.boundary_length == 2);
    CHECK(std::isinf(cusp.radius));
}

TEST_CASE("reduced surface collars")
{
    for (double l : {1e-3, 0.5, 2.0}) CHECK(reduced_radius_surface(l, 1) == standard_collar(l).radius);
    // tends to twice delta as the core shrinks
    CHECK(std::abs(reduced_collar_surface(1e-4, 0.1).boundary_length - 0.2) < 1e-3);
    double prev = HUGE_VAL;
    for (double l = 1e-4; l < 4; l *= 1.2) {
        const double r = reduced_radius_surface(l, 0.3);
        CHECK(r < prev);
        prev = r;
    }
    CHECK_THROWS_AS(reduced_radius_surface(1, 0), DomainError);
    CHECK_THROWS_AS(reduced_radius_surface(1, 1.01), DomainError);
}

TEST_CASE("boundary arc shortening constant")
{
    const ShorteningConstant c = boundary_arc_shortening_constant(2, 0.1);
    CHECK(c.constant >= 10);
    CHECK(c.projection_lipschitz < 10);
    CHECK(c.projection_lipschitz == doctest::Approx(4 * std::cosh(c.r)));
    CHECK(c.r == doctest::Approx(std::min(1.0, reduced_radius_surface(2, 0.1))));
    CHECK(c.max_boundary >= 0.2);
    for (double delta : {0.05, 0.25, 1.0}) CHECK(boundary_arc_shortening_constant(2, delta).constant >= 10);
}

TEST_CASE("pinch lengths")
{
    CHECK(pinch_length(0.7, 0, 0.1) == 0.7);
    const double l = pinch_length(0.5, 5, 0.1);
    CHECK(l < 0.5);
    CHECK(std::abs(pinch_residual(0.5, 5, 0.1, l)) <= 1e-10);

    double prev = 0.5;
    for (double extra = 0.5; extra <= 1e4; extra *= 2) {
        const double next = pinch_length(0.5, extra, 0.1);
        CHECK(next < prev);
        CHECK(std::abs(pinch_residual(0.5, extra, 0.1, next)) <= 1e-10);
        prev = next;
    }
    CHECK(prev < 1e-3);
    CHECK_THROWS_AS(pinch_length(0.5, -1, 0.1), DomainError);
}

TEST_CASE("surface pinching")
{
    const SurfaceFN s = two_pants();
    const auto out = pinch_lengths(s, {"a"}, {{"a", 2.0}}, 0.1);
    REQUIRE(out.count("a") == 1);
    CHECK(out.at("a") < 0.3);
    CHECK(out.at("a") == pinch_length(0.3, 2.0, 0.1));
    CHECK_THROWS(pinch_lengths(s, {"z"}, {{"z", 1.0}}, 0.1));
}

TEST_CASE("surface data")
{
    const SurfaceFN s = two_pants();
    CHECK(s.curve("b").length == 1.2);
    CHECK(s.systole_of_decomposition() == 0.3);
    const PantsData p = s.pants_data(1);
    CHECK(p.boundary_lengths()[2] == 0.8);
    CHECK(s.pants_data(0).has_cusp());
    CHECK_THROWS_AS(s.curve("c"), ConfigError);
}

TEST_CASE("surface validation")
{
    CHECK_THROWS_AS(SurfaceFN({{"a", 0.3, 0, CurveKind::Regular}}, {{{curve_slot("a"), curve_slot("x"), cusp_slot()}}}),
                    ConfigError);
    CHECK_THROWS_AS(SurfaceFN({{"a", -1, 0, CurveKind::Regular}}, {{{curve_slot("a"), cusp_slot(), cusp_slot()}}}),
                    DomainError);
}

TEST_CASE("global eta")
{
    const GlobalEta g = global_eta(2, 0.1, default_distortion_model(4.3));
    CHECK(g.eta(0) == 0);
    double prev = 0;
    for (double s = 1e-3; s <= 1e6; s *= 1.5) {
        const double e = g.eta(s);
        CHECK(e >= prev);
        prev = e;
    }
    CHECK(prev > 1);
    CHECK(g.shortening >= 10);
    CHECK(g.combined_constant >= g.map_constant);
}

TEST_CASE("non-monotone distortion models are rejected")
{
    DistortionModel bad{2, [](double d) { return std::sin(d); }};
    CHECK_THROWS_AS(global_eta(2, 0.1, bad), ConfigError);
}
