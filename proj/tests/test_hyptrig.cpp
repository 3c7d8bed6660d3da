#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

using namespace hypgraft;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

double oracle_pentagon(double a, double b)
{
    return static_cast<double>(acosh(sinh(big(a)) * sinh(big(b))));
}

double oracle_hexagon(double a, double b, double c)
{
    const big x = (cosh(big(b)) * cosh(big(c)) + cosh(big(a))) / (sinh(big(b)) * sinh(big(c)));
    return static_cast<double>(acosh(x));
}

} // namespace

TEST_CASE("pentagon side against a 50-digit oracle")
{
    CHECK(trig::pentagon_side(1, 1) == doctest::Approx(0.84745058129585137).epsilon(1e-14));
    for (double a : {0.9, 1.0, 2.0, 5.0, 30.0})
        for (double b : {1.0, 1.5, 4.0, 20.0})
            CHECK(trig::pentagon_side(a, b) == doctest::Approx(oracle_pentagon(a, b)).epsilon(1e-13));
}

TEST_CASE("pentagon side rejects sinh a sinh b < 1")
{
    CHECK_THROWS_AS(trig::pentagon_side(0.5, 0.5), DomainError);
    CHECK_THROWS_AS(trig::pentagon_side(-1, 2), DomainError);
}

TEST_CASE("hexagon opposite side")
{
    CHECK(trig::hexagon_opposite(1, 1, 1) == doctest::Approx(1.7049128323580137).epsilon(1e-14));
    CHECK(trig::hexagon_opposite(0.1, 3, 3) == doctest::Approx(0.19956143505657724).epsilon(1e-12));
    for (double a : {0.0, 1e-6, 0.3, 2.0, 15.0})
        for (double b : {1e-3, 0.5, 3.0})
            for (double c : {0.2, 1.0, 9.0})
                CHECK(trig::hexagon_opposite(a, b, c) == doctest::Approx(oracle_hexagon(a, b, c)).epsilon(1e-11));
}

TEST_CASE("hexagon opposite side survives overflow of cosh")
{
    const double g = trig::hexagon_opposite(800, 400, 400);
    CHECK(std::isfinite(g));
    CHECK(g == doctest::Approx(1.7627471740390861).epsilon(1e-12));
    CHECK(std::isfinite(trig::hexagon_opposite(1, 900, 0.5)));
}

TEST_CASE("hexagon opposite side is increasing in the opposite free side")
{
    double prev = trig::hexagon_opposite(0, 0.7, 1.3);
    for (int i = 1; i <= 200; ++i) {
        const double g = trig::hexagon_opposite(0.05 * i, 0.7, 1.3);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("hexagon rejects invalid sides")
{
    CHECK_THROWS_AS(trig::hexagon_opposite(-0.1, 1, 1), DomainError);
    CHECK_THROWS_AS(trig::hexagon_opposite(1, 0, 1), DomainError);
    CHECK_THROWS_AS(trig::hexagon_opposite(1, 1, std::nan("")), DomainError);
}

TEST_CASE("log_sinh and log_cosh")
{
    for (double x : {1e-8, 0.5, 3.0, 40.0}) {
        CHECK(trig::log_sinh(x) == doctest::Approx(std::log(std::sinh(x))).epsilon(1e-12));
        CHECK(trig::log_cosh(x) == doctest::Approx(std::log(std::cosh(x))).epsilon(1e-12));
    }
    CHECK(trig::log_sinh(1000) == doctest::Approx(1000 - std::log(2.0)).epsilon(1e-14));
    CHECK(trig::log_cosh(1000) == doctest::Approx(1000 - std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("acosh clamp")
{
    CHECK(trig::acosh_clamped(1 - 1e-13) == 0.0);
    CHECK_THROWS_AS(trig::acosh_clamped(0.99), DomainError);
}

TEST_CASE("Sec and the Gudermannian are inverse")
{
    CHECK(trig::sec_integral(0) == 0.0);
    CHECK(trig::gd(0) == 0.0);
    for (double y = -1.5; y <= 1.5; y += 0.01)
        CHECK(trig::gd(trig::sec_integral(y)) == doctest::Approx(y).epsilon(1e-12));
    for (double x = -15; x <= 15; x += 0.37)
        CHECK(trig::sec_integral(trig::gd(x)) == doctest::Approx(x).epsilon(1e-9));
    CHECK(trig::gd(HUGE_VAL) == trig::half_pi);
    CHECK(trig::gd(-HUGE_VAL) == -trig::half_pi);
    CHECK_THROWS_AS(trig::sec_integral(trig::half_pi), DomainError);
}

TEST_CASE("Gudermannian against the oracle")
{
    for (double x : {0.01, 0.7, 2.0, 8.0}) {
        const double expected = static_cast<double>(2 * atan(tanh(big(x) / 2)));
        CHECK(trig::gd(x) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("Gudermannian is odd and increasing")
{
    double prev = trig::gd(-10);
    for (double x = -9.9; x <= 10; x += 0.1) {
        CHECK(trig::gd(x) > prev);
        CHECK(trig::gd(-x) == doctest::Approx(-trig::gd(x)).epsilon(1e-15));
        prev = trig::gd(x);
    }
}

TEST_CASE("Lambert bound")
{
    CHECK(trig::lambert_bound(1, 0.1) == doctest::Approx(7.6413111232105565).epsilon(1e-14));
    CHECK(trig::lambert_bound(2, 2) == doctest::Approx(1.0));
    CHECK_THROWS_AS(trig::lambert_bound(1, 0), DomainError);
}
