#include <doctest.h>

#include <numeric>
#include <random>

#include "hypgraft/errors.hpp"
#include "hypgraft/lens.hpp"

using namespace hypgraft;
using namespace hypgraft::lens;

namespace {

ConeData cones(std::optional<int> a, std::optional<int> b, std::optional<int> c) { return {{a, b, c}}; }

} // namespace

TEST_CASE("canonical lens spaces")
{
    CHECK(LensSpace(5, 2) == LensSpace(5, 3));
    CHECK(LensSpace(5, 2).q() == 2);
    CHECK(LensSpace(7, 3).q() == 2); // 3 * 5 = 15 = 1 mod 7, and -5 = 2
    CHECK(LensSpace(-5, 2) == LensSpace(5, 2));
    CHECK(LensSpace(1, 1).is_sphere());
    CHECK(LensSpace(1, -1).q() == 0);
    CHECK(LensSpace(1, 1).to_string() == "L(1,0)");
    CHECK(LensSpace(5, 2).to_string() == "L(5,2)");
    CHECK_THROWS_AS(LensSpace(6, 2), DomainError);
    CHECK_THROWS_AS(LensSpace(0, 2), DomainError);
}

TEST_CASE("lens equivalence")
{
    CHECK(lens_equiv(LensSpace(5, 2), LensSpace(5, 3)));
    CHECK(lens_equiv(LensSpace(5, 2), LensSpace(5, 2)));
    CHECK_FALSE(lens_equiv(LensSpace(7, 1), LensSpace(7, 2)));
    CHECK(inverse_mod(2, 5) == 3);
    CHECK(inverse_mod(-3, 7) == 2);
    CHECK_THROWS_AS(inverse_mod(2, 4), DomainError);
}

TEST_CASE("lens equivalence is an equivalence relation")
{
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long long> pick_p(2, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        const long long p = pick_p(rng);
        std::uniform_int_distribution<long long> pick_q(1, p - 1);
        auto coprime = [&] {
            for (;;)
                if (const long long q = pick_q(rng); std::gcd(p, q) == 1) return q;
        };
        const LensSpace a(p, coprime()), b(p, coprime()), c(p, coprime());
        CHECK(lens_equiv(a, a));
        CHECK(lens_equiv(a, b) == lens_equiv(b, a));
        if (lens_equiv(a, b) && lens_equiv(b, c)) CHECK(lens_equiv(a, c));
        const long long q = a.q();
        CHECK(lens_equiv(a, LensSpace(p, p - q)));
        CHECK(lens_equiv(a, LensSpace(p, inverse_mod(q, p))));
    }
}

TEST_CASE("modular surface")
{
    const LensResult r = lens_from_orders(cones(2, 3, std::nullopt));
    CHECK(r.lens_case == LensCase::DistinctCones);
    CHECK(r.space.is_sphere());
    CHECK(r.summary() == "L(1,1) ≅ S^3");
    CHECK(r.fibre_powers == std::vector<long long>{2, 3});
}

TEST_CASE("lens cases")
{
    const LensResult distinct = lens_from_orders(cones(4, std::nullopt, 3));
    CHECK(distinct.space == LensSpace(5, 2));
    CHECK(distinct.p == 5);

    CHECK(lens_from_orders(cones(5, 5, std::nullopt)).space == LensSpace(3, 1));
    CHECK(lens_from_orders(cones(5, 5, std::nullopt)).lens_case == LensCase::EqualCones);
    CHECK(lens_from_orders(cones(std::nullopt, 4, std::nullopt)).space == LensSpace(6, 1));
    CHECK(lens_from_orders(cones(std::nullopt, 4, std::nullopt)).lens_case == LensCase::OneCone);

    const LensResult cusps = lens_from_orders(cones(std::nullopt, std::nullopt, std::nullopt));
    CHECK(cusps.lens_case == LensCase::ThreeCusps);
    CHECK(cusps.space.is_sphere());
    CHECK(cusps.summary() == "S^3");

    CHECK_THROWS_AS(lens_from_orders(cones(2, 3, 7)), Unsupported);
    CHECK_THROWS_AS(lens_from_orders(cones(2, 2, std::nullopt)), DomainError);
    CHECK_THROWS_AS(lens_from_orders(cones(1, 3, std::nullopt)), ConfigError);
}

TEST_CASE("orders parse from text")
{
    const ConeData c = ConeData::parse("2,3,inf");
    CHECK(c.orders[0] == 2);
    CHECK(c.orders[1] == 3);
    CHECK_FALSE(c.orders[2]);
    CHECK(c.cusps() == 1);
    CHECK(ConeData::parse("∞, 4, ∞").cusps() == 2);
    CHECK_THROWS_AS(ConeData::parse("2,3"), ConfigError);
    CHECK_THROWS_AS(ConeData::parse("2,x,inf"), ConfigError);
    CHECK_THROWS_AS(ConeData::parse("2,3,inf,inf"), ConfigError);
}

TEST_CASE("results are symmetric in the two orders")
{
    for (int n = 2; n <= 30; ++n)
        for (int k = n + 1; k <= 30; ++k) {
            const long long p = static_cast<long long>(n) * k - n - k;
            CHECK(lens_equiv(LensSpace(p, n - 1), LensSpace(p, k - 1)));
            CHECK(lens_from_orders(cones(n, k, std::nullopt)).space == lens_from_orders(cones(k, std::nullopt, n)).space);
        }
}

TEST_CASE("meridian arithmetic")
{
    const Meridians m = meridian_arithmetic(2, 3);
    CHECK(m.m_n == TorusClass{-2, 1});
    CHECK(m.m_k == TorusClass{3, -1});
    CHECK(m.alpha_n == TorusClass{-1, 1});
    CHECK(m.q == -1);
    CHECK(m.p == 1);
    CHECK(LensSpace(m.p, m.q).is_sphere());
}

TEST_CASE("meridians agree with the case formula")
{
    for (int n = 2; n <= 50; ++n)
        for (int k = 2; k <= 50; ++k) {
            CHECK((n - 1) * (k - 1) == (n * k - k - n) + 1);
            if (n >= k) continue;
            const Meridians m = meridian_arithmetic(n, k);
            CHECK(m.p == n * k - n - k);
            CHECK(m.q == 1 - n);
            const TorusClass sum{m.p * 1 + m.q * m.m_k.alpha, m.q * m.m_k.beta};
            CHECK(sum == m.m_n);
            if (m.p == 1 || std::gcd(m.p, m.q) == 1)
                CHECK(LensSpace(m.p, m.q) == lens_from_orders(cones(n, k, std::nullopt)).space);
        }
}
