#include <doctest.h>

#include <cmath>
#include <random>

#include "hypgraft/chabauty.hpp"
#include "hypgraft/errors.hpp"

using namespace hypgraft;
using namespace hypgraft::chabauty;
using psl2::Axis;

namespace {

bool inverse_closed(const GroupSample& s)
{
    for (const Isometry& g : s.elements)
        if (nearest_distance(s, g.inverse()) > 1e-9) return false;
    return true;
}

bool deduplicated(const GroupSample& s)
{
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (psl2::distance(s.elements[i], s.elements[j]) <= 1e-9) return false;
    return true;
}

} // namespace

TEST_CASE("closed-form samples")
{
    const GroupSample trivial = sample_subgroup(ElementarySubgroup::trivial(), 3);
    REQUIRE(trivial.elements.size() == 1);
    CHECK(psl2::distance(trivial.elements[0], Isometry::identity()) == 0);

    for (double r : {0.0, 1.0, 5.0}) CHECK(sample_subgroup(ElementarySubgroup::finite_rotations({0, 1}, 3), r).elements.size() == 3);

    const GroupSample powers = sample_subgroup(ElementarySubgroup::axis_cyclic({0, HUGE_VAL}, 1), 3);
    CHECK(powers.elements.size() == 7);
    for (const Isometry& g : powers.elements) {
        const double n = std::log(g.a()) * 2;
        CHECK(std::abs(n - std::round(n)) < 1e-12);
        CHECK(std::abs(n) <= 3 + 1e-12);
    }
}

TEST_CASE("samples stay in the ball, are inverse closed and deduplicated")
{
    const Axis axis{-1, 2};
    const ElementarySubgroup groups[] = {
        ElementarySubgroup::rotations({0.3, 1.2}),
        ElementarySubgroup::finite_rotations({0, 2}, 7),
        ElementarySubgroup::axis_group(axis),
        ElementarySubgroup::axis_cyclic(axis, 0.4),
        ElementarySubgroup::axis_full(axis),
        ElementarySubgroup::dihedral(axis, 0.5, psl2::point_on_axis(axis, 0.2)),
        ElementarySubgroup::parabolic(0.5),
        ElementarySubgroup::borel_cyclic(HUGE_VAL, 0.3),
        ElementarySubgroup::borel(-1),
    };
    SampleOptions opts;
    opts.step = 5e-2;
    for (const auto& h : groups) {
        CAPTURE(psl2::describe(h));
        const GroupSample s = sample_subgroup(h, 1.5, opts);
        CHECK_FALSE(s.elements.empty());
        for (const Isometry& g : s.elements) CHECK(psl2::displacement(g) <= 1.5 + 1e-9);
        CHECK(inverse_closed(s));
        CHECK(deduplicated(s));
    }
}

TEST_CASE("sampling respects the element budget")
{
    SampleOptions opts;
    opts.max_elements = 50;
    CHECK_THROWS_AS(sample_subgroup(ElementarySubgroup::rotations({0, 1}), 1, opts), BudgetError);
}

TEST_CASE("words in generators")
{
    const Isometry g = psl2::translation({0, HUGE_VAL}, 1);
    const GroupSample s = sample_generated({g}, 3, 6, 0.5);
    CHECK(s.elements.size() == 7);
    CHECK(chabauty_distance(s, sample_subgroup(ElementarySubgroup::axis_cyclic({0, HUGE_VAL}, 1), 3)) < 1e-12);
}

TEST_CASE("deduplication")
{
    const Isometry g(1, 0.5, 0, 1);
    const auto out = deduplicate({g, g, Isometry(1, 0.5 + 1e-12, 0, 1), Isometry::identity()});
    CHECK(out.size() == 2);
}

TEST_CASE("Chabauty distance is a pseudometric")
{
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.05, 2);
    SampleOptions opts;
    opts.step = 5e-2;
    auto random_group = [&] {
        const Axis axis{-u(rng), u(rng)};
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: return sample_subgroup(ElementarySubgroup::axis_cyclic(axis, u(rng)), 2, opts);
        case 1: return sample_subgroup(ElementarySubgroup::finite_rotations({u(rng), u(rng)}, 2 + int(3 * u(rng))), 2, opts);
        default: return sample_subgroup(ElementarySubgroup::borel_cyclic(u(rng), u(rng)), 2, opts);
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        const GroupSample a = random_group(), b = random_group(), c = random_group();
        CHECK(chabauty_distance(a, a) == 0);
        CHECK(chabauty_distance(a, b) == doctest::Approx(chabauty_distance(b, a)).epsilon(1e-15));
        CHECK(chabauty_distance(a, c) <= chabauty_distance(a, b) + chabauty_distance(b, c) + 1e-12);
    }
    GroupSample other = sample_subgroup(ElementarySubgroup::trivial(), 1);
    CHECK_THROWS_AS(chabauty_distance(other, sample_subgroup(ElementarySubgroup::trivial(), 2)), ConfigError);
}

TEST_CASE("finite rotation groups approach the circle")
{
    const GroupSample circle = sample_subgroup(ElementarySubgroup::rotations({0, 1}), 3);
    double prev = HUGE_VAL;
    for (int n = 20; n <= 200; n += 20) {
        const double d = chabauty_distance(sample_subgroup(ElementarySubgroup::finite_rotations({0, 1}, n), 3), circle);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 0.05);
}

TEST_CASE("families and schedules")
{
    LimitSchedule s;
    s.steps = 10;
    s.n_first = 25;
    s.n_last = 200;
    const auto orders = schedule_orders(s);
    REQUIRE(orders.size() == 10);
    CHECK(orders.front() == 25);
    CHECK(orders.back() == 200);
    for (std::size_t i = 1; i < orders.size(); ++i) CHECK(orders[i] > orders[i - 1]);

    for (auto f : {LimitFamily::RotationsToCircle, LimitFamily::TranslationsToAxis, LimitFamily::DihedralToHalfTurn,
                   LimitFamily::RotationsToTrivial})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_THROWS_AS(parse_family("nonsense"), ConfigError);
    CHECK(family_limit(LimitFamily::RotationsToTrivial).tag == psl2::SubgroupTag::Trivial);
    CHECK(family_limit(LimitFamily::DihedralToHalfTurn).order == 2);
}

TEST_CASE("limit experiments converge")
{
    for (auto f : {LimitFamily::RotationsToCircle, LimitFamily::TranslationsToAxis, LimitFamily::DihedralToHalfTurn,
                   LimitFamily::RotationsToTrivial}) {
        CAPTURE(to_string(f));
        LimitSchedule s;
        s.family = f;
        const LimitReport r = limit_experiment(s);
        CHECK(r.steps.size() == 10);
        CHECK(r.tail_ok);
        CHECK(r.below_threshold);
        CHECK(r.verdict);
        CHECK(r.steps.back().distance < s.threshold);
    }
}
