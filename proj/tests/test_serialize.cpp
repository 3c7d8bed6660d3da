#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>

#include "hypgraft/errors.hpp"
#include "hypgraft/serialize.hpp"

using namespace hypgraft;
using namespace hypgraft::io;

namespace {

json load(const std::string& name)
{
    std::ifstream in(std::string(HYPGRAFT_TEST_DATA) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

// Through text and back, so the check covers the printed form too.
template <class T>
void check_round_trip(const T& value)
{
    const json first = to_json(value);
    const json reread = json::parse(first.dump());
    CHECK(to_json(from_json<T>(reread)) == first);
}

} // namespace

TEST_CASE("numbers and infinities")
{
    CHECK(number(1.5) == json(1.5));
    CHECK(number(HUGE_VAL) == json("inf"));
    CHECK(number(-HUGE_VAL) == json("-inf"));
    CHECK_THROWS_AS(number(std::numeric_limits<double>::quiet_NaN()), ConfigError);

    CHECK(std::isinf(number_of(json("inf"))));
    CHECK(number_of(json("-inf")) < 0);
    CHECK(number_of(json(3)) == 3);
    CHECK_THROWS_AS(number_of(json("nan")), ConfigError);
    CHECK_THROWS_AS(number_of(json(true)), ConfigError);
    CHECK_THROWS_AS(number_of(json(nullptr)), ConfigError);
}

TEST_CASE("csv numbers are shortest round trip")
{
    CHECK(csv_number(0.1) == "0.1");
    CHECK(csv_number(2) == "2");
    CHECK(csv_number(HUGE_VAL) == "inf");
    CHECK(csv_number(-HUGE_VAL) == "-inf");
    for (double x : {1.0 / 3, 1e-300, 6.02214076e23, -0.0751}) CHECK(std::stod(csv_number(x)) == x);
}

TEST_CASE("hexagon reports round trip")
{
    const HexagonReport r = hexagon_report(0.4, 1.3, 2.2);
    CHECK(r.necks.size() == 9);
    check_round_trip(r);
    const json j = to_json(r);
    CHECK(j.at("schema") == schema_version);
    CHECK(j.at("kind") == "hexagon");
}

TEST_CASE("surface documents")
{
    const pants::SurfaceFN s = from_json<pants::SurfaceFN>(load("surface.json"));
    check_round_trip(s);
    CHECK_THROWS_AS(from_json<pants::SurfaceFN>(load("unknown_key.json")), ConfigError);

    json wrong_schema = load("surface.json");
    wrong_schema["schema"] = 2;
    CHECK_THROWS_AS(from_json<pants::SurfaceFN>(wrong_schema), ConfigError);

    json missing_schema = load("surface.json");
    missing_schema.erase("schema");
    CHECK_THROWS_AS(from_json<pants::SurfaceFN>(missing_schema), ConfigError);

    json wrong_kind = load("surface.json");
    wrong_kind["kind"] = "hexagon";
    CHECK_THROWS_AS(from_json<pants::SurfaceFN>(wrong_kind), ConfigError);

    json bad_length = load("surface.json");
    bad_length["curves"][0]["length"] = "long";
    CHECK_THROWS_AS(from_json<pants::SurfaceFN>(bad_length), ConfigError);
}

TEST_CASE("pants reports round trip")
{
    const PantsReport r = pants_report(from_json<pants::SurfaceFN>(load("surface.json")));
    CHECK(r.pants.size() == 2);
    CHECK(r.collars.size() == 2);
    CHECK(r.systole == 0.3);
    check_round_trip(r);
}

TEST_CASE("graft configs and reports")
{
    const GraftConfig c = from_json<GraftConfig>(load("graft.json"));
    REQUIRE(c.curves.size() == 2);
    CHECK(std::isinf(c.curves[0].graft_length));
    CHECK(c.curves[1].graft_length == 2.5);
    check_round_trip(c);

    const GraftReport r = graft_report(c);
    REQUIRE(r.curves.size() == 2);
    CHECK(r.curves[0].bounds.cusp);
    CHECK_FALSE(r.curves[0].pinched_length);
    CHECK(r.curves[1].pinched_length);
    check_round_trip(r);
    CHECK(to_json(r).at("curves").at(0).at("graft_length") == "inf");
}

TEST_CASE("flow traces")
{
    const FlowTrace t = flow_trace(0.05, 0.05, 0.1, 11);
    REQUIRE(t.rows.size() == 11);
    CHECK(t.rows.front().t == 0);
    CHECK(t.rows.back().t == 1);
    CHECK_THROWS_AS(flow_trace(0.05, 0.05, 0.1, 1), ConfigError);
    CHECK(t.rows.back().pinched);
    check_round_trip(t);

    const std::string csv = to_csv(t);
    CHECK(csv.rfind("t,l,L_t,R_I,R_II,Delta_I,Delta_II,delta_I,pinched\n", 0) == 0);
    CHECK(csv.find("\n1,0.05,inf,") != std::string::npos);
    CHECK(csv.back() == '\n');
}

TEST_CASE("chabauty runs round trip")
{
    chabauty::LimitSchedule s;
    s.family = chabauty::LimitFamily::DihedralToHalfTurn;
    s.steps = 4;
    check_round_trip(ChabautyRun{7, chabauty::limit_experiment(s)});
    check_round_trip(psl2::ElementarySubgroup::dihedral({-1, 2}, 0.5, psl2::point_on_axis({-1, 2}, 0.2)));
    check_round_trip(psl2::ElementarySubgroup::borel_cyclic(HUGE_VAL, 0.3));
}

TEST_CASE("lens results round trip")
{
    for (const char* orders : {"2,3,inf", "5,5,inf", "inf,4,inf", "inf,inf,inf"})
        check_round_trip(lens::lens_from_orders(lens::ConeData::parse(orders)));
}

TEST_CASE("acceptance reports round trip")
{
    acceptance::Report r;
    r.seed = 99;
    r.criteria = {{1, "first", true, "ok"}, {2, "second", false, "off by 1e-3"}};
    check_round_trip(r);
    json j = to_json(r);
    j["extra"] = 1;
    CHECK_THROWS_AS(from_json<acceptance::Report>(j), ConfigError);
}
