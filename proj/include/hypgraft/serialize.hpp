#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypgraft/acceptance.hpp"
#include "hypgraft/chabauty.hpp"
#include "hypgraft/grafting.hpp"
#include "hypgraft/hexagon.hpp"
#include "hypgraft/lens.hpp"
#include "hypgraft/pants.hpp"

namespace hypgraft::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

// Non-finite values travel as the strings "inf" and "-inf".  NaN is refused.
json number(double x);
double number_of(const json& j);
std::string csv_number(double x);

struct HexagonReport {
    std::array<double, 3> free_sides{};
    std::array<double, 3> determined_sides{};
    std::vector<hex::Neck> necks;
};

HexagonReport hexagon_report(double a, double b, double c);

struct PantsEntry {
    std::array<double, 3> boundary{};
    std::array<std::optional<double>, 3> seams; // empty when a neighbour is a cusp
};

struct CurveCollar {
    std::string id;
    pants::Collar collar;
};

struct PantsReport {
    std::vector<PantsEntry> pants;
    std::vector<CurveCollar> collars;
    double systole = 0;
};

PantsReport pants_report(const pants::SurfaceFN& surface);

struct GraftConfig {
    pants::SurfaceFN surface;
    std::vector<graft::GraftingCurve> curves;
    double length_cap = 2.0;
    double delta = 1.0; // reduced collar used by the pinch model
};

struct GraftEntry {
    std::string id;
    double core_length = 0;
    double graft_length = 0;
    bool degenerate = false;
    double rho = 0;
    double omega = 0;
    double modulus = 0;
    graft::LengthInterval bounds;
    std::optional<double> pinched_length; // finite grafting only
};

struct GraftReport {
    double length_cap = 2.0;
    double delta = 1.0;
    std::vector<GraftEntry> curves;
};

GraftReport graft_report(const GraftConfig& config);

struct FlowRow {
    double t = 0;
    double graft_length = 0;
    double inner_radius = 0;
    double outer_radius = 0;
    double inner_target = 0;
    double outer_target = 0;
    double inner_conformal = 0;
    bool pinched = false;
};

struct FlowTrace {
    double length = 0;
    double systole = 0;
    double epsilon = 0.1;
    std::vector<FlowRow> rows;
};

FlowTrace flow_trace(double length, double systole, double epsilon, int steps);
std::string to_csv(const FlowTrace& trace);

struct ChabautyRun {
    std::uint64_t seed = 0;
    chabauty::LimitReport report;
};

json to_json(const hex::Neck& neck);
json to_json(const HexagonReport& report);
json to_json(const pants::SurfaceFN& surface);
json to_json(const PantsReport& report);
json to_json(const GraftConfig& config);
json to_json(const GraftReport& report);
json to_json(const FlowTrace& trace);
json to_json(const psl2::ElementarySubgroup& group);
json to_json(const ChabautyRun& run);
json to_json(const lens::LensResult& result);
json to_json(const acceptance::Report& report);

// Inverse of to_json.  Unknown keys, a missing or wrong schema and
// malformed values raise ConfigError.
template <class T>
T from_json(const json& j);

} // namespace hypgraft::io
