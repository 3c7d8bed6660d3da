#include "hypgraft/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "hypgraft/errors.hpp"
#include "hypgraft/flow.hpp"

namespace hypgraft::io {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Object view that remembers which keys were read and rejects the rest.
class Fields {
public:
    Fields(const json& j, std::string where) : j_(j), where_(std::move(where))
    {
        if (!j_.is_object()) throw ConfigError(where_ + ": expected an object");
    }

    const json& at(const std::string& key)
    {
        const auto it = j_.find(key);
        if (it == j_.end()) throw ConfigError(where_ + ": missing key '" + key + "'");
        seen_.insert(key);
        return *it;
    }

    const json* find(const std::string& key)
    {
        const auto it = j_.find(key);
        if (it == j_.end()) return nullptr;
        seen_.insert(key);
        return &*it;
    }

    double num(const std::string& key) { return number_of(at(key)); }
    std::string str(const std::string& key) { return get<std::string>(key); }
    bool flag(const std::string& key) { return get<bool>(key); }

    template <class T>
    T get(const std::string& key)
    {
        try {
            return at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError(where_ + ": bad value for '" + key + "'");
        }
    }

    void finish() const
    {
        for (const auto& item : j_.items())
            if (!seen_.count(item.key())) throw ConfigError(where_ + ": unknown key '" + item.key() + "'");
    }

private:
    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

json document(const std::string& kind)
{
    return json{{"schema", schema_version}, {"kind", kind}};
}

void expect_document(Fields& f, const std::string& kind)
{
    if (f.get<int>("schema") != schema_version) throw ConfigError("unsupported schema version");
    if (f.str("kind") != kind) throw ConfigError("expected a '" + kind + "' document");
}

json triple(const std::array<double, 3>& v)
{
    return json::array({number(v[0]), number(v[1]), number(v[2])});
}

std::array<double, 3> triple_of(const json& j)
{
    if (!j.is_array() || j.size() != 3) throw ConfigError("expected three numbers");
    return {number_of(j[0]), number_of(j[1]), number_of(j[2])};
}

json complex_json(psl2::Complex z)
{
    return json::array({number(z.real()), number(z.imag())});
}

psl2::Complex complex_of(const json& j)
{
    if (!j.is_array() || j.size() != 2) throw ConfigError("expected [re, im]");
    return {number_of(j[0]), number_of(j[1])};
}

std::vector<const json*> array_items(const json& j, const std::string& what)
{
    if (!j.is_array()) throw ConfigError(what + ": expected an array");
    std::vector<const json*> out;
    for (const auto& item : j) out.push_back(&item);
    return out;
}

const char* kind_name(pants::CurveKind k) { return k == pants::CurveKind::Regular ? "regular" : "degenerate"; }

pants::CurveKind curve_kind_of(const std::string& s)
{
    if (s == "regular") return pants::CurveKind::Regular;
    if (s == "degenerate") return pants::CurveKind::Degenerate;
    throw ConfigError("unknown curve kind '" + s + "'");
}

json collar_json(const pants::Collar& c)
{
    return {{"kind", c.kind == pants::Collar::Kind::Cusp ? "cusp" : "geodesic"},
            {"core_length", number(c.core_length)},
            {"radius", number(c.radius)},
            {"conformal_half_width", number(c.conformal_half_width)},
            {"modulus", number(c.modulus)},
            {"boundary_length", number(c.boundary_length)}};
}

pants::Collar collar_of(const json& j)
{
    Fields f(j, "collar");
    pants::Collar c;
    const std::string kind = f.str("kind");
    if (kind != "cusp" && kind != "geodesic") throw ConfigError("unknown collar kind");
    c.kind = kind == "cusp" ? pants::Collar::Kind::Cusp : pants::Collar::Kind::Geodesic;
    c.core_length = f.num("core_length");
    c.radius = f.num("radius");
    c.conformal_half_width = f.num("conformal_half_width");
    c.modulus = f.num("modulus");
    c.boundary_length = f.num("boundary_length");
    f.finish();
    return c;
}

json interval_json(const graft::LengthInterval& b)
{
    return {{"lo", number(b.lo)}, {"hi", number(b.hi)}, {"cusp", b.cusp}};
}

graft::LengthInterval interval_of(const json& j)
{
    Fields f(j, "length interval");
    graft::LengthInterval b;
    b.lo = f.num("lo");
    b.hi = f.num("hi");
    b.cusp = f.flag("cusp");
    f.finish();
    return b;
}

json optional_number(const std::optional<double>& x)
{
    return x ? number(*x) : json(nullptr);
}

std::optional<double> optional_number_of(const json& j)
{
    if (j.is_null()) return std::nullopt;
    return number_of(j);
}

psl2::SubgroupTag tag_of(const std::string& s)
{
    using psl2::SubgroupTag;
    for (SubgroupTag t : {SubgroupTag::Trivial, SubgroupTag::RotationGroup, SubgroupTag::FiniteRotation,
                          SubgroupTag::AxisGroup, SubgroupTag::AxisCyclic, SubgroupTag::AxisFull,
                          SubgroupTag::Dihedral, SubgroupTag::ParabolicGroup, SubgroupTag::BorelCyclic,
                          SubgroupTag::Borel})
        if (psl2::to_string(t) == s) return t;
    throw ConfigError("unknown subgroup tag '" + s + "'");
}

const char* lens_case_name(lens::LensCase c)
{
    switch (c) {
    case lens::LensCase::DistinctCones: return "distinct-cones";
    case lens::LensCase::EqualCones: return "equal-cones";
    case lens::LensCase::OneCone: return "one-cone";
    case lens::LensCase::ThreeCusps: return "three-cusps";
    }
    return "";
}

lens::LensCase lens_case_of(const std::string& s)
{
    for (auto c : {lens::LensCase::DistinctCones, lens::LensCase::EqualCones, lens::LensCase::OneCone,
                   lens::LensCase::ThreeCusps})
        if (s == lens_case_name(c)) return c;
    throw ConfigError("unknown lens case '" + s + "'");
}

} // namespace

json number(double x)
{
    if (std::isnan(x)) throw ConfigError("NaN cannot be serialized");
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double number_of(const json& j)
{
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf") return inf;
        if (s == "-inf") return -inf;
        throw ConfigError("expected a number, got '" + s + "'");
    }
    if (!j.is_number()) throw ConfigError("expected a number");
    return j.get<double>();
}

std::string csv_number(double x)
{
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

HexagonReport hexagon_report(double a, double b, double c)
{
    const hex::RAHexagon h(a, b, c);
    return {h.free_sides(), h.determined_sides(), hex::all_necks(h)};
}

PantsReport pants_report(const pants::SurfaceFN& surface)
{
    PantsReport r;
    for (std::size_t i = 0; i < surface.pants().size(); ++i) {
        const pants::PantsData p = surface.pants_data(i);
        PantsEntry e;
        e.boundary = p.boundary_lengths();
        for (int k = 0; k < 3; ++k) {
            try {
                e.seams[k] = p.seam_length(k);
            } catch (const Unsupported&) {
                e.seams[k] = std::nullopt;
            }
        }
        r.pants.push_back(e);
    }
    for (const auto& c : surface.curves()) r.collars.push_back({c.id, pants::standard_collar(c.length)});
    r.systole = surface.systole_of_decomposition();
    return r;
}

GraftReport graft_report(const GraftConfig& config)
{
    const graft::GraftingData data(config.surface, config.curves, config.length_cap);
    GraftReport r;
    r.length_cap = config.length_cap;
    r.delta = config.delta;
    for (const auto& c : config.curves) {
        const graft::ExtendedCollar ec = data.collar(c.id);
        GraftEntry e;
        e.id = c.id;
        e.core_length = ec.core_length();
        e.graft_length = c.graft_length;
        e.degenerate = ec.degenerate();
        e.rho = ec.rho();
        e.omega = ec.omega();
        e.modulus = ec.modulus();
        e.bounds = data.length_bounds(c.id);
        if (std::isfinite(c.graft_length)) e.pinched_length = pants::pinch_length(ec.core_length(), c.graft_length, config.delta);
        r.curves.push_back(e);
    }
    return r;
}

FlowTrace flow_trace(double length, double systole, double epsilon, int steps)
{
    if (steps < 2) throw ConfigError("a trace needs at least two steps");
    flow::FlowParams params;
    params.epsilon = epsilon;
    FlowTrace trace{length, systole, epsilon, {}};
    for (int i = 0; i < steps; ++i) {
        const double t = i == steps - 1 ? 1.0 : static_cast<double>(i) / (steps - 1);
        const flow::SubannulusBounds b = flow::subannuli_bounds(length, t, systole, params);
        trace.rows.push_back({t, b.graft_length, b.inner_radius, b.outer_radius, b.inner_target, b.outer_target,
                              b.inner_conformal, b.infinite()});
    }
    return trace;
}

std::string to_csv(const FlowTrace& trace)
{
    std::ostringstream out;
    out << "t,l,L_t,R_I,R_II,Delta_I,Delta_II,delta_I,pinched\n";
    for (const auto& r : trace.rows)
        out << csv_number(r.t) << ',' << csv_number(trace.length) << ',' << csv_number(r.graft_length) << ','
            << csv_number(r.inner_radius) << ',' << csv_number(r.outer_radius) << ','
            << csv_number(r.inner_target) << ',' << csv_number(r.outer_target) << ','
            << csv_number(r.inner_conformal) << ',' << (r.pinched ? 1 : 0)
            << '\n';
    return out.str();
}

// ---- encoders ----

json to_json(const hex::Neck& n)
{
    return {{"id", hex::to_string(n.id)},
            {"length", number(n.length)},
            {"plus_foot", number(n.plus_foot)},
            {"minus_foot", number(n.minus_foot)},
            {"opposite_plus", number(n.opposite_plus)},
            {"opposite_minus", number(n.opposite_minus)}};
}

json to_json(const HexagonReport& r)
{
    json j = document("hexagon");
    j["free_sides"] = triple(r.free_sides);
    j["determined_sides"] = triple(r.determined_sides);
    j["necks"] = json::array();
    for (const auto& n : r.necks) j["necks"].push_back(to_json(n));
    return j;
}

json to_json(const pants::SurfaceFN& s)
{
    json j = document("surface");
    j["curves"] = json::array();
    for (const auto& c : s.curves())
        j["curves"].push_back({{"id", c.id},
                               {"length", number(c.length)},
                               {"twist", number(c.twist)},
                               {"kind", kind_name(c.kind)}});
    j["pants"] = json::array();
    for (const auto& p : s.pants()) {
        json slots = json::array();
        for (const auto& slot : p.slots) {
            switch (slot.kind) {
            case pants::Slot::Kind::Curve: slots.push_back({{"type", "curve"}, {"curve", slot.curve}}); break;
            case pants::Slot::Kind::Cusp: slots.push_back({{"type", "cusp"}}); break;
            case pants::Slot::Kind::Boundary:
                slots.push_back({{"type", "boundary"}, {"length", number(slot.length)}});
                break;
            }
        }
        j["pants"].push_back(slots);
    }
    return j;
}

json to_json(const PantsReport& r)
{
    json j = document("pants");
    j["pants"] = json::array();
    for (const auto& e : r.pants)
        j["pants"].push_back({{"boundary", triple(e.boundary)},
                              {"seams", json::array({optional_number(e.seams[0]), optional_number(e.seams[1]),
                                                     optional_number(e.seams[2])})}});
    j["collars"] = json::array();
    for (const auto& c : r.collars) j["collars"].push_back({{"id", c.id}, {"collar", collar_json(c.collar)}});
    j["systole"] = number(r.systole);
    return j;
}

json to_json(const GraftConfig& c)
{
    json j = document("graft-config");
    j["surface"] = to_json(c.surface);
    j["curves"] = json::array();
    for (const auto& g : c.curves)
        j["curves"].push_back({{"id", g.id},
                               {"side", g.preferred_side == graft::Side::Plus ? "plus" : "minus"},
                               {"graft_length", number(g.graft_length)}});
    j["length_cap"] = number(c.length_cap);
    j["delta"] = number(c.delta);
    return j;
}

json to_json(const GraftReport& r)
{
    json j = document("graft");
    j["length_cap"] = number(r.length_cap);
    j["delta"] = number(r.delta);
    j["curves"] = json::array();
    for (const auto& e : r.curves)
        j["curves"].push_back({{"id", e.id},
                               {"core_length", number(e.core_length)},
                               {"graft_length", number(e.graft_length)},
                               {"degenerate", e.degenerate},
                               {"rho", number(e.rho)},
                               {"omega", number(e.omega)},
                               {"modulus", number(e.modulus)},
                               {"bounds", interval_json(e.bounds)},
                               {"pinched_length", optional_number(e.pinched_length)}});
    return j;
}

json to_json(const FlowTrace& t)
{
    json j = document("flow-trace");
    j["length"] = number(t.length);
    j["systole"] = number(t.systole);
    j["epsilon"] = number(t.epsilon);
    j["rows"] = json::array();
    for (const auto& r : t.rows)
        j["rows"].push_back({{"t", number(r.t)},
                             {"L_t", number(r.graft_length)},
                             {"R_I", number(r.inner_radius)},
                             {"R_II", number(r.outer_radius)},
                             {"Delta_I", number(r.inner_target)},
                             {"Delta_II", number(r.outer_target)},
                             {"delta_I", number(r.inner_conformal)},
                             {"pinched", r.pinched}});
    return j;
}

json to_json(const psl2::ElementarySubgroup& h)
{
    return {{"tag", psl2::to_string(h.tag)},
            {"point", complex_json(h.point)},
            {"order", h.order},
            {"axis", json::array({number(h.axis.from), number(h.axis.to)})},
            {"translation", number(h.translation)},
            {"xi", number(h.xi)},
            {"describe", psl2::describe(h)}};
}

json to_json(const ChabautyRun& run)
{
    const auto& r = run.report;
    json j = document("chabauty");
    j["seed"] = run.seed;
    j["schedule"] = {{"family", chabauty::to_string(r.schedule.family)},
                     {"steps", r.schedule.steps},
                     {"n_first", r.schedule.n_first},
                     {"n_last", r.schedule.n_last},
                     {"radius", number(r.schedule.radius)},
                     {"threshold", number(r.schedule.threshold)}};
    j["limit"] = to_json(r.limit);
    j["steps"] = json::array();
    for (const auto& s : r.steps)
        j["steps"].push_back({{"n", s.n}, {"distance", number(s.distance)}, {"sample_size", s.sample_size}});
    j["tail_ok"] = r.tail_ok;
    j["below_threshold"] = r.below_threshold;
    j["verdict"] = r.verdict;
    return j;
}

json to_json(const lens::LensResult& r)
{
    json j = document("lens");
    j["case"] = lens_case_name(r.lens_case);
    j["p"] = r.p;
    j["q"] = r.q;
    j["canonical"] = {{"p", r.space.p()}, {"q", r.space.q()}};
    j["fibre_powers"] = r.fibre_powers;
    j["note"] = r.note;
    j["summary"] = r.summary();
    return j;
}

json to_json(const acceptance::Report& r)
{
    json j = document("acceptance");
    j["seed"] = r.seed;
    j["criteria"] = json::array();
    for (const auto& c : r.criteria)
        j["criteria"].push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["all_passed"] = r.all_passed();
    return j;
}

// ---- decoders ----

template <>
hex::Neck from_json<hex::Neck>(const json& j)
{
    Fields f(j, "neck");
    hex::Neck n;
    n.id = hex::parse_neck(f.str("id"));
    n.length = f.num("length");
    n.plus_foot = f.num("plus_foot");
    n.minus_foot = f.num("minus_foot");
    n.opposite_plus = f.num("opposite_plus");
    n.opposite_minus = f.num("opposite_minus");
    f.finish();
    return n;
}

template <>
HexagonReport from_json<HexagonReport>(const json& j)
{
    Fields f(j, "hexagon");
    expect_document(f, "hexagon");
    HexagonReport r;
    r.free_sides = triple_of(f.at("free_sides"));
    r.determined_sides = triple_of(f.at("determined_sides"));
    for (const json* n : array_items(f.at("necks"), "necks")) r.necks.push_back(from_json<hex::Neck>(*n));
    f.finish();
    return r;
}

template <>
pants::SurfaceFN from_json<pants::SurfaceFN>(const json& j)
{
    Fields f(j, "surface");
    expect_document(f, "surface");
    std::vector<pants::Curve> curves;
    for (const json* item : array_items(f.at("curves"), "curves")) {
        Fields c(*item, "curve");
        pants::Curve curve;
        curve.id = c.str("id");
        curve.length = c.num("length");
        if (c.find("twist")) curve.twist = number_of(*c.find("twist"));
        if (c.find("kind")) curve.kind = curve_kind_of(c.find("kind")->get<std::string>());
        c.finish();
        curves.push_back(curve);
    }
    std::vector<pants::PantsRecord> records;
    for (const json* item : array_items(f.at("pants"), "pants")) {
        if (!item->is_array() || item->size() != 3) throw ConfigError("each pair of pants has three slots");
        pants::PantsRecord rec;
        for (std::size_t i = 0; i < 3; ++i) {
            Fields s((*item)[i], "slot");
            const std::string type = s.str("type");
            if (type == "curve") {
                rec.slots[i].kind = pants::Slot::Kind::Curve;
                rec.slots[i].curve = s.str("curve");
            } else if (type == "cusp") {
                rec.slots[i].kind = pants::Slot::Kind::Cusp;
            } else if (type == "boundary") {
                rec.slots[i].kind = pants::Slot::Kind::Boundary;
                rec.slots[i].length = s.num("length");
            } else {
                throw ConfigError("unknown slot type '" + type + "'");
            }
            s.finish();
        }
        records.push_back(rec);
    }
    f.finish();
    return pants::SurfaceFN(std::move(curves), std::move(records));
}

template <>
PantsReport from_json<PantsReport>(const json& j)
{
    Fields f(j, "pants");
    expect_document(f, "pants");
    PantsReport r;
    for (const json* item : array_items(f.at("pants"), "pants")) {
        Fields e(*item, "pants entry");
        PantsEntry entry;
        entry.boundary = triple_of(e.at("boundary"));
        const json& seams = e.at("seams");
        if (!seams.is_array() || seams.size() != 3) throw ConfigError("expected three seams");
        for (std::size_t i = 0; i < 3; ++i) entry.seams[i] = optional_number_of(seams[i]);
        e.finish();
        r.pants.push_back(entry);
    }
    for (const json* item : array_items(f.at("collars"), "collars")) {
        Fields c(*item, "curve collar");
        r.collars.push_back({c.str("id"), collar_of(c.at("collar"))});
        c.finish();
    }
    r.systole = f.num("systole");
    f.finish();
    return r;
}

template <>
GraftConfig from_json<GraftConfig>(const json& j)
{
    Fields f(j, "graft-config");
    expect_document(f, "graft-config");
    GraftConfig c{from_json<pants::SurfaceFN>(f.at("surface")), {}};
    for (const json* item : array_items(f.at("curves"), "curves")) {
        Fields g(*item, "grafting curve");
        graft::GraftingCurve curve;
        curve.id = g.str("id");
        if (const json* side = g.find("side")) {
            const std::string s = side->is_string() ? side->get<std::string>() : "";
            if (s != "plus" && s != "minus") throw ConfigError("side must be 'plus' or 'minus'");
            curve.preferred_side = s == "plus" ? graft::Side::Plus : graft::Side::Minus;
        }
        curve.graft_length = g.num("graft_length");
        g.finish();
        c.curves.push_back(curve);
    }
    if (const json* cap = f.find("length_cap")) c.length_cap = number_of(*cap);
    if (const json* delta = f.find("delta")) c.delta = number_of(*delta);
    f.finish();
    return c;
}

template <>
GraftReport from_json<GraftReport>(const json& j)
{
    Fields f(j, "graft");
    expect_document(f, "graft");
    GraftReport r;
    r.length_cap = f.num("length_cap");
    r.delta = f.num("delta");
    for (const json* item : array_items(f.at("curves"), "curves")) {
        Fields g(*item, "graft entry");
        GraftEntry e;
        e.id = g.str("id");
        e.core_length = g.num("core_length");
        e.graft_length = g.num("graft_length");
        e.degenerate = g.flag("degenerate");
        e.rho = g.num("rho");
        e.omega = g.num("omega");
        e.modulus = g.num("modulus");
        e.bounds = interval_of(g.at("bounds"));
        e.pinched_length = optional_number_of(g.at("pinched_length"));
        g.finish();
        r.curves.push_back(e);
    }
    f.finish();
    return r;
}

template <>
FlowTrace from_json<FlowTrace>(const json& j)
{
    Fields f(j, "flow-trace");
    expect_document(f, "flow-trace");
    FlowTrace t;
    t.length = f.num("length");
    t.systole = f.num("systole");
    t.epsilon = f.num("epsilon");
    for (const json* item : array_items(f.at("rows"), "rows")) {
        Fields r(*item, "flow row");
        FlowRow row;
        row.t = r.num("t");
        row.graft_length = r.num("L_t");
        row.inner_radius = r.num("R_I");
        row.outer_radius = r.num("R_II");
        row.inner_target = r.num("Delta_I");
        row.outer_target = r.num("Delta_II");
        row.inner_conformal = r.num("delta_I");
        row.pinched = r.flag("pinched");
        r.finish();
        t.rows.push_back(row);
    }
    f.finish();
    return t;
}

template <>
psl2::ElementarySubgroup from_json<psl2::ElementarySubgroup>(const json& j)
{
    Fields f(j, "subgroup");
    psl2::ElementarySubgroup h;
    h.tag = tag_of(f.str("tag"));
    h.point = complex_of(f.at("point"));
    h.order = f.get<int>("order");
    const json& axis = f.at("axis");
    if (!axis.is_array() || axis.size() != 2) throw ConfigError("axis needs two endpoints");
    h.axis = {number_of(axis[0]), number_of(axis[1])};
    h.translation = f.num("translation");
    h.xi = f.num("xi");
    if (f.str("describe") != psl2::describe(h)) throw ConfigError("subgroup description does not match its fields");
    f.finish();
    return h;
}

template <>
ChabautyRun from_json<ChabautyRun>(const json& j)
{
    Fields f(j, "chabauty");
    expect_document(f, "chabauty");
    ChabautyRun run;
    run.seed = f.get<std::uint64_t>("seed");
    auto& r = run.report;
    {
        Fields s(f.at("schedule"), "schedule");
        r.schedule.family = chabauty::parse_family(s.str("family"));
        r.schedule.steps = s.get<int>("steps");
        r.schedule.n_first = s.get<int>("n_first");
        r.schedule.n_last = s.get<int>("n_last");
        r.schedule.radius = s.num("radius");
        r.schedule.threshold = s.num("threshold");
        s.finish();
    }
    r.limit = from_json<psl2::ElementarySubgroup>(f.at("limit"));
    for (const json* item : array_items(f.at("steps"), "steps")) {
        Fields s(*item, "step");
        r.steps.push_back({s.get<int>("n"), s.num("distance"), s.get<std::size_t>("sample_size")});
        s.finish();
    }
    r.tail_ok = f.flag("tail_ok");
    r.below_threshold = f.flag("below_threshold");
    r.verdict = f.flag("verdict");
    f.finish();
    return run;
}

template <>
lens::LensResult from_json<lens::LensResult>(const json& j)
{
    Fields f(j, "lens");
    expect_document(f, "lens");
    lens::LensResult r;
    r.lens_case = lens_case_of(f.str("case"));
    r.p = f.get<long long>("p");
    r.q = f.get<long long>("q");
    r.space = lens::LensSpace(r.p, r.q);
    {
        Fields c(f.at("canonical"), "canonical");
        if (c.get<long long>("p") != r.space.p() || c.get<long long>("q") != r.space.q())
            throw ConfigError("canonical form does not match (p, q)");
        c.finish();
    }
    r.fibre_powers = f.get<std::vector<long long>>("fibre_powers");
    r.note = f.str("note");
    if (f.str("summary") != r.summary()) throw ConfigError("lens summary does not match its fields");
    f.finish();
    return r;
}

template <>
acceptance::Report from_json<acceptance::Report>(const json& j)
{
    Fields f(j, "acceptance");
    expect_document(f, "acceptance");
    acceptance::Report r;
    r.seed = f.get<std::uint64_t>("seed");
    for (const json* item : array_items(f.at("criteria"), "criteria")) {
        Fields c(*item, "criterion");
        r.criteria.push_back({c.get<int>("id"), c.str("name"), c.flag("passed"), c.str("detail")});
        c.finish();
    }
    if (f.flag("all_passed") != r.all_passed()) throw ConfigError("all_passed does not match the criteria");
    f.finish();
    return r;
}

} // namespace hypgraft::io
