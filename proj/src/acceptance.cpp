#include "hypgraft/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "hypgraft/chabauty.hpp"
#include "hypgraft/errors.hpp"
#include "hypgraft/flow.hpp"
#include "hypgraft/grafting.hpp"
#include "hypgraft/hexagon.hpp"
#include "hypgraft/hexagon_map.hpp"
#include "hypgraft/hyptrig.hpp"
#include "hypgraft/lens.hpp"
#include "hypgraft/pants.hpp"

namespace hypgraft::acceptance {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Pinned tolerances.
constexpr double hexagon_rule_tol = 1e-9;
constexpr double pentagon_rule_tol = 1e-9;
constexpr double neck_equation_tol = 1e-9;
constexpr double neck_symmetry_tol = 1e-12;
constexpr double collar_boundary_tol = 1e-3;
constexpr double short_bound_cap = 1e-2;
constexpr double pinch_residual_tol = 1e-10;
constexpr double seam_tol = 1e-10;
constexpr double stretch_tol = 1e-12;
constexpr double identity_distortion_tol = 1e-9;
constexpr double complement_stability = 0.10;

constexpr int random_samples = 1000;

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double rel(double value, double reference) { return std::fabs(value / reference - 1); }

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
}

// cosh(d) for the side across from a in a right-angled hexagon with
// consecutive alternate sides b, a, c.
double hexagon_rule(double a, double b, double c)
{
    return (std::cosh(b) * std::cosh(c) + std::cosh(a)) / (std::sinh(b) * std::sinh(c));
}

Criterion hexagon_identities(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> side(0.05, 5.0);
    double worst_hex = 0, worst_pent = 0;
    int seam_mismatches = 0;
    for (int n = 0; n < random_samples; ++n) {
        const double a = side(rng), b = side(rng), c = side(rng);
        const hex::RAHexagon h(a, b, c);
        const auto& f = h.free_sides();
        const auto& d = h.determined_sides();
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            worst_hex = std::max(worst_hex, rel(std::cosh(d[i]), hexagon_rule(f[i], f[j], f[k])));
            worst_hex = std::max(worst_hex, rel(std::cosh(f[i]), hexagon_rule(d[i], d[j], d[k])));

            // Pentagons cut off by the non-side neck at free side i, sides in
            // order: foot, adjacent determined side, free side, opposite piece, neck.
            const hex::Neck g = hex::nonside_neck(h, i);
            const double before = h.side_at_position(2 * i - 1);
            const double after = h.side_at_position(2 * i + 1);
            const double pentagons[2][5] = {{g.plus_foot, before, f[k], g.opposite_plus, g.length},
                                            {g.minus_foot, after, f[j], g.opposite_minus, g.length}};
            for (const auto& p : pentagons)
                for (int s = 0; s < 5; ++s)
                    worst_pent = std::max(worst_pent, rel(std::sinh(p[(s + 2) % 5]) * std::sinh(p[(s + 3) % 5]),
                                                          std::cosh(p[s])));
        }
        const pants::PantsData doubled(2 * a, 2 * b, 2 * c);
        for (int i = 0; i < 3; ++i)
            if (doubled.seam_length(i) != d[i]) ++seam_mismatches;
    }
    const bool ok = worst_hex <= hexagon_rule_tol && worst_pent <= pentagon_rule_tol && seam_mismatches == 0;
    return {1, "hexagon identities", ok,
            "hexagon rule " + fmt(worst_hex) + ", pentagon rule " + fmt(worst_pent) + ", seam mismatches " +
                std::to_string(seam_mismatches)};
}

Criterion neck_equations(std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> side(0.05, 5.0);
    double worst = 0;
    for (int n = 0; n < random_samples; ++n) {
        const hex::RAHexagon h(side(rng), side(rng), side(rng));
        const auto& f = h.free_sides();
        for (int i = 0; i < 3; ++i) {
            const hex::Neck g = hex::nonside_neck(h, i);
            worst = std::max(worst, rel(std::sinh(g.length) * std::sinh(g.plus_foot), std::cosh(f[(i + 2) % 3])));
            worst = std::max(worst, rel(std::sinh(g.length) * std::sinh(g.minus_foot), std::cosh(f[(i + 1) % 3])));
        }
    }
    double worst_sym = 0;
    for (double a : {0.05, 0.3, 1.0, 2.5, 5.0})
        for (double b : {0.05, 0.7, 1.9, 3.3, 5.0}) {
            const hex::Neck g = hex::nonside_neck(hex::RAHexagon(a, b, a), 1);
            worst_sym = std::max(worst_sym, std::fabs(g.plus_foot - g.minus_foot));
        }
    const bool ok = worst <= neck_equation_tol && worst_sym <= neck_symmetry_tol;
    return {2, "neck equations", ok, "residual " + fmt(worst) + ", symmetric split " + fmt(worst_sym)};
}

Criterion collar_sandwich(std::uint64_t)
{
    int violations = 0;
    for (double len : log_grid(1e-4, 2.0, 40)) {
        const double mod = 2 * pants::standard_collar(len).conformal_half_width / len;
        if (!(trig::pi / len - 1 <= mod && mod <= trig::pi / len)) ++violations;
    }
    const double boundary = pants::standard_collar(1e-3).boundary_length;
    const bool ok = violations == 0 && std::fabs(boundary - 2) <= collar_boundary_tol;
    return {3, "collar modulus sandwich", ok,
            "violations " + std::to_string(violations) + ", boundary at 1e-3 " + fmt(boundary)};
}

Criterion truncation_algebra(std::uint64_t seed)
{
    using graft::StraightAnnulus;
    const StraightAnnulus half_open(2, 0, 9, false, true);
    const StraightAnnulus open(1, -3, 3, true, true);
    const bool first = graft::truncate(half_open, 2) == StraightAnnulus(2, 0, 5, false, true);
    const bool second = graft::truncate(open, 2) == StraightAnnulus(1, -1, 1, true, true);

    std::mt19937_64 rng(seed + 3);
    std::uniform_real_distribution<double> u(0, 1);
    int failures = 0;
    for (int n = 0; n < random_samples; ++n) {
        const double circ = 0.1 + 2 * u(rng);
        const double lo = -20 * u(rng), hi = 20 * u(rng);
        const double blo = lo + (hi - lo) * u(rng);
        const double bhi = blo + (hi - blo) * u(rng);
        const StraightAnnulus a(circ, lo, hi);
        const StraightAnnulus b(circ, blo, bhi);
        if (!graft::truncation_quasimonotone_check(a, b, 10 * u(rng))) ++failures;
    }
    const bool ok = first && second && failures == 0;
    return {4, "truncation algebra", ok,
            std::string("examples ") + (first && second ? "exact" : "differ") + ", containment failures " +
                std::to_string(failures)};
}

Criterion grafted_bounds(std::uint64_t)
{
    constexpr double cap = 2.0;
    int missing = 0, empty = 0, non_decreasing = 0;
    const std::vector<double> lengths = log_grid(1e-3, cap, 25);
    const std::vector<double> grafts = {0, 0.01, 0.1, 0.5, 1, 2, 5, 10, 50, 200, 1000};
    for (double len : lengths) {
        const graft::LengthInterval at0 = graft::grafted_length_bounds(len, 0, cap);
        if (!(at0.lo <= len && len <= at0.hi)) ++missing;
        double previous = inf;
        for (double graft : grafts) {
            const graft::LengthInterval b = graft::grafted_length_bounds(len, graft, cap);
            if (!(b.lo <= b.hi) || !(b.lo > 0)) ++empty;
            if (!(b.hi < previous)) ++non_decreasing;
            previous = b.hi;
        }
    }
    double worst_small = 0;
    for (double factor : {50.0, 60.0, 100.0, 1000.0})
        worst_small = std::max(worst_small, graft::grafted_length_bounds(0.5, trig::pi * 0.5 * factor, cap).hi);
    const bool ok = missing == 0 && empty == 0 && non_decreasing == 0 && worst_small < short_bound_cap;
    return {5, "grafted-length bounds", ok,
            "missing " + std::to_string(missing) + ", empty " + std::to_string(empty) + ", non-decreasing " +
                std::to_string(non_decreasing) + ", upper at L>=50 pi l " + fmt(worst_small)};
}

Criterion pinch_solver(std::uint64_t)
{
    constexpr double delta = 0.5;
    double worst = 0;
    int not_shorter = 0, non_monotone = 0;
    for (double len : log_grid(1e-3, 2.0, 15)) {
        double previous = len;
        for (double extra : {0.0, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 50.0}) {
            const double l = pants::pinch_length(len, extra, delta);
            worst = std::max(worst, std::fabs(pants::pinch_residual(len, extra, delta, l)));
            if (extra > 0 && !(l < len)) ++not_shorter;
            if (extra > 0 && !(l < previous)) ++non_monotone;
            previous = l;
        }
    }
    const bool ok = worst <= pinch_residual_tol && not_shorter == 0 && non_monotone == 0;
    return {6, "pinch solver", ok,
            "residual " + fmt(worst) + ", not shorter " + std::to_string(not_shorter) + ", non-monotone " +
                std::to_string(non_monotone)};
}

Criterion flow_checks(std::uint64_t)
{
    const flow::FlowParams params;
    const double eps = params.epsilon;
    int nonzero_start = 0, wrong_pinch = 0;
    for (double len : log_grid(1e-3, 0.5, 12))
        for (double sys : log_grid(1e-3, 0.5, 12)) {
            if (sys > len) continue;
            if (flow::grafting_length(0, len, sys, params) != 0) ++nonzero_start;
            const bool pinched = std::isinf(flow::grafting_length(1, len, sys, params));
            if (pinched != (len == sys && sys <= eps)) ++wrong_pinch;
        }

    double worst_seam = 0;
    for (double len : log_grid(1e-3, 2 * eps, 15))
        for (double t : {0.0, 0.05, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999, 1.0})
            for (double sys : {len, 0.5 * len})
                worst_seam = std::max(worst_seam, flow::h_t_seam_mismatch(len, t, sys, params));

    double worst_shift = 0;
    const double intervals[][4] = {{0.2, 1.3, 0.5, 3.0}, {-1.0, 2.0, -0.5, 7.5}, {1.0, 4.0, 2.0, 2.5}};
    for (const auto& iv : intervals) {
        const double a = iv[0], b = iv[1], a2 = iv[2], b2 = iv[3];
        const flow::Stretch s(a, b, a2, b2, params), s0(a, b, 0, b2 - a2, params);
        const flow::StretchStar r(a, b, a2, b2, params), r0(a, b, 0, b2 - a2, params);
        for (int i = 0; i <= 20; ++i) {
            const double y = a + (b - a) * i / 20.0;
            worst_shift = std::max(worst_shift, std::fabs(s(y) - a2 - s0(y)));
            worst_shift = std::max(worst_shift, std::fabs(r(y) - a2 - r0(y)));
            for (double c : {-0.75, 0.5, 3.0}) {
                const flow::Stretch sc(a + c, b + c, a2, b2, params);
                const flow::StretchStar rc(a + c, b + c, a2, b2, params);
                worst_shift = std::max(worst_shift, std::fabs(sc(y + c) - s(y)));
                worst_shift = std::max(worst_shift, std::fabs(rc(y + c) - r(y)));
            }
        }
    }
    const bool ok = nonzero_start == 0 && wrong_pinch == 0 && worst_seam <= seam_tol && worst_shift <= stretch_tol;
    return {7, "flow", ok,
            "L_0 nonzero " + std::to_string(nonzero_start) + ", wrong L_1 " + std::to_string(wrong_pinch) +
                ", seam " + fmt(worst_seam) + ", stretch shift " + fmt(worst_shift)};
}

Criterion chabauty_limits(std::uint64_t)
{
    std::ostringstream detail;
    bool ok = true;
    for (auto family : {chabauty::LimitFamily::RotationsToCircle, chabauty::LimitFamily::TranslationsToAxis,
                        chabauty::LimitFamily::DihedralToHalfTurn}) {
        chabauty::LimitSchedule schedule;
        schedule.family = family;
        const chabauty::LimitReport r = chabauty::limit_experiment(schedule);
        ok = ok && r.verdict;
        detail << (detail.tellp() ? ", " : "") << chabauty::to_string(family) << ' '
               << fmt(r.steps.front().distance) << "->" << fmt(r.steps.back().distance);
    }
    return {8, "chabauty convergence", ok, detail.str()};
}

Criterion lens_table(std::uint64_t)
{
    const lens::LensResult modular = lens::lens_from_orders(lens::ConeData::parse("2,3,inf"));
    bool ok = modular.p == 1 && modular.q == 1 && modular.space.is_sphere();
    int inconsistent = 0, asymmetric = 0, identity = 0;
    for (int n = 2; n <= 10; ++n)
        for (int k = n + 1; k <= 10; ++k) {
            const lens::Meridians m = lens::meridian_arithmetic(n, k);
            const lens::LensResult r = lens::lens_from_orders({{n, k, std::nullopt}});
            if (!lens::lens_equiv(lens::LensSpace(m.p, m.q), r.space)) ++inconsistent;
            const lens::LensSpace swapped(static_cast<long long>(n) * k - n - k, k - 1);
            if (!lens::lens_equiv(r.space, swapped)) ++asymmetric;
            if (!(lens::lens_equiv(lens::lens_from_orders({{k, n, std::nullopt}}).space, r.space))) ++asymmetric;
        }
    for (long long n = 2; n <= 50; ++n)
        for (long long k = 2; k <= 50; ++k)
            if ((n - 1) * (k - 1) != (n * k - k - n) + 1) ++identity;
    ok = ok && inconsistent == 0 && asymmetric == 0 && identity == 0;
    return {9, "lens table", ok,
            modular.summary() + ", inconsistent " + std::to_string(inconsistent) + ", asymmetric " +
                std::to_string(asymmetric) + ", identity failures " + std::to_string(identity)};
}

Criterion neck_distortion_bounds(std::uint64_t seed)
{
    constexpr double cap = 2.0;
    const double threshold = hex::small_neck_threshold(cap);
    const double bound = hex::neck_distortion_bound(cap);
    std::mt19937_64 rng(seed + 9);
    std::uniform_real_distribution<double> altered(1e-3, cap);
    std::uniform_real_distribution<double> log_other(std::log(1e-3), std::log(12.0));
    std::uniform_int_distribution<int> which(0, 2);

    int pairs = 0, checked = 0, violations = 0, attempts = 0;
    double worst = 1;
    while (pairs < random_samples) {
        if (++attempts > 100 * random_samples) break;
        const int i = which(rng);
        std::array<double, 3> f{}, g{};
        for (int k = 0; k < 3; ++k) f[k] = std::exp(log_other(rng));
        f[i] = altered(rng);
        g = f;
        g[i] = altered(rng);
        const hex::RAHexagon before(f[0], f[1], f[2]), after(g[0], g[1], g[2]);
        bool any = false;
        for (const hex::Neck& n : hex::all_necks(before)) {
            if (n.id == hex::NeckId{hex::NeckKind::Side, {hex::SideKind::Free, i}}) continue;
            if (!(n.length < threshold)) continue;
            any = true;
            ++checked;
            try {
                const hex::NeckDistortion d = hex::neck_distortion(before, after, n.id, cap);
                worst = std::max({worst, d.length_ratio, 1 / d.length_ratio, d.foot_shift});
            } catch (const GeometryError&) {
                ++violations;
            }
        }
        if (any) ++pairs;
    }
    const bool ok = pairs == random_samples && violations == 0;
    return {10, "neck distortion bounds", ok,
            std::to_string(pairs) + " pairs, " + std::to_string(checked) + " necks, worst " + fmt(worst) +
                " vs M " + fmt(bound) + ", violations " + std::to_string(violations)};
}

Criterion hexagon_map_checks(std::uint64_t)
{
    const hex::RAHexagon source(0.5, 12, 12);
    const hex::PiecewiseMap identity = hex::hexagon_map(source, source);
    const double id_dist = identity.distortion();

    const hex::PiecewiseMap map = hex::hexagon_map(source, hex::RAHexagon(1.5, 12, 12));
    int radius_mismatches = 0;
    for (const auto& block : map.collar_blocks()) {
        if (block.rule != hex::CollarRule::DeterminedSide) continue;
        const auto& s = map.source().regions.at(block.source);
        const auto& t = map.target().regions.at(block.target);
        if (s.radius_plus != t.radius_plus || s.radius_minus != t.radius_minus) ++radius_mismatches;
    }
    const double k0 = map.complement_distortion();
    const double k1 = hex::hexagon_map(source, hex::RAHexagon(1.5 + 1e-3, 12, 12)).complement_distortion();
    const bool stable = std::isfinite(k0) && std::isfinite(k1) && std::fabs(k1 / k0 - 1) <= complement_stability;
    const bool ok = std::fabs(id_dist - 1) <= identity_distortion_tol && radius_mismatches == 0 && stable;
    return {11, "hexagon map", ok,
            "identity " + fmt(id_dist) + ", radius mismatches " + std::to_string(radius_mismatches) +
                ", complement " + fmt(k0) + " vs " + fmt(k1)};
}

using Runner = std::function<Criterion(std::uint64_t)>;

const std::vector<Runner>& runners()
{
    static const std::vector<Runner> all = {hexagon_identities, neck_equations,        collar_sandwich,
                                            truncation_algebra, grafted_bounds,        pinch_solver,
                                            flow_checks,        chabauty_limits,       lens_table,
                                            neck_distortion_bounds, hexagon_map_checks};
    return all;
}

} // namespace

bool Report::all_passed() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.passed; });
}

Criterion run_criterion(int id, std::uint64_t seed)
{
    if (id < 1 || id > criterion_count) throw ConfigError("criterion id must lie in 1.." + std::to_string(criterion_count));
    try {
        return runners()[id - 1](seed);
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
}

Report run_all(std::uint64_t seed)
{
    Report r;
    r.seed = seed;
    for (int id = 1; id <= criterion_count; ++id) r.criteria.push_back(run_criterion(id, seed));
    return r;
}

std::string format_table(const Report& report)
{
    std::ostringstream out;
    for (const auto& c : report.criteria) {
        char head[64];
        std::snprintf(head, sizeof head, "%-4s %2d  %-26s ", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str());
        out << head << c.detail << '\n';
    }
    out << (report.all_passed() ? "all criteria passed" : "some criteria failed") << '\n';
    return out.str();
}

} // namespace hypgraft::acceptance
