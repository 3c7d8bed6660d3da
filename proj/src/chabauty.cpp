#include "hypgraft/chabauty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "hypgraft/errors.hpp"
#include "hypgraft/hyptrig.hpp"

namespace hypgraft::chabauty {

using psl2::Axis;
using psl2::Complex;
using psl2::SubgroupTag;

namespace {

double sort_key(const Isometry& g) { return std::fabs(g.a()); }

// Sample sorted by |a|, which bounds the PSL distance from below.
class SortedSample {
public:
    explicit SortedSample(const std::vector<Isometry>& elements) : elements_(elements)
    {
        std::stable_sort(elements_.begin(), elements_.end(),
                         [](const Isometry& x, const Isometry& y) { return sort_key(x) < sort_key(y); });
        keys_.reserve(elements_.size());
        for (const auto& g : elements_) keys_.push_back(sort_key(g));
    }

    double nearest(const Isometry& g) const
    {
        const double k = sort_key(g);
        double best = std::numeric_limits<double>::infinity();
        const auto mid = std::lower_bound(keys_.begin(), keys_.end(), k) - keys_.begin();
        for (auto i = mid; i < static_cast<std::ptrdiff_t>(keys_.size()) && keys_[i] - k < best; ++i)
            best = std::min(best, psl2::distance(g, elements_[i]));
        for (auto i = mid - 1; i >= 0 && k - keys_[i] < best; --i)
            best = std::min(best, psl2::distance(g, elements_[i]));
        return best;
    }

private:
    std::vector<Isometry> elements_;
    std::vector<double> keys_;
};

class Collector {
public:
    explicit Collector(std::size_t cap) : cap_(cap) {}

    void reserve(std::size_t n)
    {
        if (n > cap_) throw BudgetError("sample would hold " + std::to_string(n) + " elements, above the cap");
        out_.reserve(n);
    }
    void add(const Isometry& g)
    {
        if (out_.size() >= cap_) throw BudgetError("sample exceeds the element cap");
        out_.push_back(g);
    }
    std::vector<Isometry> take() { return std::move(out_); }

private:
    std::size_t cap_;
    std::vector<Isometry> out_;
};

long grid_extent(double reach, double step)
{
    if (!(reach >= 0)) return -1;
    return static_cast<long>(std::floor(reach / step + 1e-9));
}

// Rotations about p by 2 pi j / n moving i by at most radius.
void add_rotations(Collector& out, Complex p, long n, double radius)
{
    const double sd = std::sinh(psl2::hyperbolic_distance({0, 1}, p));
    const double limit = std::sinh(radius / 2);
    for (long j = 0; j < n; ++j) {
        const long jj = std::min(j, n - j);
        if (sd * std::sin(trig::pi * static_cast<double>(jj) / static_cast<double>(n)) <= limit)
            out.add(Isometry::rotation(p, 2 * trig::pi * static_cast<double>(j) / static_cast<double>(n)));
    }
}

// Largest translation along the axis moving i by at most radius.
double translation_reach(const Axis& axis, double radius)
{
    return 2 * std::asinh(std::sinh(radius / 2) / std::cosh(psl2::distance_to_axis(axis)));
}

// Largest distance from the foot at which a half turn moves i by at most radius.
double half_turn_reach(const Axis& axis, double radius)
{
    const double ratio = std::cosh(radius / 2) / std::cosh(psl2::distance_to_axis(axis));
    return ratio >= 1 ? std::acosh(ratio) : -1;
}

double axis_coordinate(const Axis& axis, Complex p)
{
    return std::log(std::abs(psl2::axis_frame(axis).inverse().apply(p)));
}

// Upper triangular elements [[e^{tau/2}, mu], [0, e^{-tau/2}]] conjugated to
// fix xi, for every mu on the grid inside the ball.
void add_borel_row(Collector& out, psl2::BoundaryPoint xi, double tau, double radius, double step)
{
    const double room = std::sinh(radius / 2) * std::sinh(radius / 2) - std::sinh(tau / 2) * std::sinh(tau / 2);
    if (room < 0) return;
    const long m = grid_extent(2 * std::sqrt(room), step);
    const double lam = std::exp(tau / 2);
    const double angle = psl2::is_infinite(xi) ? 0.0 : 2 * std::atan2(1.0, -xi);
    const Isometry rot(std::cos(angle / 2), std::sin(angle / 2), -std::sin(angle / 2), std::cos(angle / 2));
    for (long j = -m; j <= m; ++j)
        out.add(rot * Isometry(lam, static_cast<double>(j) * step, 0, 1 / lam) * rot.inverse());
}

std::size_t borel_row_size(double tau, double radius, double step)
{
    const double room = std::sinh(radius / 2) * std::sinh(radius / 2) - std::sinh(tau / 2) * std::sinh(tau / 2);
    if (room < 0) return 0;
    return static_cast<std::size_t>(2 * grid_extent(2 * std::sqrt(room), step) + 1);
}

} // namespace

GroupSample sample_subgroup(const ElementarySubgroup& h, double radius, const SampleOptions& options)
{
    if (!(radius >= 0) || !std::isfinite(radius)) throw DomainError("sample radius must be finite and non-negative");
    if (!(options.step > 0)) throw ConfigError("sample step must be positive");
    const double step = options.step;
    Collector out(options.max_elements);

    switch (h.tag) {
    case SubgroupTag::Trivial: out.add(Isometry::identity()); break;
    case SubgroupTag::FiniteRotation: add_rotations(out, h.point, h.order, radius); break;
    case SubgroupTag::RotationGroup: {
        const long n = static_cast<long>(std::ceil(2 * trig::pi / step));
        out.reserve(static_cast<std::size_t>(n));
        add_rotations(out, h.point, n, radius);
        break;
    }
    case SubgroupTag::AxisGroup:
    case SubgroupTag::AxisCyclic:
    case SubgroupTag::AxisFull:
    case SubgroupTag::Dihedral: {
        const bool continuous = h.tag == SubgroupTag::AxisGroup || h.tag == SubgroupTag::AxisFull;
        const double spacing = continuous ? step : h.translation;
        const long m = grid_extent(translation_reach(h.axis, radius), spacing);
        std::size_t expected = static_cast<std::size_t>(2 * m + 1);
        const double reach = half_turn_reach(h.axis, radius);
        long lo = 0, hi = -1;
        double base = 0, turn_spacing = step;
        if (h.tag == SubgroupTag::AxisFull && reach >= 0) {
            hi = grid_extent(reach, step);
            lo = -hi;
        } else if (h.tag == SubgroupTag::Dihedral && reach >= 0) {
            base = axis_coordinate(h.axis, h.point);
            turn_spacing = h.translation / 2;
            lo = static_cast<long>(std::ceil((-reach - base) / turn_spacing - 1e-9));
            hi = static_cast<long>(std::floor((reach - base) / turn_spacing + 1e-9));
        }
        if (hi >= lo) expected += static_cast<std::size_t>(hi - lo + 1);
        out.reserve(expected);
        for (long j = -m; j <= m; ++j) out.add(psl2::translation(h.axis, static_cast<double>(j) * spacing));
        for (long k = lo; k <= hi; ++k) {
            const double sigma = base + static_cast<double>(k) * turn_spacing;
            if (std::fabs(sigma) <= reach) out.add(psl2::half_turn(h.axis, sigma));
        }
        break;
    }
    case SubgroupTag::ParabolicGroup: {
        const long m = grid_extent(2 * std::sinh(radius / 2), step);
        out.reserve(static_cast<std::size_t>(2 * m + 1));
        for (long j = -m; j <= m; ++j) out.add(Isometry::parabolic(h.xi, static_cast<double>(j) * step));
        break;
    }
    case SubgroupTag::BorelCyclic:
    case SubgroupTag::Borel: {
        const double spacing = h.tag == SubgroupTag::Borel ? step : h.translation;
        const long m = grid_extent(radius, spacing);
        std::size_t expected = 0;
        for (long n = -m; n <= m; ++n) expected += borel_row_size(static_cast<double>(n) * spacing, radius, step);
        out.reserve(expected);
        for (long n = -m; n <= m; ++n) add_borel_row(out, h.xi, static_cast<double>(n) * spacing, radius, step);
        break;
    }
    }
    return {radius, deduplicate(out.take())};
}

GroupSample sample_generated(const std::vector<Isometry>& generators, double radius, int max_word_length,
                             double slack, const SampleOptions& options)
{
    if (!(radius >= 0) || !(slack >= 0)) throw DomainError("radius and slack must be non-negative");
    if (max_word_length < 0) throw ConfigError("word length cap must be non-negative");
    std::vector<Isometry> letters;
    for (const auto& g : generators) {
        letters.push_back(g);
        letters.push_back(g.inverse());
    }
    std::multimap<double, Isometry> seen{{1.0, Isometry::identity()}};
    auto known = [&](const Isometry& g) {
        const double k = sort_key(g);
        for (auto it = seen.lower_bound(k - 1e-9); it != seen.end() && it->first <= k + 1e-9; ++it)
            if (psl2::distance(it->second, g) <= 1e-9) return true;
        return false;
    };
    std::vector<Isometry> frontier{Isometry::identity()};
    for (int len = 0; len < max_word_length && !frontier.empty(); ++len) {
        std::vector<Isometry> next;
        for (const auto& g : frontier)
            for (const auto& s : letters) {
                const Isometry w = g * s;
                if (psl2::displacement(w) > radius + slack || known(w)) continue;
                if (seen.size() >= options.max_elements) throw BudgetError("word enumeration exceeds the element cap");
                seen.emplace(sort_key(w), w);
                next.push_back(w);
            }
        frontier = std::move(next);
    }
    // Words land on the sphere of radius `radius` only up to rounding.
    const double reach = radius + 1e-12 * (1 + radius);
    std::vector<Isometry> out;
    for (const auto& [key, g] : seen)
        if (psl2::displacement(g) <= reach) out.push_back(g);
    return {radius, out};
}

std::vector<Isometry> deduplicate(std::vector<Isometry> elements, double tol)
{
    std::stable_sort(elements.begin(), elements.end(),
                     [](const Isometry& x, const Isometry& y) { return sort_key(x) < sort_key(y); });
    std::vector<Isometry> kept;
    kept.reserve(elements.size());
    for (const auto& g : elements) {
        const double k = sort_key(g);
        bool duplicate = false;
        for (auto it = kept.rbegin(); it != kept.rend() && k - sort_key(*it) <= tol; ++it)
            if (psl2::distance(*it, g) <= tol) {
                duplicate = true;
                break;
            }
        if (!duplicate) kept.push_back(g);
    }
    return kept;
}

double nearest_distance(const GroupSample& sample, const Isometry& g)
{
    return SortedSample(sample.elements).nearest(g);
}

double chabauty_distance(const GroupSample& a, const GroupSample& b)
{
    if (a.radius != b.radius) throw ConfigError("samples were drawn in balls of different radius");
    if (a.elements.empty() || b.elements.empty()) throw ConfigError("samples must be non-empty");
    const SortedSample sa(a.elements), sb(b.elements);
    double d = 0;
    for (const auto& g : a.elements) d = std::max(d, sb.nearest(g));
    for (const auto& g : b.elements) d = std::max(d, sa.nearest(g));
    return d;
}

// ---------------------------------------------------------------------------

namespace {

const Axis translation_axis{0, std::numeric_limits<double>::infinity()};
const Axis dihedral_axis{-1, 2};
constexpr double dihedral_anchor = 0.2;

} // namespace

std::string to_string(LimitFamily family)
{
    switch (family) {
    case LimitFamily::RotationsToCircle: return "rotations-to-circle";
    case LimitFamily::TranslationsToAxis: return "translations-to-axis";
    case LimitFamily::DihedralToHalfTurn: return "dihedral-to-half-turn";
    case LimitFamily::RotationsToTrivial: return "rotations-to-trivial";
    }
    return "?";
}

LimitFamily parse_family(const std::string& name)
{
    for (auto f : {LimitFamily::RotationsToCircle, LimitFamily::TranslationsToAxis, LimitFamily::DihedralToHalfTurn,
                   LimitFamily::RotationsToTrivial})
        if (to_string(f) == name) return f;
    throw ConfigError("unknown limit family '" + name + "'");
}

std::vector<int> schedule_orders(const LimitSchedule& s)
{
    if (s.steps < 2 || s.n_first < 2 || s.n_last <= s.n_first) throw ConfigError("schedule needs 2 <= n_first < n_last and at least two steps");
    std::vector<int> out;
    const double ratio = static_cast<double>(s.n_last) / s.n_first;
    for (int j = 0; j < s.steps; ++j) {
        const int n = static_cast<int>(std::lround(s.n_first * std::pow(ratio, static_cast<double>(j) / (s.steps - 1))));
        if (!out.empty() && n <= out.back()) throw ConfigError("schedule is too dense to give distinct orders");
        out.push_back(n);
    }
    return out;
}

ElementarySubgroup family_member(LimitFamily family, int n)
{
    switch (family) {
    case LimitFamily::RotationsToCircle: return ElementarySubgroup::finite_rotations({0, 1}, n);
    case LimitFamily::TranslationsToAxis: return ElementarySubgroup::axis_cyclic(translation_axis, 1.0 / n);
    case LimitFamily::DihedralToHalfTurn:
        return ElementarySubgroup::dihedral(dihedral_axis, n / 5.0, psl2::point_on_axis(dihedral_axis, dihedral_anchor + 1.0 / n));
    case LimitFamily::RotationsToTrivial: return ElementarySubgroup::finite_rotations({0, std::exp(n / 10.0)}, n);
    }
    throw ConfigError("unknown limit family");
}

ElementarySubgroup family_limit(LimitFamily family)
{
    switch (family) {
    case LimitFamily::RotationsToCircle: return ElementarySubgroup::rotations({0, 1});
    case LimitFamily::TranslationsToAxis: return ElementarySubgroup::axis_group(translation_axis);
    case LimitFamily::DihedralToHalfTurn:
        return ElementarySubgroup::finite_rotations(psl2::point_on_axis(dihedral_axis, dihedral_anchor), 2);
    case LimitFamily::RotationsToTrivial: return ElementarySubgroup::trivial();
    }
    throw ConfigError("unknown limit family");
}

LimitReport limit_experiment(const LimitSchedule& schedule, const SampleOptions& options)
{
    LimitReport report;
    report.schedule = schedule;
    report.limit = family_limit(schedule.family);
    const GroupSample target = sample_subgroup(report.limit, schedule.radius, options);
    for (int n : schedule_orders(schedule)) {
        const GroupSample s = sample_subgroup(family_member(schedule.family, n), schedule.radius, options);
        report.steps.push_back({n, chabauty_distance(s, target), s.elements.size()});
    }
    const bool trivial = schedule.family == LimitFamily::RotationsToTrivial;
    report.tail_ok = true;
    for (std::size_t i = 1; i < report.steps.size(); ++i) {
        const double prev = report.steps[i - 1].distance, cur = report.steps[i].distance;
        if (trivial ? cur > prev : cur >= prev) report.tail_ok = false;
    }
    const double last = report.steps.back().distance;
    report.below_threshold = trivial ? last == 0 : last < schedule.threshold;
    report.verdict = report.tail_ok && report.below_threshold;
    return report;
}

} // namespace hypgraft::chabauty
