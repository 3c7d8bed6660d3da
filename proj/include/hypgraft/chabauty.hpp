#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypgraft/psl2.hpp"

namespace hypgraft::chabauty {

using psl2::ElementarySubgroup;
using psl2::Isometry;

struct SampleOptions {
    double step = 1e-3;                 // parameter spacing for continuous groups
    std::size_t max_elements = 1000000; // BudgetError above this
};

// Elements of a subgroup moving i by at most `radius`.
struct GroupSample {
    double radius = 0;
    std::vector<Isometry> elements;
};

GroupSample sample_subgroup(const ElementarySubgroup& h, double radius, const SampleOptions& options = {});

// Words in the generators and their inverses up to `max_word_length`.
// Intermediate words are kept while they move i by at most radius + slack.
GroupSample sample_generated(const std::vector<Isometry>& generators, double radius, int max_word_length,
                             double slack, const SampleOptions& options = {});

// Drop elements within `tol` of an earlier one.
std::vector<Isometry> deduplicate(std::vector<Isometry> elements, double tol = 1e-9);

// Distance from g to the nearest element of the sample.
double nearest_distance(const GroupSample& sample, const Isometry& g);

// Symmetric Hausdorff distance under the PSL matrix metric.
double chabauty_distance(const GroupSample& a, const GroupSample& b);

enum class LimitFamily {
    RotationsToCircle,   // k(i, 2pi/n) -> K(i)
    TranslationsToAxis,  // a(axis, 1/n) -> A(axis)
    DihedralToHalfTurn,  // a'(axis, n/5, p_n) with p_n -> p  ->  k(p, 2pi/2)
    RotationsToTrivial   // k(p_n, 2pi/n) with p_n escaping fast -> 1
};

std::string to_string(LimitFamily family);
LimitFamily parse_family(const std::string& name);

struct LimitSchedule {
    LimitFamily family = LimitFamily::RotationsToCircle;
    int steps = 10;
    int n_first = 25;
    int n_last = 200;
    double radius = 3;
    double threshold = 0.05;
};

// Geometric progression of integers from n_first to n_last.
std::vector<int> schedule_orders(const LimitSchedule& schedule);

ElementarySubgroup family_member(LimitFamily family, int n);
ElementarySubgroup family_limit(LimitFamily family);

struct LimitStep {
    int n = 0;
    double distance = 0;
    std::size_t sample_size = 0;
};

struct LimitReport {
    LimitSchedule schedule;
    ElementarySubgroup limit;
    std::vector<LimitStep> steps;
    bool tail_ok = false;      // strictly decreasing (non-increasing to 0 for the trivial limit)
    bool below_threshold = false;
    bool verdict = false;
};

LimitReport limit_experiment(const LimitSchedule& schedule, const SampleOptions& options = {});

} // namespace hypgraft::chabauty
