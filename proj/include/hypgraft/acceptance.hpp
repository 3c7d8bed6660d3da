#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypgraft::acceptance {

inline constexpr std::uint64_t default_seed = 20241019;

struct Criterion {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::uint64_t seed = default_seed;
    std::vector<Criterion> criteria;

    bool all_passed() const;
};

inline constexpr int criterion_count = 11;

Criterion run_criterion(int id, std::uint64_t seed = default_seed);
Report run_all(std::uint64_t seed = default_seed);

// One "PASS"/"FAIL" line per criterion.
std::string format_table(const Report& report);

} // namespace hypgraft::acceptance
