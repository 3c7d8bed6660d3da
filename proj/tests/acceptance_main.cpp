#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "hypgraft/acceptance.hpp"

int main()
{
    std::uint64_t seed = hypgraft::acceptance::default_seed;
    if (const char* env = std::getenv("HYPGRAFT_SEED")) seed = std::strtoull(env, nullptr, 10);
    const auto report = hypgraft::acceptance::run_all(seed);
    std::cout << hypgraft::acceptance::format_table(report);
    return report.all_passed() ? 0 : 1;
}
