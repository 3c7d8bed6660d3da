#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypgraft/acceptance.hpp"
#include "hypgraft/chabauty.hpp"
#include "hypgraft/errors.hpp"
#include "hypgraft/lens.hpp"
#include "hypgraft/serialize.hpp"

using namespace hypgraft;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_domain = 2;
constexpr int exit_convergence = 3;
constexpr int exit_usage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

io::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return io::json::parse(in);
    } catch (const io::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, bool required)
{
    if (flag) return *flag;
    if (const char* env = std::getenv("HYPGRAFT_SEED")) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) return value;
        } catch (const std::exception&) {
        }
        throw UsageError("HYPGRAFT_SEED must be a non-negative integer");
    }
    if (required) throw UsageError("a seed is required: pass --seed or set HYPGRAFT_SEED");
    return acceptance::default_seed;
}

void print_json(const io::json& j) { std::cout << j.dump(2) << '\n'; }

std::string show(double x) { return io::csv_number(x); }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hypgraft: hyperbolic orbifold geometry toolkit"};
    app.require_subcommand(1);

    std::string format; // empty: csv for traces, text elsewhere
    auto add_format = [&](CLI::App* sub, std::initializer_list<std::string> choices) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
    };

    auto* hexagon = app.add_subcommand("hexagon", "right-angled hexagons");
    auto* solve = hexagon->add_subcommand("solve", "solve a hexagon from three free sides");
    hexagon->require_subcommand(1);
    std::array<double, 3> sides{};
    solve->add_option("a", sides[0])->required();
    solve->add_option("b", sides[1])->required();
    solve->add_option("c", sides[2])->required();
    add_format(solve, {"text", "json"});

    auto* pants_cmd = app.add_subcommand("pants", "pants decomposition data for a surface");
    std::string pants_input;
    pants_cmd->add_option("--input", pants_input, "surface JSON")->required();
    add_format(pants_cmd, {"text", "json"});

    auto* graft_cmd = app.add_subcommand("graft", "grafting collars and length bounds");
    std::string graft_input;
    graft_cmd->add_option("--input", graft_input, "grafting configuration JSON")->required();
    add_format(graft_cmd, {"text", "json"});

    auto* flow_cmd = app.add_subcommand("flow", "pinching flow");
    auto* trace = flow_cmd->add_subcommand("trace", "trace the subannulus bounds over t in [0,1]");
    flow_cmd->require_subcommand(1);
    double flow_len = 0, flow_sys = 0, flow_eps = 0.1;
    int flow_steps = 11;
    trace->add_option("--l", flow_len, "curve length")->required();
    trace->add_option("--sys", flow_sys, "systole")->required();
    trace->add_option("--eps", flow_eps, "epsilon");
    trace->add_option("--steps", flow_steps, "number of time steps");
    add_format(trace, {"csv", "json"});

    auto* chab = app.add_subcommand("chabauty", "Chabauty limit experiments");
    auto* run = chab->add_subcommand("run", "run a limit experiment");
    chab->require_subcommand(1);
    std::string family;
    chabauty::LimitSchedule schedule;
    std::optional<std::uint64_t> seed_flag;
    run->add_option("family", family, "rotations-to-circle | translations-to-axis | dihedral-to-half-turn | "
                                      "rotations-to-trivial")
        ->required();
    run->add_option("--steps", schedule.steps, "number of schedule steps");
    run->add_option("--n-first", schedule.n_first);
    run->add_option("--n-last", schedule.n_last);
    run->add_option("--radius", schedule.radius, "sampling radius");
    run->add_option("--threshold", schedule.threshold, "final distance threshold");
    run->add_option("--seed", seed_flag, "seed (falls back to HYPGRAFT_SEED)");
    add_format(run, {"text", "json"});

    auto* lens_cmd = app.add_subcommand("lens", "lens space of a sphere with three cone points or cusps");
    std::string orders;
    lens_cmd->add_option("--orders", orders, "e.g. 2,3,inf")->required();
    add_format(lens_cmd, {"text", "json"});

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--seed", seed_flag, "seed (falls back to HYPGRAFT_SEED)");
    add_format(selftest, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }
    if (format.empty()) format = trace->parsed() ? "csv" : "text";

    try {
        if (solve->parsed()) {
            const io::HexagonReport r = io::hexagon_report(sides[0], sides[1], sides[2]);
            if (format == "json") {
                print_json(io::to_json(r));
            } else {
                std::cout << "free:       " << show(r.free_sides[0]) << ' ' << show(r.free_sides[1]) << ' '
                          << show(r.free_sides[2]) << '\n'
                          << "determined: " << show(r.determined_sides[0]) << ' ' << show(r.determined_sides[1])
                          << ' ' << show(r.determined_sides[2]) << '\n';
                for (const auto& n : r.necks) std::cout << "neck " << hex::to_string(n.id) << ' ' << show(n.length) << '\n';
            }
        } else if (pants_cmd->parsed()) {
            const io::PantsReport r = io::pants_report(io::from_json<pants::SurfaceFN>(read_json_file(pants_input)));
            if (format == "json") {
                print_json(io::to_json(r));
            } else {
                for (std::size_t i = 0; i < r.pants.size(); ++i) {
                    std::cout << "pants " << i << " boundary";
                    for (double l : r.pants[i].boundary) std::cout << ' ' << show(l);
                    std::cout << " seams";
                    for (const auto& s : r.pants[i].seams) std::cout << ' ' << (s ? show(*s) : "-");
                    std::cout << '\n';
                }
                for (const auto& c : r.collars)
                    std::cout << "collar " << c.id << " radius " << show(c.collar.radius) << " modulus "
                              << show(c.collar.modulus) << '\n';
                std::cout << "systole " << show(r.systole) << '\n';
            }
        } else if (graft_cmd->parsed()) {
            const io::GraftReport r = io::graft_report(io::from_json<io::GraftConfig>(read_json_file(graft_input)));
            if (format == "json") {
                print_json(io::to_json(r));
            } else {
                for (const auto& e : r.curves) {
                    std::cout << e.id << " L " << show(e.graft_length) << " modulus " << show(e.modulus)
                              << " length in [" << show(e.bounds.lo) << ", " << show(e.bounds.hi) << "]";
                    if (e.bounds.cusp) std::cout << " cusp";
                    if (e.pinched_length) std::cout << " pinched " << show(*e.pinched_length);
                    std::cout << '\n';
                }
            }
        } else if (trace->parsed()) {
            const io::FlowTrace t = io::flow_trace(flow_len, flow_sys, flow_eps, flow_steps);
            if (format == "json")
                print_json(io::to_json(t));
            else
                std::cout << io::to_csv(t);
        } else if (run->parsed()) {
            schedule.family = chabauty::parse_family(family);
            io::ChabautyRun result{resolve_seed(seed_flag, true), chabauty::limit_experiment(schedule)};
            if (format == "json") {
                print_json(io::to_json(result));
            } else {
                std::cout << "limit " << psl2::describe(result.report.limit) << '\n';
                for (const auto& s : result.report.steps)
                    std::cout << "n " << s.n << " distance " << show(s.distance) << " sample " << s.sample_size
                              << '\n';
                std::cout << "verdict " << (result.report.verdict ? "converges" : "inconclusive") << '\n';
            }
        } else if (lens_cmd->parsed()) {
            const lens::LensResult r = lens::lens_from_orders(lens::ConeData::parse(orders));
            if (format == "json") {
                print_json(io::to_json(r));
            } else {
                std::cout << r.summary() << '\n'
                          << "pi_1 order " << r.space.p() << '\n'
                          << r.note << '\n';
            }
        } else if (selftest->parsed()) {
            const acceptance::Report r = acceptance::run_all(resolve_seed(seed_flag, false));
            if (format == "json")
                print_json(io::to_json(r));
            else
                std::cout << acceptance::format_table(r);
            return r.all_passed() ? exit_ok : exit_failed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return exit_convergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_ok;
}
