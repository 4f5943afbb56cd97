// wca: build, verify, exploit and simulate Walsh code assignment matrices.
//
// Subcommands generate | verify | assign | bounds | simulate; results go to
// stdout, diagnostics to stderr. Exit codes: 0 success (property holds /
// assignment found / no simulation failure), 1 property-level negative
// result, 2 usage or input errors. All combinatorial work lives in the
// library; this file only parses arguments and formats results.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wca/banded_assign.hpp"
#include "wca/bitmatrix.hpp"
#include "wca/bounds.hpp"
#include "wca/hall.hpp"
#include "wca/io.hpp"
#include "wca/pool_sim.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_user_list(const std::string& csv) {
    std::vector<int> users;
    std::istringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            users.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("users must be a comma-separated list of integers");
        }
    }
    if (users.empty()) throw std::invalid_argument("users must be a comma-separated list of integers");
    return users;
}

void print_witness(const wca::HallWitness& witness) {
    std::cout << "witness rows:";
    for (int r : witness.rows) std::cout << ' ' << r;
    std::cout << "\nwitness cols:";
    for (int c : witness.cols) std::cout << ' ' << c;
    std::cout << "\n(" << witness.rows.size() << " rows span " << witness.cols.size()
              << " non-null columns)\n";
}

int run_generate(const std::string& kind, int k, int n, const std::string& out_path,
                 bool structured) {
    const wca::BinaryMatrix m =
        kind == "banded" ? wca::build_l_banded(k, n) : wca::build_augmented_l_banded(k, n);
    wca::io::save_wam(out_path, m);
    const wca::OptimalityReport report = wca::analyze(m);
    if (structured) {
        std::cout << "N=" << report.ones << " l_max=" << report.l_max
                  << " lower_bound=" << report.lower_bound << '\n';
    } else {
        std::cout << "wrote " << out_path << " (" << n << " x " << k << ")\n"
                  << "N: " << report.ones << '\n'
                  << "l_max: " << report.l_max << '\n'
                  << "lower_bound: " << report.lower_bound << '\n';
    }
    return kExitHolds;
}

int run_verify(const std::string& in_path, const std::string& method, bool structured) {
    const wca::BinaryMatrix m = wca::io::load_wam(in_path);
    wca::VerifyMethod chosen;
    if (method == "exhaustive") {
        chosen = wca::VerifyMethod::exhaustive;
    } else if (method == "bruteforce") {
        chosen = wca::VerifyMethod::bruteforce;
    } else {
        const auto recommended = wca::recommended_method(m.rows(), m.cols());
        if (!recommended) {
            std::cerr << "error: matrix is out of reach for both checkers (exhaustive needs"
                         " k <= 20, bruteforce needs C(n,k) <= 10^6)\n";
            return kExitUsage;
        }
        chosen = *recommended;
    }
    const wca::VerificationReport report = chosen == wca::VerifyMethod::exhaustive
                                               ? wca::verify_exhaustive(m)
                                               : wca::verify_bruteforce(m);
    if (structured) {
        std::cout << report.to_record() << '\n';
    } else {
        const char* method_name =
            report.method == wca::VerifyMethod::exhaustive ? "exhaustive" : "bruteforce";
        const char* cases_name = report.method == wca::VerifyMethod::exhaustive
                                     ? "column subsets"
                                     : "row subsets";
        if (report.holds) {
            std::cout << "assignment property holds (" << method_name << ", "
                      << report.cases_checked << ' ' << cases_name << " checked)\n";
        } else {
            std::cout << "assignment property FAILS (" << method_name << ")\n";
            print_witness(*report.witness);
        }
    }
    return report.holds ? kExitHolds : kExitNegative;
}

int run_assign(const std::string& in_path, const std::string& users_csv, bool trace,
               bool structured) {
    const wca::BinaryMatrix m = wca::io::load_wam(in_path);
    const std::vector<int> users = parse_user_list(users_csv);
    const wca::DispatchedAssignment dispatched = wca::assign_with_fallback(m, users);
    if (dispatched.result.ok()) {
        std::cout << dispatched.result.assignment->to_lines();
        if (trace) {
            if (dispatched.used_fast_path)
                std::cout << wca::format_trace(dispatched.trace);
            else
                std::cerr << "note: matching path, no relocation trace\n";
        }
        return kExitHolds;
    }
    if (structured) {
        wca::VerificationReport report;
        report.holds = false;
        report.witness = dispatched.result.witness;
        std::cout << report.to_record() << '\n';
    } else {
        std::cout << "no assignment exists for the requested users\n";
        print_witness(*dispatched.result.witness);
    }
    return kExitNegative;
}

int run_bounds(const std::string& in_path, bool structured) {
    const wca::BinaryMatrix m = wca::io::load_wam(in_path);
    const wca::OptimalityReport report = wca::analyze(m);
    const wca::NecessityCheck necessity = wca::check_necessity(m);
    if (structured) {
        std::cout << report.to_record() << '\n';
    } else {
        const auto [num, den] = report.ratio_fraction();
        std::cout << "n: " << report.n << '\n'
                  << "k: " << report.k << '\n'
                  << "N: " << report.ones << '\n'
                  << "lower_bound: " << report.lower_bound << '\n'
                  << "l_max: " << report.l_max << '\n'
                  << "per_row_bound: " << report.per_row_bound << '\n'
                  << "optimal: " << (report.is_optimal ? "true" : "false") << '\n';
        std::cout << "ratio: " << num;
        if (den != 1) std::cout << '/' << den;
        std::cout << '\n';
    }
    std::cout << "columns with >= k zeros:";
    if (necessity.columns.empty()) {
        std::cout << " none\n";
    } else {
        for (int c : necessity.columns) std::cout << ' ' << c;
        std::cout << "  (assignment property cannot hold)\n";
    }
    return kExitHolds;
}

int run_simulate(const std::string& config_path, bool seed_given, std::uint64_t seed_override,
                 bool structured) {
    wca::PoolConfig config = wca::load_pool_config(config_path);
    if (seed_given) config.seed = seed_override;
    const wca::SimulationResult result = wca::run_simulation(config);
    std::cout << wca::serialize_records(result);
    if (!structured) {
        std::cout << wca::monitor_load(result).to_lines();
        std::cerr << "timing: mean " << result.summary.mean_wall_us << " us, max "
                  << result.summary.max_wall_us << " us per request\n";
    }
    return result.summary.failures == 0 ? kExitHolds : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh code assignment matrices: construction, verification, assignment"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    auto* generate = app.add_subcommand("generate", "Construct a matrix and write it to a file");
    std::string gen_kind;
    int gen_k = 0, gen_n = 0;
    std::string gen_out;
    generate->add_option("kind", gen_kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"banded", "augmented"}));
    generate->add_option("k", gen_k, "Number of codes")->required();
    generate->add_option("n", gen_n, "Number of users")->required();
    generate->add_option("out", gen_out, "Output .wam path")->required();

    auto* verify = app.add_subcommand("verify", "Check the assignment property of a matrix file");
    std::string verify_in, verify_method = "auto";
    verify->add_option("in", verify_in, "Input .wam path")->required();
    verify->add_option("--method", verify_method, "Checker")
        ->check(CLI::IsMember({"auto", "exhaustive", "bruteforce"}))
        ->capture_default_str();

    auto* assign = app.add_subcommand("assign", "Assign one code to each requested user");
    std::string assign_in, assign_users;
    bool assign_trace = false;
    assign->add_option("in", assign_in, "Input .wam path")->required();
    assign->add_option("users", assign_users, "Comma-separated 1-based user numbers")->required();
    assign->add_flag("--trace", assign_trace, "Print row relocations (fast path)");

    auto* bounds = app.add_subcommand("bounds", "Report counting bounds and optimality");
    std::string bounds_in;
    bounds->add_option("in", bounds_in, "Input .wam path")->required();

    auto* simulate = app.add_subcommand("simulate", "Run a frame-by-frame multi-pool simulation");
    std::string sim_config;
    std::uint64_t sim_seed = 0;
    simulate->add_option("config", sim_config, "Pool config path")->required();
    auto* seed_opt = simulate->add_option("--seed", sim_seed, "Override the config seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const bool structured = format == "structured";
    try {
        if (*generate) return run_generate(gen_kind, gen_k, gen_n, gen_out, structured);
        if (*verify) return run_verify(verify_in, verify_method, structured);
        if (*assign) return run_assign(assign_in, assign_users, assign_trace, structured);
        if (*bounds) return run_bounds(bounds_in, structured);
        if (*simulate) return run_simulate(sim_config, !seed_opt->empty(), sim_seed, structured);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
