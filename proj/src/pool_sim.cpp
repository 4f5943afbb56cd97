#include "wca/pool_sim.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "wca/banded_assign.hpp"
#include "wca/io.hpp"
#include "wca/prng.hpp"

namespace wca {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_field(const std::string& scope, const std::string& field,
                             const std::string& why) {
    throw ConfigError(scope + ": " + field + " " + why);
}

long long parse_integer(const std::string& scope, const std::string& field,
                        const std::string& value) {
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        return parsed;
    } catch (const std::exception&) {
        fail_field(scope, field, "must be an integer, got \"" + value + "\"");
    }
}

struct RawSection {
    std::string scope;  // "config" or "pool <id>"
    std::map<std::string, std::string> values;
    std::vector<std::string> order;

    void set(const std::string& key, const std::string& value) {
        if (values.count(key)) fail_field(scope, key, "is set twice");
        values[key] = value;
        order.push_back(key);
    }
};

const char* kind_name(PoolKind kind) {
    switch (kind) {
        case PoolKind::banded: return "banded";
        case PoolKind::augmented: return "augmented";
        case PoolKind::custom: return "custom";
    }
    return "?";
}

}  // namespace

PoolConfig parse_pool_config(std::istream& in, const std::string& base_dir) {
    RawSection top{"config", {}, {}};
    std::vector<RawSection> sections;
    RawSection* current = &top;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            std::istringstream header(line.substr(1, line.size() - 2));
            std::string word, id, extra;
            header >> word >> id;
            if (word != "pool" || id.empty() || (header >> extra))
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": section header must be [pool <id>]");
            sections.push_back(RawSection{"pool " + id, {}, {}});
            sections.back().set("id", id);
            current = &sections.back();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        current->set(key, value);
    }

    PoolConfig config;
    for (const auto& key : top.order) {
        const std::string& value = top.values.at(key);
        if (key == "seed") {
            try {
                std::size_t used = 0;
                config.seed = std::stoull(value, &used);
                if (used != value.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                fail_field("config", "seed", "must be an unsigned integer, got \"" + value + "\"");
            }
        } else if (key == "frames") {
            const long long frames = parse_integer("config", "frames", value);
            if (frames < 0) fail_field("config", "frames", "must be >= 0");
            config.frames = static_cast<int>(frames);
        } else {
            fail_field("config", key, "is not a recognized setting");
        }
    }

    for (const RawSection& section : sections) {
        PoolSpec spec;
        spec.id = section.values.at("id");
        for (const auto& other : config.pools)
            if (other.id == spec.id) fail_field(section.scope, "id", "is declared twice");
        for (const auto& key : section.order) {
            const std::string& value = section.values.at(key);
            if (key == "id") continue;
            if (key == "kind") {
                if (value == "banded") spec.kind = PoolKind::banded;
                else if (value == "augmented") spec.kind = PoolKind::augmented;
                else if (value == "custom") spec.kind = PoolKind::custom;
                else fail_field(section.scope, "kind", "must be banded, augmented or custom");
            } else if (key == "k") {
                spec.k = static_cast<int>(parse_integer(section.scope, "k", value));
            } else if (key == "n") {
                spec.n = static_cast<int>(parse_integer(section.scope, "n", value));
            } else if (key == "file") {
                spec.file = value;
            } else if (key == "min_request") {
                spec.min_request = static_cast<int>(parse_integer(section.scope, "min_request", value));
            } else if (key == "max_request") {
                spec.max_request = static_cast<int>(parse_integer(section.scope, "max_request", value));
            } else {
                fail_field(section.scope, key, "is not a recognized setting");
            }
        }
        if (!section.values.count("kind")) fail_field(section.scope, "kind", "is required");
        if (spec.kind == PoolKind::custom) {
            if (spec.file.empty()) fail_field(section.scope, "file", "is required for kind = custom");
            if (section.values.count("k") || section.values.count("n"))
                fail_field(section.scope, "k/n", "come from the file for kind = custom");
            if (!base_dir.empty())
                spec.file = (std::filesystem::path(base_dir) / spec.file).string();
        } else {
            if (!spec.file.empty())
                fail_field(section.scope, "file", "is only valid for kind = custom");
            if (!section.values.count("k")) fail_field(section.scope, "k", "is required");
            if (!section.values.count("n")) fail_field(section.scope, "n", "is required");
        }
        config.pools.push_back(std::move(spec));
    }
    if (config.pools.empty()) throw ConfigError("config: no [pool <id>] sections defined");
    return config;
}

PoolConfig load_pool_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path + " for reading");
    return parse_pool_config(in, std::filesystem::path(path).parent_path().string());
}

namespace {

std::vector<PoolInfo> build_pools(const PoolConfig& config) {
    std::vector<PoolInfo> pools;
    int code_base = 0;
    for (const PoolSpec& spec : config.pools) {
        const std::string scope = "pool " + spec.id;
        std::optional<BinaryMatrix> matrix;
        try {
            switch (spec.kind) {
                case PoolKind::banded:
                    matrix = build_l_banded(spec.k, spec.n);
                    break;
                case PoolKind::augmented:
                    matrix = build_augmented_l_banded(spec.k, spec.n);
                    break;
                case PoolKind::custom:
                    matrix = io::load_wam(spec.file);
                    break;
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(scope + ": " + e.what());
        }

        if (spec.kind == PoolKind::custom) {
            const auto method = recommended_method(matrix->rows(), matrix->cols());
            if (!method)
                throw ConfigError(scope + ": matrix is too large to verify (k > 20 and C(n,k) > 10^6)");
            const VerificationReport report = *method == VerifyMethod::exhaustive
                                                  ? verify_exhaustive(*matrix)
                                                  : verify_bruteforce(*matrix);
            if (!report.holds)
                throw ConfigError(scope + ": matrix fails the assignment property (" +
                                  report.to_record() + ")");
        }

        PoolInfo info{spec.id, spec.kind, matrix->rows(), matrix->cols(), code_base, *matrix};
        const int cap = std::min(info.n, info.k);
        const int min_request = spec.min_request;
        const int max_request = spec.max_request < 0 ? cap : spec.max_request;
        if (min_request < 0) fail_field(scope, "min_request", "must be >= 0");
        if (max_request > cap)
            fail_field(scope, "max_request", "must be <= min(n, k) = " + std::to_string(cap));
        if (min_request > max_request) fail_field(scope, "min_request", "must be <= max_request");
        code_base += info.k;
        pools.push_back(std::move(info));
    }
    return pools;
}

}  // namespace

SimulationResult run_simulation(const PoolConfig& config) {
    SimulationResult result;
    result.pools = build_pools(config);
    result.summary.frames = config.frames;

    // Request bounds are re-derived here so run_simulation can also serve
    // hand-built configs that never went through the parser.
    std::vector<std::pair<int, int>> request_bounds;
    for (std::size_t p = 0; p < config.pools.size(); ++p) {
        const int cap = std::min(result.pools[p].n, result.pools[p].k);
        const int lo = config.pools[p].min_request;
        const int hi = config.pools[p].max_request < 0 ? cap : config.pools[p].max_request;
        request_bounds.emplace_back(lo, hi);
    }

    double wall_total = 0.0;
    for (int frame = 1; frame <= config.frames; ++frame) {
        FrameResult frame_result;
        frame_result.frame = frame;
        for (std::size_t p = 0; p < result.pools.size(); ++p) {
            const PoolInfo& pool = result.pools[p];
            std::mt19937_64 gen(derive_seed(config.seed, static_cast<std::uint64_t>(p),
                                            static_cast<std::uint64_t>(frame)));
            const int size = random_int(gen, request_bounds[p].first, request_bounds[p].second);
            PoolFrameResult pf;
            pf.pool_id = pool.id;
            pf.request = random_subset(gen, pool.n, size);

            const auto t0 = std::chrono::steady_clock::now();
            DispatchedAssignment dispatched = assign_with_fallback(pool.matrix, pf.request);
            const auto t1 = std::chrono::steady_clock::now();
            pf.wall_us = std::chrono::duration<double, std::micro>(t1 - t0).count();
            pf.used_fast_path = dispatched.used_fast_path;
            pf.relocations = dispatched.relocations;
            pf.grant = std::move(dispatched.result.assignment);

            ++result.summary.requests;
            if (pf.grant) {
                ++result.summary.granted;
                result.summary.total_relocations += pf.relocations;
                result.summary.max_relocations =
                    std::max(result.summary.max_relocations, pf.relocations);
            } else {
                ++result.summary.failures;
            }
            wall_total += pf.wall_us;
            result.summary.max_wall_us = std::max(result.summary.max_wall_us, pf.wall_us);
            frame_result.pools.push_back(std::move(pf));
        }
        result.frames.push_back(std::move(frame_result));
    }
    if (result.summary.requests > 0)
        result.summary.mean_wall_us = wall_total / static_cast<double>(result.summary.requests);
    return result;
}

namespace {

void append_request(std::ostringstream& out, const std::vector<int>& request) {
    if (request.empty()) {
        out << '-';
        return;
    }
    for (std::size_t i = 0; i < request.size(); ++i) {
        if (i) out << ',';
        out << request[i];
    }
}

}  // namespace

std::string serialize_records(const SimulationResult& result) {
    std::ostringstream out;
    for (const PoolInfo& pool : result.pools)
        out << "pool " << pool.id << " kind " << kind_name(pool.kind) << " n " << pool.n << " k "
            << pool.k << " codes " << pool.code_base + 1 << ".." << pool.code_base + pool.k << '\n';
    for (const FrameResult& frame : result.frames) {
        for (const PoolFrameResult& pf : frame.pools) {
            out << "frame " << frame.frame << " pool " << pf.pool_id << " request ";
            append_request(out, pf.request);
            out << " grant ";
            if (!pf.grant) {
                out << "FAILED";
            } else if (pf.grant->pairs.empty()) {
                out << '-';
            } else {
                int code_base = 0;
                for (const PoolInfo& pool : result.pools)
                    if (pool.id == pf.pool_id) code_base = pool.code_base;
                for (std::size_t i = 0; i < pf.grant->pairs.size(); ++i) {
                    if (i) out << ',';
                    out << pf.grant->pairs[i].first << "->" << code_base + pf.grant->pairs[i].second;
                }
            }
            out << " moves " << pf.relocations << " path "
                << (!pf.grant ? "failed" : pf.used_fast_path ? "fast" : "matching") << '\n';
        }
    }
    const SimulationSummary& s = result.summary;
    out << "summary frames " << s.frames << " pools " << result.pools.size() << " requests "
        << s.requests << " granted " << s.granted << " failures " << s.failures << " moves "
        << s.total_relocations << " max_moves " << s.max_relocations << '\n';
    return out.str();
}

std::string MonitorReport::to_lines() const {
    std::ostringstream out;
    for (const PoolLoad& pool : pools) {
        for (std::size_t u = 0; u < pool.code_counts.size(); ++u)
            out << "monitor pool " << pool.id << " user " << u + 1 << " codes "
                << pool.code_counts[u] << '\n';
        out << "monitor pool " << pool.id << " l_max " << pool.l_max << " n*l_max "
            << pool.n_times_l_max << " lower_bound " << pool.lower_bound << " bound "
            << (pool.bound_satisfied ? "satisfied" : "VIOLATED") << '\n';
    }
    return out.str();
}

MonitorReport monitor_load(const SimulationResult& result) {
    MonitorReport report;
    for (const PoolInfo& pool : result.pools) {
        const RowWeightProfile profile = row_weight_profile(pool.matrix);
        PoolLoad load;
        load.id = pool.id;
        load.code_counts = profile.row_weights;
        load.l_max = profile.max_row_weight;
        load.n_times_l_max = static_cast<std::int64_t>(pool.n) * profile.max_row_weight;
        load.lower_bound = static_cast<std::int64_t>(pool.k) * (pool.n - pool.k + 1);
        load.bound_satisfied = load.n_times_l_max >= load.lower_bound;
        report.pools.push_back(std::move(load));
    }
    return report;
}

}  // namespace wca
