#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wca/bitmatrix.hpp"
#include "wca/hall.hpp"

namespace wca {

// Frame-by-frame assignment simulation over independent code pools. Each
// pool owns its own matrix and its own code range (global code numbers are
// offset per pool so no two pools ever report the same code). Runs are
// replayable: the record stream depends only on the config, never on timing
// or processing order.

enum class PoolKind { banded, augmented, custom };

struct PoolSpec {
    std::string id;
    PoolKind kind = PoolKind::banded;
    int n = 0;
    int k = 0;
    std::string file;     ///< custom only; resolved against the config file's directory
    int min_request = 0;  ///< smallest per-frame request size
    int max_request = -1; ///< largest per-frame request size; -1 means min(n, k)
};

struct PoolConfig {
    std::uint64_t seed = 0;
    int frames = 0;
    std::vector<PoolSpec> pools;
};

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Config format: top-level "seed = <u64>" and "frames = <int>" lines, then
/// one "[pool <id>]" section per pool with "kind = banded|augmented|custom",
/// "k", "n" (or "file" for custom), and optional "min_request" /
/// "max_request". "#" starts a comment. Errors name the pool and field.
PoolConfig parse_pool_config(std::istream& in, const std::string& base_dir);
PoolConfig load_pool_config(const std::string& path);

struct PoolInfo {
    std::string id;
    PoolKind kind = PoolKind::banded;
    int n = 0;
    int k = 0;
    int code_base = 0;  ///< global code = code_base + local code
    BinaryMatrix matrix;
};

struct PoolFrameResult {
    std::string pool_id;
    std::vector<int> request;              ///< sorted user numbers
    std::optional<CodeAssignment> grant;   ///< local code numbers
    bool used_fast_path = false;
    int relocations = 0;
    double wall_us = 0.0;  ///< diagnostic only; never serialized into records
};

struct FrameResult {
    int frame = 0;  ///< 1-based
    std::vector<PoolFrameResult> pools;
};

struct SimulationSummary {
    int frames = 0;
    std::int64_t requests = 0;
    std::int64_t granted = 0;
    std::int64_t failures = 0;
    std::int64_t total_relocations = 0;
    int max_relocations = 0;
    double mean_wall_us = 0.0;
    double max_wall_us = 0.0;
};

struct SimulationResult {
    std::vector<PoolInfo> pools;
    std::vector<FrameResult> frames;
    SimulationSummary summary;
};

/// Builds every pool's matrix (custom matrices must pass verification),
/// then draws one request per pool per frame and assigns codes via the fast
/// path or matching. Identical configs produce identical results: request
/// streams are derived per (pool, frame) from the master seed.
SimulationResult run_simulation(const PoolConfig& config);

/// Canonical record stream: pool headers, one line per (frame, pool), and a
/// summary line. Integers only; runs with the same config serialize to the
/// same bytes.
std::string serialize_records(const SimulationResult& result);

struct PoolLoad {
    std::string id;
    std::vector<int> code_counts;  ///< per user: how many codes the user monitors
    int l_max = 0;
    std::int64_t n_times_l_max = 0;
    std::int64_t lower_bound = 0;  ///< k(n-k+1)
    bool bound_satisfied = false;
};

struct MonitorReport {
    std::vector<PoolLoad> pools;

    std::string to_lines() const;
};

/// Per-user monitored-code counts for every pool of a finished simulation,
/// checked against the counting bound n*l_max >= k(n-k+1).
MonitorReport monitor_load(const SimulationResult& result);

}  // namespace wca
