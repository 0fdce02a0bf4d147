#pragma once

#include "smis/metrics.hpp"
#include "smis/networks.hpp"
#include "smis/objectives.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace smis {

// Two-timescale Adam settings shared by every variant.
struct OptimizerSettings {
    double lr_g = 1e-4;
    double lr_d = 4e-4;
    double beta1 = 0.0;
    double beta2 = 0.9;
};

// Everything a run needs: architecture, losses, optimization, data, outputs.
// Parsed from a JSON file with optional "key.path=value" overrides; every
// field has a default, so `{}` is a valid (if slow) config.
struct RunConfig {
    VariantConfig variant;
    LossWeights weights;
    OptimizerSettings optim;

    int64_t epochs = 100;
    int64_t decay_start = 60;  // lr constant before this epoch, then linear to 0
    int64_t batch_size = 16;
    uint64_t seed = 1;

    std::string dataset;  // dataset manifest path
    std::string out_dir = "runs/out";

    int64_t checkpoint_every = 10;  // epochs between checkpoints (also at end)
    int64_t sample_every = 0;       // steps between sample grids; 0 disables
    int64_t log_every = 1;          // steps between log lines

    MetricsConfig metrics;
    uint64_t extractor_seed = 2026;  // frozen feature extractor for eval

    void validate() const;  // throws ConfigError
};

// Learning rate for `epoch` (0-based) under the linear-decay schedule:
// constant `base` before decay_start, then linear to zero at `epochs`.
double lr_at(double base, int64_t epoch, int64_t epochs, int64_t decay_start);

// Parse a JSON document. Variant fields start from the capacity-balanced
// defaults of variant.kind, so a config may name the kind and override only
// what differs. Unknown keys are configuration errors.
RunConfig run_config_from_json(const std::string& json_text);

// Load `path`, apply "dotted.key=value" overrides, validate.
RunConfig load_run_config(const std::string& path,
                          const std::vector<std::string>& overrides = {});

// Resolved config as canonical JSON (stable key order; hash input).
std::string to_json(const RunConfig& cfg);

// FNV-1a hash of the canonical JSON, echoed in reports and checkpoints.
uint64_t config_hash(const RunConfig& cfg);

}  // namespace smis
