#pragma once

#include "smis/checkpoint.hpp"
#include "smis/config.hpp"
#include "smis/toydata.hpp"

#include <memory>
#include <string>

namespace smis {

// Trainer position, fully serialized into checkpoints together with the
// optimizer moments and the noise RNG state, so a resumed run reproduces the
// uninterrupted one.
struct TrainState {
    int64_t epoch = 0;  // next epoch to run
    int64_t step = 0;   // completed D/G step pairs
};

// Alternating-step GAN trainer: per batch one discriminator step, then one
// generator step with the discriminator frozen, under the two-timescale
// learning rates. Single-threaded (BLAS pinned to one thread) so identical
// configs produce bit-identical checkpoints.
class Trainer {
public:
    explicit Trainer(const RunConfig& cfg);

    // Restore a checkpoint written by save(); the stored architecture must
    // match this run's variant config. Training continues at the stored epoch.
    void resume(const std::string& checkpoint_path);

    // Run epochs [state().epoch, cfg.epochs), writing the resolved config,
    // one JSON log line per step, periodic checkpoints, and sample grids
    // under cfg.out_dir. A non-finite loss aborts with a diagnostic dump.
    void train();

    void save(const std::string& path) const;

    Networks& networks() { return nets_; }
    const TrainState& state() const { return state_; }
    const RunConfig& config() const { return cfg_; }

private:
    void train_epoch(int64_t epoch, const Dataset& data, std::ostream& log);
    void write_samples(const Scene& scene);
    void dump_diagnostic(const LossReport& current) const;

    RunConfig cfg_;
    Networks nets_;
    std::unique_ptr<Adam> opt_g_, opt_d_;
    Rng noise_rng_;
    FeatureExtractor extractor_;
    TrainState state_;
    LossReport last_report_;
};

}  // namespace smis
