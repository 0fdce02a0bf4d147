#pragma once

#include "smis/config.hpp"
#include "smis/networks.hpp"
#include "smis/toydata.hpp"

#include <string>
#include <vector>

namespace smis {

// ------------------------------------------------------------ compositing --

// Horizontal strip of equally sized [1,3,H,W] images -> [1,3,H,k*W].
Tensor image_row(const std::vector<Tensor>& images);

// Vertical stack of equally wide rows -> [1,3,sum(H),W].
Tensor image_column(const std::vector<Tensor>& rows);

// ------------------------------------------------------- checkpoint loading --

// Networks rebuilt from the config stored inside a checkpoint, weights
// loaded, all nets in eval mode. Checkpoints are self-describing, so no
// external config is needed.
struct LoadedModel {
    RunConfig config;
    Networks nets;
};
LoadedModel load_model(const std::string& checkpoint_path);

// -------------------------------------------------------------- evaluation --

struct EvalReport {
    MetricsReport metrics;
    uint64_t config_hash = 0;     // hash of the canonical resolved config
    std::string config_json;      // the resolved config itself
    int64_t fid_samples_used = 0;
};

// Evaluation protocol on a dataset: FID between real images and prior
// samples decoded against the real masks, mCSD/mOCD on the first mask, and
// overall diversity over the first few masks. Deterministic under mc.seed.
EvalReport evaluate_checkpoint(const std::string& checkpoint_path,
                               const std::string& dataset_manifest, const MetricsConfig& mc);

std::string to_json(const EvalReport& report);

// ------------------------------------------------------------ latent apps --

// Two-row grid: row 1 holds k decodes that resample only class block Z_c of
// a shared base code; row 2 holds k full-resample decodes for contrast.
// The class must be present in the mask.
Tensor sweep_grid(DecoderBase& decoder, const VariantConfig& cfg, const Tensor& mask,
                  int64_t class_id, int64_t k, Rng& rng);

// Per-class style mixture: block Z_c is taken from the mean-map encoding of
// sources[assignment[c]] (no sampling), decoded against target_mask. Every
// class present in the target mask must be present in its assigned source.
Tensor mix_styles(EncoderBase& encoder, DecoderBase& decoder, const VariantConfig& cfg,
                  const std::vector<Scene>& sources, const std::vector<int64_t>& assignment,
                  const Tensor& target_mask);

// Linear style interpolation Z(t) = (1-t)*Z_a + t*Z_b over `steps` evenly
// spaced t in [0,1], decoded against a's mask. Mean-map encodings by
// default; `sample` draws reparameterized codes from rng instead.
std::vector<Tensor> morph_styles(EncoderBase& encoder, DecoderBase& decoder,
                                 const VariantConfig& cfg, const Scene& a, const Scene& b,
                                 int64_t steps, bool sample, Rng& rng);

// Rectangular mask edit, x/y in pixels from the top-left corner.
struct RegionSpec {
    int64_t x = 0, y = 0, w = 0, h = 0;
};

// Copy of `mask` with the region relabeled to new_class (< class_count).
// The region must lie within bounds; an empty region is a plain copy.
Tensor edit_mask(const Tensor& mask, const RegionSpec& region, int64_t new_class,
                 int64_t class_count);

}  // namespace smis
