#pragma once

#include "smis/networks.hpp"

#include <map>
#include <optional>
#include <vector>

namespace smis {

// Frozen, seeded stand-in for a pretrained perceptual network: a small conv
// pyramid whose weights are drawn once from the seed and never trained. All
// models under comparison are embedded with the same extractor, so relative
// comparisons (the diversity and FID orderings) remain meaningful.
//
// `tiny_receptive_field` switches to a 1x1-convolution variant whose feature
// pixels each depend on exactly one input pixel; the masked-distance tests
// use it to check locality and partition identities exactly.
class FeatureExtractor : public Module {
public:
    explicit FeatureExtractor(uint64_t seed, bool tiny_receptive_field = false,
                              DType dtype = DType::f32);

    // Feature pyramid for images [N,3,H,W]. The weights are frozen but the
    // graph is differentiable, so perceptual losses can backprop through to
    // the image.
    std::vector<Tensor> features(const Tensor& image);

    int64_t layer_count() const { return static_cast<int64_t>(convs_.size()); }
    bool tiny_receptive_field() const { return tiny_; }
    uint64_t seed() const { return seed_; }

private:
    std::vector<std::unique_ptr<GroupedConv2d>> convs_;
    bool tiny_;
    uint64_t seed_;
};

// Settings of the diversity protocols: per class, n decodes with only Z_c
// resampled and m distinct pairs among them.
struct MetricsConfig {
    int64_t samples_per_class = 100;  // n
    int64_t pairs_per_class = 19;     // m
    uint64_t seed = 0;
    int64_t batch = 8;        // decode batching hint for callers
    int64_t fid_samples = 200;  // real/fake sample budget for FID

    void validate() const;  // throws ConfigError (needs m <= n*(n-1)/2, ...)
};

// Per-class diversity pair: L_c over the class region, L_{!=c} over its
// complement.
struct ClassDiversity {
    double csd = 0.0;
    double ocd = 0.0;
    int64_t area = 0;  // class pixels in the evaluation mask
};

struct MetricsReport {
    double fid = 0.0;
    double mcsd = 0.0;
    double mocd = 0.0;
    double overall_lpips = 0.0;
    std::map<int64_t, ClassDiversity> per_class;
};

// Perceptual distance: per layer, unit-normalize the feature channels at
// every pixel, average the squared differences spatially, then sum the
// layers with unit weights. Inputs are single images [1,3,H,W] of equal
// shape.
double lpips_distance(const Tensor& a, const Tensor& b, FeatureExtractor& ex);

// lpips_distance with the spatial average restricted to `region`
// ([1,1,H,W], entries exactly 0 or 1). The region is nearest-downsampled to
// each feature resolution; layers where it vanishes contribute nothing. An
// empty region at full resolution returns nullopt ("skip me").
std::optional<double> masked_lpips(const Tensor& a, const Tensor& b, const Tensor& region,
                                   FeatureExtractor& ex);

// Class-diversity protocol. For every class present in `mask` ([1,1,H,W]
// integer ids): hold a base style code fixed, resample block Z_c for each of
// cfg.samples_per_class decodes, then average masked distances over
// cfg.pairs_per_class distinct pairs — over the class region (L_c) and over
// its complement (L_{!=c}). Fills mcsd / mocd / per_class of the report;
// fid and overall_lpips are left zero. Deterministic for a fixed rng state.
// Style codes are drawn in the mask's dtype, which must match the decoder's.
MetricsReport mcsd_mocd(DecoderBase& decoder, const VariantConfig& config, const Tensor& mask,
                        const MetricsConfig& cfg, FeatureExtractor& ex, Rng& rng);

// Global diversity: per mask, decode cfg.samples_per_class images with the
// full style code resampled each time and average full-image distances over
// cfg.pairs_per_class distinct pairs; returns the mean over masks.
double overall_diversity(DecoderBase& decoder, const VariantConfig& config,
                         const std::vector<Tensor>& masks, const MetricsConfig& cfg,
                         FeatureExtractor& ex, Rng& rng);

// FID embedding: global average of every feature map, concatenated over
// layers. [N,3,H,W] -> [N, D] with D the sum of layer channel counts.
Tensor fid_features(const Tensor& images, FeatureExtractor& ex);

// Frechet distance^2 between Gaussians fitted (mean + unbiased covariance)
// to two [N, D] feature sets. Needs N >= 2 per side; warns on stderr when
// D exceeds either sample count.
double fid(const Tensor& real_feats, const Tensor& fake_feats);

// Closed-form Frechet distance^2 from explicit moments (row-major d x d
// covariances): ||mu1-mu2||^2 + Tr(S1 + S2 - 2*(S1*S2)^{1/2}), the matrix
// square root taken via symmetric eigendecomposition of S1^{1/2} S2 S1^{1/2}
// with eigenvalues clamped at zero. Exposed for the oracle tests.
double fid_from_moments(const std::vector<double>& mu1, const std::vector<double>& cov1,
                        const std::vector<double>& mu2, const std::vector<double>& cov2,
                        int64_t dim);

}  // namespace smis
