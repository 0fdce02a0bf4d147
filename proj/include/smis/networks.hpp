#pragma once

#include "smis/blocks.hpp"
#include "smis/toydata.hpp"

#include <memory>
#include <string>
#include <vector>

namespace smis {

// Log-variance maps are clamped to this symmetric range before any use, so
// exp() stays finite and the KL closed form is well conditioned.
inline constexpr double kLogVarClamp = 20.0;

// Per-class style code: one latent block per semantic class, each
// [N, d_z, h_z, w_z]. Concatenating the blocks along channels reconstructs
// the decoder input Z exactly.
struct StyleCode {
    std::vector<Tensor> blocks;

    int64_t class_count() const { return static_cast<int64_t>(blocks.size()); }
    Tensor concat() const { return concat_channels(blocks); }
};

// Split a full latent tensor [N, C*d_z, h, w] into C per-class blocks
// (differentiable slices).
StyleCode split_style(const Tensor& z, int64_t class_count);

// Posterior maps produced by the encoder.
struct GaussianMap {
    Tensor mean;          // [N, C*d_z, h_z, w_z]
    Tensor log_variance;  // same shape, clamped to [-kLogVarClamp, kLogVarClamp]
};

// Z = mean + exp(0.5*log_variance) * eps with eps ~ N(0,1) elementwise,
// split into per-class blocks. Differentiable w.r.t. both maps.
StyleCode reparameterize(const GaussianMap& g, int64_t class_count, Rng& rng);

// Standard-normal sample of a full style code (the test-time prior).
Tensor randn(const Shape& shape, Rng& rng, DType dtype = DType::f32);

enum class VariantKind {
    kGroupDNet,   // grouped encoder, group-decreasing decoder
    kGroupNet,    // all groups = C, fusing tail
    kMulNet,      // C independent sub-networks + fusing tail
    kGroupEnc,    // grouped encoder, groups-1 decoder
    kGroupDec,    // groups-1 encoder, group-decreasing decoder
    kVSpadeLike,  // groups 1 everywhere
};

VariantKind variant_from_string(const std::string& name);
std::string variant_to_string(VariantKind kind);

// Architecture hyperparameters. Defaults describe the GroupDNet toy
// configuration; `variant_defaults` returns capacity-balanced widths for the
// other kinds.
struct VariantConfig {
    VariantKind kind = VariantKind::kGroupDNet;
    int64_t class_count = 8;
    int64_t image_size = 64;
    int64_t latent_size = 4;      // h_z = w_z
    int64_t latent_channels = 8;  // d_z per class
    int64_t encoder_width = 64;   // total channels of each encoder trunk layer
    int64_t decoder_width = 160;  // width of the first decoder stage
    int64_t label_hidden = 32;    // hidden width of each CG-Norm label pathway
    int64_t disc_width = 16;      // first discriminator layer width
    int64_t disc_scales = 2;
    bool spectral = true;  // spectral norm on decoder/discriminator convs

    int64_t encoder_groups() const;
    int64_t decoder_head_groups() const;
    // Output (channels, groups) of the six decoder blocks for this kind.
    std::vector<LayerSpec> decoder_blocks() const;
    // The full decoder plan (head + blocks + RGB tail) for validate_schedule.
    GroupSchedule decoder_schedule() const;

    void validate() const;  // throws ConfigError on inconsistency
};

// Capacity-balanced toy configuration for a variant kind (widths tuned so
// generator parameter counts agree across kinds within 10%).
VariantConfig variant_defaults(VariantKind kind);

class EncoderBase : public Module {
public:
    // image [N,3,H,W], mask [N,1,H,W] with integer class ids.
    virtual GaussianMap encode(const Tensor& image, const Tensor& mask) = 0;
};

class DecoderBase : public Module {
public:
    // z [N, C*d_z, h_z, w_z], label one-hot [N,C,H,W] -> image [N,3,H,W].
    virtual Tensor decode(const Tensor& z, const Tensor& label) = 0;
    Tensor decode(const StyleCode& z, const Tensor& label) { return decode(z.concat(), label); }
    // Features after the last block, before the fusing tail.
    virtual Tensor trunk_features(const Tensor& z, const Tensor& label) = 0;
};

// Downsampling stack shared by the grouped encoder and each MulNet branch:
// num_down stride-2 grouped convs (instance norm + leaky ReLU) followed by
// parallel mean / log-variance heads.
class EncoderTrunk : public Module {
public:
    EncoderTrunk(int64_t in_channels, int64_t width, int64_t out_channels, int64_t groups,
                 int64_t num_down, Rng& rng, DType dtype);

    GaussianMap forward(const Tensor& s);

private:
    std::vector<std::unique_ptr<GroupedConv2d>> trunk_;
    GroupedConv2d mean_head_, logvar_head_;
};

// Grouped encoder: splits the image into per-class channel blocks (X_c) and
// runs one trunk over the concatenation.
class Encoder : public EncoderBase {
public:
    Encoder(const VariantConfig& cfg, int64_t groups, Rng& rng, DType dtype);

    GaussianMap encode(const Tensor& image, const Tensor& mask) override;
    EncoderTrunk& trunk() { return trunk_; }

private:
    int64_t class_count_;
    EncoderTrunk trunk_;
};

// C independent per-class encoders; block c of the output maps sees X_c only.
class MulNetEncoder : public EncoderBase {
public:
    MulNetEncoder(const VariantConfig& cfg, Rng& rng, DType dtype);

    GaussianMap encode(const Tensor& image, const Tensor& mask) override;

private:
    int64_t class_count_;
    std::vector<std::unique_ptr<EncoderTrunk>> branches_;
};

// Head conv + CG-Block stack with x2 nearest upsampling interleaved (before
// blocks 2 and 4, as many as `upsamples` asks for, at most 2).
class DecoderTrunk : public Module {
public:
    DecoderTrunk(int64_t z_channels, int64_t label_channels, int64_t head_channels,
                 int64_t head_groups, const std::vector<LayerSpec>& blocks, int64_t label_hidden,
                 int64_t upsamples, bool spectral, Rng& rng, DType dtype);

    Tensor forward(const Tensor& z, const Tensor& label);

private:
    GroupedConv2d head_;
    std::vector<std::unique_ptr<CGBlock>> blocks_;
    int64_t upsamples_;
};

// Decoder = trunk + fusing tail (remaining upsamples, leaky ReLU, regular
// 3x3 conv to RGB, tanh). Covers every kind except MulNet.
class Decoder : public DecoderBase {
public:
    Decoder(const VariantConfig& cfg, Rng& rng, DType dtype);

    Tensor decode(const Tensor& z, const Tensor& label) override;
    Tensor trunk_features(const Tensor& z, const Tensor& label) override;

private:
    Tensor tail(const Tensor& f);

    DecoderTrunk trunk_;
    GroupedConv2d rgb_;
    int64_t tail_upsamples_;
};

// C per-class trunks (each conditioned on its own one-hot channel) whose
// outputs are concatenated and fused by the same regular-conv tail.
class MulNetDecoder : public DecoderBase {
public:
    MulNetDecoder(const VariantConfig& cfg, Rng& rng, DType dtype);

    Tensor decode(const Tensor& z, const Tensor& label) override;
    Tensor trunk_features(const Tensor& z, const Tensor& label) override;

private:
    Tensor tail(const Tensor& f);

    int64_t class_count_, latent_channels_;
    std::vector<std::unique_ptr<DecoderTrunk>> branches_;
    GroupedConv2d rgb_;
    int64_t tail_upsamples_;
};

// One discriminator scale's outputs: intermediate features (for feature
// matching) and patch logits.
struct DiscScale {
    std::vector<Tensor> features;
    Tensor logits;
};

// Multi-scale patch discriminator on concat(image, one-hot mask). Each scale
// is four kernel-4 stride-2 convs (instance norm from the second on, leaky
// ReLU) plus a 3x3 logits conv; scale s sees the input average-pooled s
// times.
class Discriminator : public Module {
public:
    Discriminator(const VariantConfig& cfg, Rng& rng, DType dtype);
    ~Discriminator() override;

    std::vector<DiscScale> forward(const Tensor& image, const Tensor& onehot);

private:
    struct Scale;
    std::vector<std::unique_ptr<Scale>> scales_;
};

struct Networks {
    VariantConfig config;
    std::shared_ptr<EncoderBase> encoder;
    std::shared_ptr<DecoderBase> decoder;
    std::shared_ptr<Discriminator> discriminator;

    // Parameter-count report, one line per net.
    std::string describe() const;
};

Networks build_variant(const VariantConfig& cfg, Rng& rng, DType dtype = DType::f32);

}  // namespace smis
