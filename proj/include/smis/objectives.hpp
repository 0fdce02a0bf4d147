#pragma once

#include "smis/metrics.hpp"

namespace smis {

// Weights of the generator objective: total = gan_g + fm*L_FM +
// perceptual*L_P + kl*L_KL.
struct LossWeights {
    double fm = 10.0;
    double perceptual = 10.0;
    double kl = 0.05;
};

// Per-term scalars for logging. `total` is the weighted generator sum (or
// gan_d alone for the discriminator step).
struct LossReport {
    double gan_g = 0.0;
    double gan_d = 0.0;
    double fm = 0.0;
    double perceptual = 0.0;
    double kl = 0.0;
    double total = 0.0;
};

// Patch logits of every discriminator scale, for the hinge losses.
std::vector<Tensor> logits_of(const std::vector<DiscScale>& scales);

// Hinge GAN losses, averaged over scales and patches:
//   L_D = mean(relu(1 - D(real))) + mean(relu(1 + D(fake)))
//   L_G = -mean(D(fake))
// All return [1] scalars on the tape.
Tensor hinge_d_loss(const std::vector<Tensor>& real_logits,
                    const std::vector<Tensor>& fake_logits);
Tensor hinge_g_loss(const std::vector<Tensor>& fake_logits);

// Mean over scales and layers of elementwise L1 between the feature
// pyramids. The real side is expected to be off the tape (computed under
// NoGradGuard); shapes must match exactly.
Tensor feature_matching_loss(const std::vector<DiscScale>& real,
                             const std::vector<DiscScale>& fake);

// Mean of per-layer L1 distances between extractor features of the two
// images. The real side is detached internally; gradients flow through
// `fake` only.
Tensor perceptual_loss(const Tensor& real, const Tensor& fake, FeatureExtractor& ex);

// KL divergence of the posterior from N(0,1), averaged over all elements:
// 0.5 * mean(mu^2 + exp(logvar) - logvar - 1).
Tensor kl_loss(const GaussianMap& g);

// One training example batch.
struct Batch {
    Tensor image;  // [N,3,H,W] in [-1,1]
    Tensor mask;   // [N,1,H,W] integer class ids
};

// A differentiable total (for backward) plus the logged per-term values.
struct ObjectiveResult {
    Tensor total;
    LossReport report;
};

// Generator step: encode -> reparameterize -> decode -> discriminate, then
// gan_g + fm*L_FM + perceptual*L_P + kl*L_KL. Real discriminator features
// are computed off the tape. The caller freezes the discriminator
// (set_requires_grad(false)) around this step; the composition itself leaves
// module flags untouched.
ObjectiveResult generator_objective(const Batch& batch, Networks& nets, const LossWeights& weights,
                                    FeatureExtractor& ex, Rng& rng);

// Discriminator step: the fake image is produced entirely off the tape, so
// no gradient can reach the generator; total is the hinge D loss.
ObjectiveResult discriminator_objective(const Batch& batch, Networks& nets, Rng& rng);

}  // namespace smis
