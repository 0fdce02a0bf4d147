#pragma once

#include <vector>

#include "smis/tensor.hpp"

namespace smis {

// All primitive differentiable operations. Tensors are NCHW for 4-D inputs.
// Inputs to a binary op must share shape and dtype (no broadcasting).

// ---- elementwise ----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor add_scalar(const Tensor& a, double c);
Tensor mul_scalar(const Tensor& a, double c);
Tensor neg(const Tensor& a);
Tensor square(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor sqrt(const Tensor& a);
Tensor abs(const Tensor& a);
Tensor tanh(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor leaky_relu(const Tensor& a, double slope);
Tensor clamp(const Tensor& a, double lo, double hi);

// ---- reductions (to shape [1]) ----
Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);

// ---- shape ----
Tensor concat_channels(const std::vector<Tensor>& xs);
Tensor slice_channels(const Tensor& x, int64_t start, int64_t count);
Tensor concat_batch(const std::vector<Tensor>& xs);
Tensor slice_batch(const Tensor& x, int64_t start, int64_t count);

// ---- linear algebra / neural-net primitives ----

// x:[N,K] w:[M,K] b:[M] (or undefined) -> [N,M]
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

enum class ConvPath { naive, fast };

// x:[N,Din,H,W] w:[Dout,Din/G,kh,kw] b:[Dout] or undefined.
// `path` selects the always-kept naive reference kernel or the im2col/GEMM
// kernel; both forward and backward honor the selection so the two paths can
// be compared end to end.
Tensor conv2d_grouped(const Tensor& x, const Tensor& w, const Tensor& b, int64_t stride,
                      int64_t padding, int64_t groups, ConvPath path = ConvPath::fast);

// Per-channel batch normalization (biased batch statistics). gamma/beta may be
// undefined (pure normalization). In training mode batch statistics are used
// and running_mean/running_var (plain buffers, never on the tape) are updated
// in place with the given momentum; in eval mode the running stats are used.
Tensor batch_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, Tensor& running_mean,
                  Tensor& running_var, bool training, double momentum = 0.1, double eps = 1e-5);

// Per-(sample,channel) normalization over H,W; no affine, no running stats.
Tensor instance_norm(const Tensor& x, double eps = 1e-5);

// Per-(sample,group) normalization over (D/G,H,W); no affine.
Tensor group_norm(const Tensor& x, int64_t groups, double eps = 1e-5);

// Nearest-neighbor resize to (out_h, out_w); source index = floor(i*in/out).
Tensor nearest_resize(const Tensor& x, int64_t out_h, int64_t out_w);
Tensor nearest_upsample(const Tensor& x, int64_t factor);

// Non-overlapping k x k average pooling (stride k); H and W must divide by k.
Tensor avg_pool(const Tensor& x, int64_t k);

// Spectral normalization as a fused differentiable op: runs `power_iters`
// power iterations from the persistent left-vector estimate u ([M], M =
// w.dim(0)), optionally writes the refreshed estimate back into u, and
// returns w / sigma. u and v are treated as constants in backward (the
// standard approximation). sigma is guarded by eps.
Tensor spectral_scale(const Tensor& w, Tensor& u, int power_iters, bool update_state,
                      double eps = 1e-12);

// Estimated top singular value of w viewed as [dim0, numel/dim0], after
// power_iters iterations from u (not updated). Test/inspection helper.
double spectral_sigma(const Tensor& w, const Tensor& u, int power_iters, double eps = 1e-12);

}  // namespace smis
