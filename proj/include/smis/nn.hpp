#pragma once

#include "smis/common.hpp"
#include "smis/ops.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace smis {

// A named tensor owned by a network: either a trainable parameter or a
// persistent buffer (running statistics, spectral-norm u estimates, ...).
struct Parameter {
    std::string name;  // dotted path, unique within a network
    Tensor tensor;
    bool trainable = true;
};

// Base class for layers and networks.
//
// Modules register their tensors and children once, in the constructor.
// Registered tensors share storage with the member handles, so all later
// mutation (optimizer steps, running-stat updates, checkpoint loads) must go
// through the tensor's data buffers, never by reassigning the member handle.
class Module {
public:
    virtual ~Module() = default;

    // Every registered tensor of this module and its children, depth-first,
    // with dotted names rooted at `prefix` (empty prefix: local names only).
    std::vector<Parameter> named_state(const std::string& prefix = "") const;
    std::vector<Parameter> parameters() const;  // trainable entries only
    int64_t parameter_count() const;            // trainable scalars

    void set_requires_grad(bool enabled);
    void zero_grad();

    void set_training(bool training);
    bool training() const { return training_; }

protected:
    void register_parameter(const std::string& name, const Tensor& t);
    void register_buffer(const std::string& name, const Tensor& t);
    void register_module(const std::string& name, Module& child);

private:
    struct Entry {
        std::string name;
        Tensor tensor;
        bool trainable;
    };
    void collect(const std::string& prefix, std::vector<Parameter>& out) const;

    std::vector<Entry> entries_;
    std::vector<std::pair<std::string, Module*>> children_;
    bool training_ = true;
};

// Glorot (Xavier) uniform initialization. For rank-4 conv weights
// [Cout, Cin/G, kh, kw] the fans are per-group: fan_in = (Cin/G)*kh*kw,
// fan_out = (Cout/G)*kh*kw. For rank-2 weights [M, K]: fan_in = K,
// fan_out = M/G. Values are uniform on ±sqrt(6/(fan_in+fan_out)).
Tensor glorot_init(const Shape& shape, int64_t groups, Rng& rng,
                   DType dtype = DType::f32);

struct Conv2dOptions {
    int64_t stride = 1;
    int64_t padding = 0;
    int64_t groups = 1;
    bool bias = true;
    bool spectral = false;  // spectral normalization on the weight
};

// Grouped 2-D convolution layer. With `spectral` set, the effective weight is
// W / sigma_max(W) with one power iteration per training forward; the
// persistent u estimate is a buffer and is frozen in eval mode.
class GroupedConv2d : public Module {
public:
    GroupedConv2d(int64_t in_channels, int64_t out_channels, int64_t kernel,
                  const Conv2dOptions& opt, Rng& rng, DType dtype = DType::f32);

    Tensor forward(const Tensor& x);

    Tensor& weight() { return w_; }
    Tensor& bias() { return b_; }
    Tensor& spectral_u() { return u_; }
    const Conv2dOptions& options() const { return opt_; }

private:
    Tensor w_, b_, u_;
    Conv2dOptions opt_;
};

// Per-channel batch normalization layer with running statistics. With
// `affine` false it normalizes only (no learned scale/shift).
class BatchNorm2d : public Module {
public:
    BatchNorm2d(int64_t channels, bool affine, DType dtype = DType::f32);

    Tensor forward(const Tensor& x);

    Tensor& running_mean() { return running_mean_; }
    Tensor& running_var() { return running_var_; }

private:
    Tensor gamma_, beta_, running_mean_, running_var_;
    bool affine_;
};

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.0;
    double beta2 = 0.9;
    double eps = 1e-8;
};

// Adam with bias correction. Moment buffers live in the parameter dtype; the
// arithmetic runs in double. A parameter whose grad buffer is absent is
// treated as having a zero gradient.
class Adam {
public:
    Adam(std::vector<Parameter> params, const AdamConfig& cfg);

    void step();
    void zero_grad();

    double lr() const { return cfg_.lr; }
    void set_lr(double lr) { cfg_.lr = lr; }
    int64_t step_count() const { return t_; }
    void set_step_count(int64_t t) { t_ = t; }

    // Moment buffers as named tensors ("<param>.adam_m"/"<param>.adam_v"),
    // for checkpointing.
    std::vector<Parameter> state_tensors() const;

private:
    std::vector<Parameter> params_;
    std::vector<Tensor> m_, v_;
    AdamConfig cfg_;
    int64_t t_ = 0;
};

}  // namespace smis
