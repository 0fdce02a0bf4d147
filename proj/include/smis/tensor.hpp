#pragma once

#include <cstddef>
#include <cstring>
#include <functional>
#include <memory>
#include <vector>

#include "smis/common.hpp"

namespace smis {

// Runtime element type. Training defaults to f32; all gradient-check tests
// run at f64. Checkpoints tag every tensor with its dtype.
enum class DType : uint8_t { f32 = 0, f64 = 1 };

inline constexpr size_t dtype_size(DType d) { return d == DType::f32 ? 4u : 8u; }
inline const char* dtype_name(DType d) { return d == DType::f32 ? "f32" : "f64"; }

using Shape = std::vector<int64_t>;

int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

// Calls f(T{}) with T = float or double according to dt.
template <class F>
decltype(auto) dispatch_dtype(DType dt, F&& f) {
  if (dt == DType::f32) return f(float{});
  return f(double{});
}

// Thread-local autodiff mode. Ops record backward closures only while
// gradients are enabled and some input requires them.
bool grad_enabled();
void set_grad_enabled(bool on);

struct NoGradGuard {
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

struct TensorImpl {
  Shape shape;
  DType dtype = DType::f32;
  std::vector<std::byte> data;
  std::vector<std::byte> grad;  // empty until first accumulation
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorImpl>> parents;
  std::function<void()> backward_fn;

  int64_t numel() const { return shape_numel(shape); }

  template <class T>
  T* values() {
    return reinterpret_cast<T*>(data.data());
  }
  template <class T>
  const T* values() const {
    return reinterpret_cast<const T*>(data.data());
  }

  // Allocates (zero-filled) the gradient buffer on first use.
  void ensure_grad() {
    if (grad.empty()) grad.assign(data.size(), std::byte{0});
  }
  template <class T>
  T* grads() {
    return reinterpret_cast<T*>(grad.data());
  }
};

// Value-semantics handle over a shared TensorImpl (the usual autodiff-graph
// node). Copying a Tensor aliases the same storage and graph node.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, DType dtype = DType::f32, bool requires_grad = false);
  static Tensor full(Shape shape, double value, DType dtype = DType::f32);
  static Tensor from_vector(const std::vector<double>& v, Shape shape, DType dtype = DType::f32);
  // Fresh uninitialized result tensor for op outputs.
  static Tensor empty(Shape shape, DType dtype);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return check().shape; }
  int64_t numel() const { return check().numel(); }
  int64_t dim(size_t i) const;
  int64_t rank() const { return static_cast<int64_t>(check().shape.size()); }
  DType dtype() const { return check().dtype; }

  bool requires_grad() const { return impl_ && impl_->requires_grad; }
  Tensor& set_requires_grad(bool on);

  template <class T>
  T* data() {
    check_dtype<T>();
    return impl_->values<T>();
  }
  template <class T>
  const T* data() const {
    check_dtype<T>();
    return impl_->values<T>();
  }

  bool has_grad() const { return impl_ && !impl_->grad.empty(); }
  // Gradient buffer, allocated on demand (zero-filled).
  template <class T>
  T* grad_data() {
    check_dtype<T>();
    impl_->ensure_grad();
    return impl_->grads<T>();
  }
  void zero_grad();

  // Element access as double regardless of dtype (tests, image export, ...).
  double at(int64_t linear_index) const;
  void set(int64_t linear_index, double value);
  double item() const;
  double grad_at(int64_t linear_index) const;

  // Reverse-mode sweep from a scalar. Frees the tape as it goes unless
  // retain_graph is set.
  void backward(bool retain_graph = false);

  // Same values, no tape. Deep copy.
  Tensor detach() const;
  Tensor clone() const { return detach(); }
  Tensor to(DType target) const;

  // Raw byte-level fill (checkpoint loading); size must match exactly.
  void copy_raw_from(const void* src, size_t bytes);

  const std::shared_ptr<TensorImpl>& impl() const { return impl_; }

 private:
  TensorImpl& check() const {
    if (!impl_) throw UsageError("operation on undefined tensor");
    return *impl_;
  }
  template <class T>
  void check_dtype() const {
    const TensorImpl& t = check();
    const bool ok = (std::is_same_v<T, float> && t.dtype == DType::f32) ||
                    (std::is_same_v<T, double> && t.dtype == DType::f64);
    if (!ok) throw UsageError(std::string("tensor dtype is ") + dtype_name(t.dtype) +
                              ", accessed with the other element type");
  }

  std::shared_ptr<TensorImpl> impl_;
};

// Helper for op authors: allocates the output and, when autodiff is active,
// wires parents. The caller fills values and then assigns *backward_slot
// (non-null only when a tape node was created; the closure must capture the
// output/parent impls as raw pointers -- backward() keeps them alive).
Tensor make_op_result(Shape shape, DType dtype, std::vector<Tensor> parents,
                      std::function<void()>** backward_slot_out);

// Accumulation target for parent p, or nullptr when p ignores gradients.
template <class T>
T* grad_sink(TensorImpl* p) {
  if (!p->requires_grad) return nullptr;
  p->ensure_grad();
  return p->grads<T>();
}

}  // namespace smis
