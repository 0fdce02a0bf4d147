#pragma once

#include "smis/common.hpp"
#include "smis/tensor.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace smis {

// Synthetic 8-class semantic scenes at 64x64. Class regions partition every
// pixel; each class paints with its own style factor (hue, brightness,
// texture phase), so changing one class's style provably changes only that
// class's pixels.
inline constexpr int64_t kToyClassCount = 8;
inline constexpr int64_t kToyImageSize = 64;

// In paint order index: later classes paint over earlier ones.
enum ToyClass : int64_t {
    kBackground = 0,
    kSkyBand = 1,
    kCircle = 2,
    kSquare = 3,
    kTriangle = 4,
    kStripe = 5,
    kBorder = 6,
    kBlob = 7,
};
const char* toy_class_name(int64_t id);

struct ClassStyle {
    double hue = 0.0;            // [0,1)
    double brightness = 0.5;     // [0,1)
    double texture_phase = 0.0;  // [0,1)
};

// Pure-value scene description; rendering is a deterministic function of it.
struct SceneSpec {
    std::array<ClassStyle, kToyClassCount> styles{};
    std::array<bool, kToyClassCount> present{};  // background presence is ignored (always drawn)

    double sky_height = 10.0;

    double circle_cx = 20.0, circle_cy = 36.0, circle_r = 9.0;
    double square_cx = 46.0, square_cy = 30.0, square_half = 7.0;
    double tri_cx = 32.0, tri_cy = 50.0, tri_half_w = 9.0, tri_h = 12.0;

    int stripe_kind = 0;  // 0 vertical, 1 horizontal, 2 diagonal /, 3 diagonal \.
    double stripe_offset = 32.0, stripe_width = 6.0;

    double border_thickness = 3.0;

    double blob_cx = 14.0, blob_cy = 14.0, blob_r = 7.0;
    std::array<double, 3> blob_amp{0.15, 0.1, 0.05};
    std::array<double, 3> blob_phase{0.0, 0.0, 0.0};
};

// Derives layout and styles deterministically from the seed; the 24 style
// scalars are independent draws, so styles are uncorrelated across classes.
SceneSpec make_scene_spec(uint64_t seed);

struct Scene {
    Tensor image;  // [1,3,S,S], values in [-1,1]
    Tensor mask;   // [1,1,S,S], integer class ids
};
Scene render(const SceneSpec& spec, DType dtype = DType::f32);

// mask [N,1,H,W] with integer ids -> one-hot [N,C,H,W]; ids outside [0,C)
// are a data error. Channels sum to exactly 1 per pixel.
Tensor one_hot(const Tensor& mask, int64_t class_count);

// Per-class input split: output channel block c is image * (mask == c), so
// the blocks partition the image (they sum back to it exactly).
Tensor split_by_class(const Tensor& image, const Tensor& mask, int64_t class_count);

std::vector<int64_t> mask_histogram(const Tensor& mask, int64_t class_count);
std::vector<bool> classes_present(const Tensor& mask, int64_t class_count);

// Renders `count` scenes (seeds derived from the master seed), writes 8-bit
// image/mask files plus a manifest of "image_path<TAB>mask_path" lines, and
// returns the manifest path.
std::string dataset_generate(int64_t count, uint64_t seed, const std::string& out_dir);

class Dataset {
public:
    static Dataset open(const std::string& manifest_path);

    int64_t size() const { return static_cast<int64_t>(records_.size()); }
    Scene load(int64_t index, DType dtype = DType::f32) const;
    const std::pair<std::string, std::string>& record(int64_t index) const;

private:
    std::vector<std::pair<std::string, std::string>> records_;  // resolved paths
};

}  // namespace smis
