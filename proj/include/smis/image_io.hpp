#pragma once

#include "smis/tensor.hpp"

#include <string>

namespace smis {

// Binary PPM (P6) / PGM (P5) image files, 8-bit.
//
// Color images map [-1, 1] <-> [0, 255] with the affine rule
//   byte = round((v + 1) * 127.5),  v = byte / 127.5 - 1,
// so a write/read round trip moves any channel by at most 0.5/127.5.
// Mask images store raw ids: byte = round(v), v = byte (no scaling).

// image: [3,H,W] or [1,3,H,W], values in [-1, 1] (clamped on write).
void write_ppm(const std::string& path, const Tensor& image);
Tensor read_ppm(const std::string& path, DType dtype = DType::f32);  // [1,3,H,W]

// mask: [H,W], [1,H,W] or [1,1,H,W], integer values in [0, 255].
void write_pgm(const std::string& path, const Tensor& mask);
Tensor read_pgm(const std::string& path, DType dtype = DType::f32);  // [1,1,H,W]

}  // namespace smis
