#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace smis {

// Error taxonomy. Every CLI command maps these onto a one-line
// "error: <kind>: <message>" on stderr and a nonzero exit code.
struct Error : std::runtime_error {
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind(std::move(kind)) {}
  std::string kind;
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error("shape", msg) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config", msg) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage", msg) {}
};
struct DataError : Error {
  explicit DataError(const std::string& msg) : Error("data", msg) {}
};

// splitmix64, used both as a stream-derivation hash and to seed Rng.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derive an independent child seed from (master, tag). Used so that e.g.
// per-scene and per-class random streams never alias.
inline uint64_t derive_seed(uint64_t master, uint64_t tag) {
  uint64_t s = master ^ (0x2545f4914f6cdd1dULL * (tag + 1));
  uint64_t a = splitmix64(s);
  uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

// xoshiro256** with Box-Muller normals. Self-contained so that runs are
// bit-reproducible independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0) { reseed(seed); }

  void reseed(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller; the spare value is discarded so each
  // draw consumes exactly two uniforms.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  const uint64_t* state() const { return s_; }
  void set_state(const uint64_t st[4]) { for (int i = 0; i < 4; ++i) s_[i] = st[i]; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t s_[4];
};

// FNV-1a, used for stable config hashes echoed in reports.
inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// String-tagged stream derivation, e.g. derive_seed(master, "scene/42").
inline uint64_t derive_seed(uint64_t master, const std::string& tag) {
  return derive_seed(master, fnv1a64(tag));
}

}  // namespace smis
