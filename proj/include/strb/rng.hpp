#pragma once

#include <cstdint>
#include <string>

namespace strb {

/// Inputs from which every random stream in the toolkit is derived. The
/// `stream` field is the corruption index for benchmark generation and a
/// purpose tag elsewhere (see kAugmentStream).
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::string image_id;
  std::uint32_t stream = 0;
  int severity = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

inline constexpr std::uint32_t kAugmentStream = 0x4155'4701;  // "AUG\x01"

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// 64-bit key of a derivation tuple. Pure function of every SeedSpec field.
std::uint64_t derive_key(const SeedSpec& seed) noexcept;

/// Counter-based generator: draw i is mix64(key + mix64(i + golden)), so any
/// draw can be computed independently of the others. Parallel loops use the
/// *_at accessors with a per-element index; scalar code uses the next_*
/// members, which advance an internal counter.
///
/// Normal variates use the Box-Muller cosine branch on the uniform pair at
/// counters (2i, 2i+1).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t key() const noexcept { return key_; }

  /// Independent stream for a sub-purpose (e.g. per-pixel noise).
  RandomStream substream(std::uint64_t tag) const noexcept {
    return RandomStream(mix64(key_ ^ mix64(tag + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t u64_at(std::uint64_t i) const noexcept {
    return mix64(key_ + mix64(i + 0x9E3779B97F4A7C15ULL));
  }
  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform_at(std::uint64_t i) const noexcept {
    return static_cast<double>(u64_at(i) >> 11) * 0x1.0p-53;
  }
  double normal_at(std::uint64_t i) const noexcept;

  std::uint64_t next_u64() noexcept { return u64_at(counter_++); }
  double next_uniform() noexcept { return uniform_at(counter_++); }
  double next_uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * next_uniform();
  }
  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t next_below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }
  bool next_bool() noexcept { return (next_u64() >> 63) != 0; }
  double next_normal() noexcept {
    // Consumes an aligned counter pair so the scalar and indexed forms agree.
    if (counter_ & 1) ++counter_;
    double z = normal_at(counter_ / 2);
    counter_ += 2;
    return z;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline RandomStream derive_rng(const SeedSpec& seed) noexcept {
  return RandomStream(derive_key(seed));
}

}  // namespace strb
