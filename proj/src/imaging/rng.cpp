#include "strb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace strb {

namespace {

constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t value,
                               std::uint64_t salt) noexcept {
  return mix64(h ^ mix64(value + salt));
}

}  // namespace

std::uint64_t derive_key(const SeedSpec& seed) noexcept {
  std::uint64_t h = mix64(seed.master_seed ^ 0x5354'5242'0000'0001ULL);
  const std::string& id = seed.image_id;
  std::size_t pos = 0;
  while (pos < id.size()) {
    std::uint64_t chunk = 0;
    const std::size_t len = std::min<std::size_t>(8, id.size() - pos);
    std::memcpy(&chunk, id.data() + pos, len);
    h = absorb(h, chunk, 0xA0761D6478BD642FULL);
    pos += len;
  }
  h = absorb(h, id.size(), 0xE7037ED1A0B428DBULL);
  h = absorb(h, seed.stream, 0x8EBC6AF09C88C6E3ULL);
  h = absorb(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(seed.severity)),
             0x589965CC75374CC3ULL);
  return h;
}

double RandomStream::normal_at(std::uint64_t i) const noexcept {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform_at(2 * i);
  const double u2 = uniform_at(2 * i + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace strb
