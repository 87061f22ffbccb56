#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>

#include "hqc/keccak.hpp"

namespace hqc::keccak::detail {

inline constexpr std::uint8_t kShakePad = 0x1F;

inline constexpr std::array<std::uint64_t, kRounds> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Combined rho/pi walk: lane kPiLane[i] receives the previous lane rotated
// by kRhoOffset[i].
inline constexpr std::array<int, 24> kRhoOffset = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                                   27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
inline constexpr std::array<std::size_t, 24> kPiLane = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                                        15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

inline std::uint64_t load64(const std::uint8_t* p) noexcept {
  std::uint64_t v;
  std::memcpy(&v, p, 8);
  if constexpr (std::endian::native == std::endian::big) v = __builtin_bswap64(v);
  return v;
}

inline void store64(std::uint8_t* p, std::uint64_t v) noexcept {
  if constexpr (std::endian::native == std::endian::big) v = __builtin_bswap64(v);
  std::memcpy(p, &v, 8);
}

inline void xor_byte(State& s, std::size_t pos, std::uint8_t b) noexcept {
  s[pos / 8] ^= std::uint64_t{b} << (8 * (pos % 8));
}

inline std::uint8_t get_byte(const State& s, std::size_t pos) noexcept {
  return static_cast<std::uint8_t>(s[pos / 8] >> (8 * (pos % 8)));
}

/// XORs a full rate block as 17 whole lanes.
inline void xor_block(State& s, std::span<const std::uint8_t> block) noexcept {
  for (std::size_t i = 0; i < kRate / 8; ++i) s[i] ^= load64(block.data() + 8 * i);
}

/// XORs a partial block (< kRate bytes) and applies SHAKE padding.
inline void xor_tail(State& s, std::span<const std::uint8_t> tail) noexcept {
  const std::size_t full = tail.size() / 8;
  for (std::size_t i = 0; i < full; ++i) s[i] ^= load64(tail.data() + 8 * i);
  for (std::size_t pos = 8 * full; pos < tail.size(); ++pos) xor_byte(s, pos, tail[pos]);
  xor_byte(s, tail.size(), kShakePad);
  xor_byte(s, kRate - 1, 0x80);
}

/// Writes the first out.size() (<= kRate) bytes of the rate.
inline void store_block(const State& s, std::span<std::uint8_t> out) noexcept {
  const std::size_t full = out.size() / 8;
  for (std::size_t i = 0; i < full; ++i) store64(out.data() + 8 * i, s[i]);
  for (std::size_t pos = 8 * full; pos < out.size(); ++pos) out[pos] = get_byte(s, pos);
}

}  // namespace hqc::keccak::detail
