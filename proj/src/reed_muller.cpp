#include <array>
#include <cstdlib>

#include "hqc/codec.hpp"
#include "hqc/instrument.hpp"

namespace hqc::codec {
namespace {

// Bit p of pattern k is bit k of p, for p in [0, 64).
constexpr std::array<std::uint64_t, 6> kVariablePatterns = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

constexpr std::uint64_t bit_mask(std::uint8_t byte, unsigned k) noexcept {
  return 0 - static_cast<std::uint64_t>((byte >> k) & 1U);
}

}  // namespace

namespace detail {

void rm_encode_words(std::uint8_t byte, std::size_t mult, std::span<std::uint64_t> dst) noexcept {
  std::uint64_t low = bit_mask(byte, 7);
  for (unsigned k = 0; k < 6; ++k) low ^= kVariablePatterns[k] & bit_mask(byte, k);
  const std::uint64_t high = low ^ bit_mask(byte, 6);
  for (std::size_t c = 0; c < mult; ++c) {
    dst[2 * c] = low;
    dst[2 * c + 1] = high;
  }
}

std::uint8_t rm_decode_words(std::span<const std::uint64_t> src, std::size_t mult) noexcept {
  instrument::emit(instrument::Event::rm_decode_block, static_cast<std::uint32_t>(mult));
  std::array<std::int32_t, kRmCopyBits> f{};
  for (std::size_t p = 0; p < kRmCopyBits; ++p) {
    std::int32_t ones = 0;
    for (std::size_t c = 0; c < mult; ++c) ones += static_cast<std::int32_t>((src[2 * c + p / 64] >> (p % 64)) & 1U);
    f[p] = static_cast<std::int32_t>(mult) - 2 * ones;
  }

  for (std::size_t h = 1; h < kRmCopyBits; h *= 2) {
    for (std::size_t i = 0; i < kRmCopyBits; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = f[j];
        const std::int32_t y = f[j + h];
        f[j] = x + y;
        f[j + h] = x - y;
      }
    }
  }

  std::int32_t best = -1;
  std::uint32_t best_index = 0;
  std::uint32_t best_negative = 0;
  for (std::uint32_t u = 0; u < kRmCopyBits; ++u) {
    const std::int32_t value = f[u];
    const std::int32_t sign = value >> 31;
    const std::int32_t magnitude = (value ^ sign) - sign;
    // All-ones when magnitude > best (strict keeps the lowest index).
    const auto better = static_cast<std::uint32_t>((best - magnitude) >> 31);
    best = static_cast<std::int32_t>((static_cast<std::uint32_t>(magnitude) & better) |
                                     (static_cast<std::uint32_t>(best) & ~better));
    best_index = (u & better) | (best_index & ~better);
    best_negative = (static_cast<std::uint32_t>(sign) & better) | (best_negative & ~better);
  }
  return static_cast<std::uint8_t>(best_index | (best_negative & 0x80U));
}

}  // namespace detail

RmBlock rm_encode(std::uint8_t byte, const ParamSet& params) {
  RmBlock block;
  block.bits = params.rm_n2;
  detail::rm_encode_words(byte, params.rm_mult, block.words);
  return block;
}

std::uint8_t rm_decode(const RmBlock& block, const ParamSet& params) {
  return detail::rm_decode_words(block.words, params.rm_mult);
}

}  // namespace hqc::codec
