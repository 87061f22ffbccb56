#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hqc/backend.hpp"
#include "hqc/gf256.hpp"
#include "hqc/params.hpp"
#include "hqc/ring.hpp"

// Concatenated code: shortened Reed-Solomon over GF(2^8) outside, duplicated
// first-order Reed-Muller RM(1,7) inside.
//
// RS codewords are rs_n1 bytes laid out as [message | parity]. Byte t holds
// the coefficient of x^(n1-1-t), so the message occupies the high-degree
// terms, parity the low ones, and s_i = c(alpha^i) vanishes for i = 1..2*delta.
namespace hqc::codec {

/// Coefficients g_0..g_{r-1} of prod_{i=1..r} (x - alpha^i), r = n1 - k.
/// The monic x^r term is omitted.
[[nodiscard]] std::vector<std::uint8_t> rs_generator(const ParamSet& params);

/// Lazily built, process-wide encode table for the parameter set.
[[nodiscard]] const gf256::EncodeTable& encode_table(const ParamSet& params);

/// Systematic LFSR encoder; every GF product is a table row lookup.
[[nodiscard]] std::vector<std::uint8_t> rs_encode(std::span<const std::uint8_t> msg, const ParamSet& params);
[[nodiscard]] std::vector<std::uint8_t> rs_encode_with(std::span<const std::uint8_t> msg, const ParamSet& params,
                                                       const gf256::EncodeTable& table);

/// s[i-1] = r(alpha^i) for i = 1..2*delta, via nibble-sliced tables.
[[nodiscard]] std::vector<std::uint8_t> rs_syndromes(std::span<const std::uint8_t> received, const ParamSet& params);

/// Corrects up to delta symbol errors and returns the rs_k message bytes.
/// When the error locator's degree and root count disagree the received
/// message bytes are returned unchanged. Loop bounds depend only on params.
[[nodiscard]] std::vector<std::uint8_t> rs_decode(std::span<const std::uint8_t> received, const ParamSet& params,
                                                  const Backend& backend = optimized_backend());

inline constexpr std::size_t kRmCopyBits = 128;
inline constexpr std::size_t kRmMaxWords = 640 / 64;

/// rm_mult consecutive copies of one RM(1,7) codeword, packed LSB first.
struct RmBlock {
  std::array<std::uint64_t, kRmMaxWords> words{};
  std::size_t bits = 0;

  [[nodiscard]] bool bit(std::size_t p) const noexcept { return (words[p / 64] >> (p % 64)) & 1U; }
  void flip(std::size_t p) noexcept { words[p / 64] ^= std::uint64_t{1} << (p % 64); }
};

/// Bits 0..6 of the byte select the linear monomials x_0..x_6 of the
/// position index, bit 7 the constant row.
[[nodiscard]] RmBlock rm_encode(std::uint8_t byte, const ParamSet& params);
/// Sums the copies, applies a fast Hadamard transform to the +-1 soft
/// values and picks the largest magnitude (lowest index on ties).
[[nodiscard]] std::uint8_t rm_decode(const RmBlock& block, const ParamSet& params);

[[nodiscard]] RingElement code_encode(std::span<const std::uint8_t> msg, const ParamSet& params,
                                      const Backend& backend = optimized_backend());
/// Reads only the low n1*n2 bits of `noisy`.
[[nodiscard]] std::vector<std::uint8_t> code_decode(const RingElement& noisy, const ParamSet& params,
                                                    const Backend& backend = optimized_backend());

namespace detail {
void rm_encode_words(std::uint8_t byte, std::size_t mult, std::span<std::uint64_t> dst) noexcept;
[[nodiscard]] std::uint8_t rm_decode_words(std::span<const std::uint64_t> src, std::size_t mult) noexcept;
}  // namespace detail

}  // namespace hqc::codec
