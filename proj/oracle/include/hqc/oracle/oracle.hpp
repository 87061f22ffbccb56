#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hqc/backend.hpp"
#include "hqc/keccak.hpp"
#include "hqc/params.hpp"
#include "hqc/ring.hpp"

// Deliberately naive reference kernels. Not constant-time; for differential
// tests and baseline measurements only.
namespace hqc::oracle {

/// Bit-by-bit convolution: for every set bit i of a and j of b, flip (i + j) mod n.
[[nodiscard]] RingElement naive_ring_mul(const RingElement& a, const RingElement& b);

/// Bit-level rotation: result bit (j + shift) mod n = a bit j.
[[nodiscard]] RingElement naive_cyclic_shift(const RingElement& a, std::size_t shift);

/// Shift-and-add multiply with reduction by 0x11D; no tables.
[[nodiscard]] std::uint8_t naive_gf_mul(std::uint8_t a, std::uint8_t b) noexcept;

[[nodiscard]] std::vector<std::uint8_t> naive_rs_generator(const ParamSet& params);

/// LFSR encoder that multiplies with naive_gf_mul per byte.
[[nodiscard]] std::vector<std::uint8_t> naive_rs_encode(std::span<const std::uint8_t> msg, const ParamSet& params);

/// Horner evaluation of the received polynomial at alpha^i.
[[nodiscard]] std::vector<std::uint8_t> naive_rs_syndromes(std::span<const std::uint8_t> received,
                                                           const ParamSet& params);

/// One Shake256 sponge per request, fed byte by byte.
[[nodiscard]] std::vector<std::vector<std::uint8_t>> scalar_shake_batch(std::span<const keccak::BatchRequest> requests);

/// Backend built from the naive kernels above.
[[nodiscard]] const Backend& baseline_backend() noexcept;

}  // namespace hqc::oracle
