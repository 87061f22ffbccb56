#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "hqc/instrument.hpp"

// Branch-free helpers. Masks are all-ones for true and zero for false.
namespace hqc::ct {

[[nodiscard]] constexpr std::uint32_t eq_mask(std::uint32_t a, std::uint32_t b) noexcept {
  const std::uint32_t x = a ^ b;
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) - 1) >> 32);
}

/// a < b for values below 2^31 (the range of ring indices and counters).
[[nodiscard]] constexpr std::uint32_t lt_mask(std::uint32_t a, std::uint32_t b) noexcept {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) - b) >> 32);
}

[[nodiscard]] constexpr std::uint32_t nonzero_mask(std::uint32_t x) noexcept { return ~eq_mask(x, 0); }

[[nodiscard]] constexpr std::uint32_t select(std::uint32_t mask, std::uint32_t if_set, std::uint32_t if_clear) noexcept {
  return (if_set & mask) | (if_clear & ~mask);
}

[[nodiscard]] constexpr std::uint8_t select8(std::uint8_t mask, std::uint8_t if_set, std::uint8_t if_clear) noexcept {
  return static_cast<std::uint8_t>((if_set & mask) | (if_clear & ~mask));
}

/// All-ones when a and b hold identical bytes (equal lengths required by the
/// caller; a length mismatch is public and yields zero).
[[nodiscard]] inline std::uint8_t equal_bytes_mask(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  instrument::emit(instrument::Event::ct_compare, static_cast<std::uint32_t>(a.size()));
  if (a.size() != b.size()) return 0;
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff |= static_cast<std::uint8_t>(a[i] ^ b[i]);
  return static_cast<std::uint8_t>(eq_mask(diff, 0));
}

/// out[i] = mask ? if_set[i] : if_clear[i].
inline void select_bytes(std::span<std::uint8_t> out, std::uint8_t mask, std::span<const std::uint8_t> if_set,
                         std::span<const std::uint8_t> if_clear) noexcept {
  instrument::emit(instrument::Event::ct_select, static_cast<std::uint32_t>(out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = select8(mask, if_set[i], if_clear[i]);
}

}  // namespace hqc::ct
