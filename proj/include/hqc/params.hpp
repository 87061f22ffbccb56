#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace hqc {

enum class Level { hqc1, hqc3, hqc5 };

/// Number of 64-bit words backing an n-bit ring element, rounded up to a
/// multiple of four words so every buffer spans whole 256-bit blocks.
constexpr std::size_t padded_words(std::size_t n) noexcept {
  const std::size_t raw = (n + 63) / 64;
  return (raw + 3) & ~std::size_t{3};
}

/// Default sparse/dense routing threshold for ring multiplication.
inline constexpr std::size_t kDefaultSparseThreshold = 2048;

inline constexpr std::size_t kSeedBytes = 32;
inline constexpr std::size_t kSharedSecretBytes = 64;

struct ParamSet {
  Level level;
  std::string_view name;
  std::size_t n;         // ring length in bits
  std::size_t omega;     // secret key weight
  std::size_t omega_r;   // weight of r1, r2 and e
  std::size_t rs_n1;     // RS length (bytes)
  std::size_t rs_k;      // RS dimension (bytes) == message length
  std::size_t rs_d;      // RS minimum distance
  std::size_t rs_delta;  // RS correction capacity
  std::size_t rm_n2;     // duplicated RM length (bits)
  std::size_t rm_mult;   // RM duplication multiplicity
  std::size_t words;     // padded ring storage length
  std::size_t sparse_threshold;

  [[nodiscard]] constexpr std::size_t n_bytes() const noexcept { return (n + 7) / 8; }
  [[nodiscard]] constexpr std::size_t rs_parity() const noexcept { return rs_n1 - rs_k; }
  /// Bits occupied by a concatenated codeword (n1 * n2).
  [[nodiscard]] constexpr std::size_t code_bits() const noexcept { return rs_n1 * rm_n2; }
  [[nodiscard]] constexpr std::size_t code_bytes() const noexcept { return (code_bits() + 7) / 8; }
  /// RM minimum distance of the duplicated code (64 per [128,8] copy).
  [[nodiscard]] constexpr std::size_t rm_d() const noexcept { return 64 * rm_mult; }

  [[nodiscard]] constexpr std::size_t public_key_bytes() const noexcept { return kSeedBytes + n_bytes(); }
  [[nodiscard]] constexpr std::size_t secret_key_bytes() const noexcept {
    return kSeedBytes + rs_k + public_key_bytes();
  }
  [[nodiscard]] constexpr std::size_t ciphertext_bytes() const noexcept { return n_bytes() + code_bytes(); }
};

namespace detail {

constexpr ParamSet make_params(Level level, std::string_view name, std::size_t n, std::size_t omega,
                               std::size_t omega_r, std::size_t n1, std::size_t k, std::size_t d,
                               std::size_t n2) {
  return ParamSet{level, name, n, omega, omega_r, n1, k, d, (d - 1) / 2, n2, n2 / 128,
                  padded_words(n), kDefaultSparseThreshold};
}

}  // namespace detail

inline constexpr std::array<ParamSet, 3> kParamSets = {
    detail::make_params(Level::hqc1, "hqc1", 17669, 66, 75, 46, 16, 31, 384),
    detail::make_params(Level::hqc3, "hqc3", 35851, 100, 114, 56, 24, 33, 640),
    detail::make_params(Level::hqc5, "hqc5", 57637, 131, 149, 90, 32, 59, 640),
};

[[nodiscard]] const ParamSet& get_params(Level level) noexcept;

/// Accepts the CLI spellings "hqc1", "hqc3", "hqc5".
[[nodiscard]] std::optional<Level> parse_level(std::string_view name) noexcept;

[[nodiscard]] std::span<const ParamSet> all_params() noexcept;

}  // namespace hqc
