#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// GF(2^8) = GF(2)[x]/(x^8 + x^4 + x^3 + x^2 + 1), primitive element alpha = x.
namespace hqc::gf256 {

inline constexpr std::uint16_t kFieldPolynomial = 0x11D;
inline constexpr std::uint8_t kAlpha = 0x02;
inline constexpr std::size_t kGroupOrder = 255;

struct LogTables {
  std::array<std::uint8_t, 512> exp;  // exp[i] = alpha^(i mod 255)
  std::array<std::uint8_t, 256> log;  // log[0] is unused (0)
};

[[nodiscard]] const LogTables& log_tables() noexcept;

/// Log/antilog product with the zero case handled by masking, not branching.
[[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept;

/// a^254. Throws std::domain_error for a == 0.
[[nodiscard]] std::uint8_t inv(std::uint8_t a);

/// alpha^(e mod 255).
[[nodiscard]] std::uint8_t alpha_pow(std::size_t e) noexcept;

/// Multiplication table for the generator coefficients of an RS code:
/// row j holds g_j * x for every byte x.
class EncodeTable {
 public:
  using Row = std::array<std::uint8_t, 256>;

  [[nodiscard]] static EncodeTable build(std::span<const std::uint8_t> generator);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
  [[nodiscard]] const Row& row(std::size_t j) const noexcept { return rows_[j]; }
  [[nodiscard]] std::uint8_t at(std::size_t j, std::uint8_t x) const noexcept { return rows_[j][x]; }
  [[nodiscard]] std::size_t size_bytes() const noexcept { return rows_.size() * sizeof(Row); }

  /// Flips one entry. Exists so the self-test can prove the differential
  /// check notices a damaged table.
  void corrupt_entry(std::size_t j, std::uint8_t x, std::uint8_t flip) noexcept { rows_[j][x] ^= flip; }

 private:
  std::vector<Row> rows_;
};

/// Nibble-sliced products: hi[p][v] = alpha^p * (v << 4), lo[p][v] = alpha^p * v,
/// for exponents p in [0, 255).
struct SyndromeTables {
  std::array<std::array<std::uint8_t, 16>, kGroupOrder> hi;
  std::array<std::array<std::uint8_t, 16>, kGroupOrder> lo;

  [[nodiscard]] std::uint8_t mul_alpha_pow(std::size_t p, std::uint8_t x) const noexcept {
    return hi[p][x >> 4] ^ lo[p][x & 0x0F];
  }
  [[nodiscard]] static constexpr std::size_t size_bytes() noexcept { return 2 * kGroupOrder * 16; }
};

[[nodiscard]] SyndromeTables build_syndrome_tables();

/// Process-wide instance, built on first use.
[[nodiscard]] const SyndromeTables& syndrome_tables();

}  // namespace hqc::gf256
