#include "hqc/gf256.hpp"

#include <stdexcept>

namespace hqc::gf256 {
namespace {

LogTables build_log_tables() noexcept {
  LogTables t{};
  std::uint16_t v = 1;
  for (std::size_t i = 0; i < kGroupOrder; ++i) {
    t.exp[i] = static_cast<std::uint8_t>(v);
    t.log[v] = static_cast<std::uint8_t>(i);
    v <<= 1;
    if (v & 0x100) v ^= kFieldPolynomial;
  }
  for (std::size_t i = kGroupOrder; i < t.exp.size(); ++i) t.exp[i] = t.exp[i - kGroupOrder];
  return t;
}

}  // namespace

const LogTables& log_tables() noexcept {
  static const LogTables tables = build_log_tables();
  return tables;
}

std::uint8_t mul(std::uint8_t a, std::uint8_t b) noexcept {
  const LogTables& t = log_tables();
  const std::uint8_t product = t.exp[std::size_t{t.log[a]} + t.log[b]];
  // (x - 1) >> 8 has its low byte set only for x == 0.
  const auto zero = static_cast<std::uint8_t>(((unsigned{a} - 1U) >> 8) | ((unsigned{b} - 1U) >> 8));
  return product & static_cast<std::uint8_t>(~zero);
}

std::uint8_t inv(std::uint8_t a) {
  if (a == 0) throw std::domain_error("gf256::inv: zero has no inverse");
  std::uint8_t result = 1;
  std::uint8_t base = a;
  for (unsigned e = 254; e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

std::uint8_t alpha_pow(std::size_t e) noexcept { return log_tables().exp[e % kGroupOrder]; }

EncodeTable EncodeTable::build(std::span<const std::uint8_t> generator) {
  EncodeTable table;
  table.rows_.resize(generator.size());
  for (std::size_t j = 0; j < generator.size(); ++j) {
    for (std::size_t x = 0; x < 256; ++x) table.rows_[j][x] = mul(generator[j], static_cast<std::uint8_t>(x));
  }
  return table;
}

SyndromeTables build_syndrome_tables() {
  SyndromeTables t{};
  for (std::size_t p = 0; p < kGroupOrder; ++p) {
    const std::uint8_t a = alpha_pow(p);
    for (std::uint8_t v = 0; v < 16; ++v) {
      t.hi[p][v] = mul(a, static_cast<std::uint8_t>(v << 4));
      t.lo[p][v] = mul(a, v);
    }
  }
  return t;
}

const SyndromeTables& syndrome_tables() {
  static const SyndromeTables tables = build_syndrome_tables();
  return tables;
}

}  // namespace hqc::gf256
