#include "hqc/keccak.hpp"

#include <bit>
#include <cstring>
#include <utility>

#include "hqc/instrument.hpp"
#include "keccak_internal.hpp"

namespace hqc::keccak {

namespace {

// Lane x + 5y is rotated by kLaneRotation[x + 5y] and moves to y + 5 * ((2x + 3y) % 5).
constexpr std::array<int, 25> kLaneRotation = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                                               25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

constexpr std::size_t pi_target(std::size_t i) { return i / 5 + 5 * ((2 * (i % 5) + 3 * (i / 5)) % 5); }

template <std::size_t... I>
inline void round_unrolled(std::uint64_t* a, std::uint64_t rc, std::index_sequence<I...>) noexcept {
  std::uint64_t c[5], d[5], b[25];
  ((I < 5 ? void(c[I % 5] = a[I % 5] ^ a[I % 5 + 5] ^ a[I % 5 + 10] ^ a[I % 5 + 15] ^ a[I % 5 + 20]) : void()), ...);
  ((I < 5 ? void(d[I % 5] = c[(I + 4) % 5] ^ std::rotl(c[(I + 1) % 5], 1)) : void()), ...);
  ((b[pi_target(I)] = std::rotl(a[I] ^ d[I % 5], kLaneRotation[I])), ...);
  ((a[I] = b[I] ^ (~b[I / 5 * 5 + (I + 1) % 5] & b[I / 5 * 5 + (I + 2) % 5])), ...);
  a[0] ^= rc;
}

}  // namespace

void permute(State& a) noexcept {
  instrument::emit(instrument::Event::keccak_permute, 1);
  for (std::size_t round = 0; round < kRounds; ++round) {
    round_unrolled(a.data(), detail::kRoundConstants[round], std::make_index_sequence<25>{});
  }
}

void permute_x4(StateX4& s) noexcept {
  instrument::emit(instrument::Event::keccak_permute, 4);
  using Lane4 = std::array<std::uint64_t, 4>;
  auto& a = s.lanes;
  std::array<Lane4, 5> c{};
  for (std::size_t round = 0; round < kRounds; ++round) {
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t k = 0; k < 4; ++k)
        c[x][k] = a[x][k] ^ a[x + 5][k] ^ a[x + 10][k] ^ a[x + 15][k] ^ a[x + 20][k];
    for (std::size_t x = 0; x < 5; ++x) {
      Lane4 d;
      for (std::size_t k = 0; k < 4; ++k) d[k] = c[(x + 4) % 5][k] ^ std::rotl(c[(x + 1) % 5][k], 1);
      for (std::size_t y = 0; y < 25; y += 5)
        for (std::size_t k = 0; k < 4; ++k) a[y + x][k] ^= d[k];
    }

    Lane4 carry = a[1];
    for (std::size_t i = 0; i < 24; ++i) {
      const std::size_t j = detail::kPiLane[i];
      const Lane4 tmp = a[j];
      for (std::size_t k = 0; k < 4; ++k) a[j][k] = std::rotl(carry[k], detail::kRhoOffset[i]);
      carry = tmp;
    }

    for (std::size_t y = 0; y < 25; y += 5) {
      for (std::size_t x = 0; x < 5; ++x) c[x] = a[y + x];
      for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t k = 0; k < 4; ++k) a[y + x][k] ^= ~c[(x + 1) % 5][k] & c[(x + 2) % 5][k];
    }

    for (std::size_t k = 0; k < 4; ++k) a[0][k] ^= detail::kRoundConstants[round];
  }
}

void Shake256::absorb(std::span<const std::uint8_t> data) {
  if (phase_ != Phase::absorbing) {
    throw std::logic_error("Shake256::absorb after finalize");
  }
  for (const std::uint8_t byte : data) {
    detail::xor_byte(state_, offset_, byte);
    if (++offset_ == kRate) {
      permute(state_);
      offset_ = 0;
    }
  }
}

void Shake256::finalize() noexcept {
  if (phase_ == Phase::squeezing) return;
  detail::xor_byte(state_, offset_, detail::kShakePad);
  detail::xor_byte(state_, kRate - 1, 0x80);
  permute(state_);
  offset_ = 0;
  phase_ = Phase::squeezing;
}

void Shake256::squeeze(std::span<std::uint8_t> out) {
  finalize();
  while (!out.empty()) {
    if (offset_ == kRate) {
      permute(state_);
      offset_ = 0;
    }
    if (offset_ == 0 && out.size() >= kRate) {
      detail::store_block(state_, out.first(kRate));
      out = out.subspan(kRate);
      offset_ = kRate;
      continue;
    }
    out[0] = detail::get_byte(state_, offset_++);
    out = out.subspan(1);
  }
}

void shake256(std::span<const std::uint8_t> input, std::span<std::uint8_t> out) noexcept {
  State state{};
  while (input.size() >= kRate) {
    detail::xor_block(state, input.first(kRate));
    permute(state);
    input = input.subspan(kRate);
  }
  detail::xor_tail(state, input);
  permute(state);

  while (out.size() > kRate) {
    detail::store_block(state, out.first(kRate));
    permute(state);
    out = out.subspan(kRate);
  }
  detail::store_block(state, out);
}

std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t out_len) {
  std::vector<std::uint8_t> out(out_len);
  shake256(input, out);
  return out;
}

}  // namespace hqc::keccak
