#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hqc::keccak {

inline constexpr std::size_t kLanes = 25;
inline constexpr std::size_t kRounds = 24;
/// SHAKE256 rate in bytes (1600 - 2*256 bits).
inline constexpr std::size_t kRate = 136;

using State = std::array<std::uint64_t, kLanes>;

/// Keccak-f[1600], 24 rounds, in place.
void permute(State& state) noexcept;

/// Four independent states in lane-interleaved layout: lanes[i][j] is lane i
/// of instance j. Equivalent to four calls to permute().
struct StateX4 {
  alignas(32) std::array<std::array<std::uint64_t, 4>, kLanes> lanes{};
};
void permute_x4(StateX4& state) noexcept;

/// Incremental SHAKE256 sponge. Bytes are absorbed one rate position at a
/// time; this is the reference staging that the one-shot path must match.
class Shake256 {
 public:
  enum class Phase { absorbing, squeezing };

  void absorb(std::span<const std::uint8_t> data);
  /// Appends the SHAKE padding and switches to squeezing. Idempotent.
  void finalize() noexcept;
  /// Squeezes the next out.size() bytes; finalizes first if still absorbing.
  void squeeze(std::span<std::uint8_t> out);

  [[nodiscard]] Phase phase() const noexcept { return phase_; }
  [[nodiscard]] std::size_t rate_offset() const noexcept { return offset_; }
  [[nodiscard]] const State& lanes() const noexcept { return state_; }

 private:
  State state_{};
  std::size_t offset_ = 0;
  Phase phase_ = Phase::absorbing;
};

/// One-shot SHAKE256 with fused absorb/squeeze: full blocks are XORed as
/// whole lanes straight from the input and squeezed lanes are written
/// straight to the output.
void shake256(std::span<const std::uint8_t> input, std::span<std::uint8_t> out) noexcept;
[[nodiscard]] std::vector<std::uint8_t> shake256(std::span<const std::uint8_t> input, std::size_t out_len);

struct BatchRequest {
  std::span<const std::uint8_t> input;
  std::size_t out_len = 0;
};

/// Element-wise identical to shake256() on each request. Requests are
/// grouped four at a time and advanced in lockstep; steps where all four
/// members need a permutation use permute_x4().
[[nodiscard]] std::vector<std::vector<std::uint8_t>> shake_batch(std::span<const BatchRequest> requests);

}  // namespace hqc::keccak
