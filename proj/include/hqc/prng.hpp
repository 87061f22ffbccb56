#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hqc/keccak.hpp"
#include "hqc/params.hpp"
#include "hqc/ring.hpp"

namespace hqc {

/// Trailing domain-separation byte appended to every SHAKE256 input.
enum class DomainTag : std::uint8_t {
  g = 0x01,     // encryption-seed derivation
  h = 0x02,     // message derivation
  k = 0x03,     // shared-secret derivation
  prng = 0x04,  // seed expansion
};

/// shake256(parts[0] || ... || parts[m-1] || tag, out_len).
[[nodiscard]] std::vector<std::uint8_t> derive(DomainTag tag, std::initializer_list<std::span<const std::uint8_t>> parts,
                                               std::size_t out_len);

/// Deterministic byte stream: SHAKE256(seed || tag) squeezed incrementally.
class Prng {
 public:
  explicit Prng(std::span<const std::uint8_t> seed, DomainTag tag = DomainTag::prng);

  void fill(std::span<std::uint8_t> out);
  [[nodiscard]] std::vector<std::uint8_t> bytes(std::size_t count);
  [[nodiscard]] std::uint64_t emitted() const noexcept { return emitted_; }

 private:
  keccak::Shake256 sponge_;
  std::uint64_t emitted_ = 0;
};

/// Uniform ring element from ceil(n/8) PRNG bytes; bits >= n cleared.
[[nodiscard]] RingElement sample_dense(Prng& prng, const ParamSet& params);
[[nodiscard]] RingElement sample_dense(Prng& prng, std::size_t n);

/// Exactly `weight` distinct positions in [0, n), sorted. Consumes exactly
/// 4 * weight PRNG bytes; control flow does not depend on the drawn values.
[[nodiscard]] SparseVector sample_fixed_weight(Prng& prng, std::size_t weight, const ParamSet& params);
[[nodiscard]] SparseVector sample_fixed_weight(Prng& prng, std::size_t weight, std::size_t n);

}  // namespace hqc
