#include "hqc/prng.hpp"

#include <stdexcept>

#include "hqc/ct.hpp"
#include "hqc/instrument.hpp"

namespace hqc {

std::vector<std::uint8_t> derive(DomainTag tag, std::initializer_list<std::span<const std::uint8_t>> parts,
                                 std::size_t out_len) {
  instrument::Span span(instrument::Component::shake);
  instrument::emit(instrument::Event::hash_derive, static_cast<std::uint32_t>(tag));
  std::size_t total = 1;
  for (const auto& p : parts) total += p.size();
  std::vector<std::uint8_t> input;
  input.reserve(total);
  for (const auto& p : parts) input.insert(input.end(), p.begin(), p.end());
  input.push_back(static_cast<std::uint8_t>(tag));
  return keccak::shake256(input, out_len);
}

Prng::Prng(std::span<const std::uint8_t> seed, DomainTag tag) {
  instrument::Span span(instrument::Component::shake);
  instrument::emit(instrument::Event::prng_init, static_cast<std::uint32_t>(tag));
  sponge_.absorb(seed);
  const std::uint8_t t = static_cast<std::uint8_t>(tag);
  sponge_.absorb({&t, 1});
  sponge_.finalize();
}

void Prng::fill(std::span<std::uint8_t> out) {
  instrument::Span span(instrument::Component::shake);
  sponge_.squeeze(out);
  emitted_ += out.size();
}

std::vector<std::uint8_t> Prng::bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  fill(out);
  return out;
}

RingElement sample_dense(Prng& prng, const ParamSet& params) { return sample_dense(prng, params.n); }

RingElement sample_dense(Prng& prng, std::size_t n) {
  return RingElement::load_masked(prng.bytes((n + 7) / 8), n);
}

SparseVector sample_fixed_weight(Prng& prng, std::size_t weight, const ParamSet& params) {
  return sample_fixed_weight(prng, weight, params.n);
}

SparseVector sample_fixed_weight(Prng& prng, std::size_t weight, std::size_t n) {
  if (weight == 0 || weight >= n) throw std::invalid_argument("sample_fixed_weight: weight must be in (0, n)");
  const std::vector<std::uint8_t> random = prng.bytes(4 * weight);

  // Position i is drawn from [i, n); collisions with later positions are
  // resolved by falling back to i, which no later position can hold.
  std::vector<std::uint32_t> pos(weight);
  for (std::size_t i = 0; i < weight; ++i) {
    const std::uint64_t r = std::uint64_t{random[4 * i]} | std::uint64_t{random[4 * i + 1]} << 8 |
                            std::uint64_t{random[4 * i + 2]} << 16 | std::uint64_t{random[4 * i + 3]} << 24;
    pos[i] = static_cast<std::uint32_t>(i + ((r * (n - i)) >> 32));
  }
  for (std::size_t i = weight; i-- > 0;) {
    std::uint32_t clash = 0;
    for (std::size_t j = i + 1; j < weight; ++j) clash |= ct::eq_mask(pos[i], pos[j]);
    pos[i] = ct::select(clash, static_cast<std::uint32_t>(i), pos[i]);
  }

  // Oblivious sort: fixed compare-exchange schedule.
  for (std::size_t i = 0; i + 1 < weight; ++i) {
    for (std::size_t j = 0; j + 1 < weight - i; ++j) {
      const std::uint32_t a = pos[j];
      const std::uint32_t b = pos[j + 1];
      const std::uint32_t swap = ct::lt_mask(b, a);
      pos[j] = ct::select(swap, b, a);
      pos[j + 1] = ct::select(swap, a, b);
    }
  }
  return SparseVector(std::move(pos), n);
}

}  // namespace hqc
