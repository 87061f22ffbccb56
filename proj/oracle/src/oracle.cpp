#include "hqc/oracle/oracle.hpp"

#include <stdexcept>

namespace hqc::oracle {

RingElement naive_ring_mul(const RingElement& a, const RingElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("naive_ring_mul: ring length mismatch");
  const std::size_t n = a.n();
  std::vector<std::size_t> b_bits;
  for (std::size_t j = 0; j < n; ++j)
    if (b.bit(j)) b_bits.push_back(j);

  RingElement r = RingElement::with_length(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a.bit(i)) continue;
    for (const std::size_t j : b_bits) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      r.flip_bit(k);
    }
  }
  return r;
}

RingElement naive_cyclic_shift(const RingElement& a, std::size_t shift) {
  if (shift >= a.n()) throw std::invalid_argument("naive_cyclic_shift: shift out of range");
  RingElement r = RingElement::with_length(a.n());
  for (std::size_t j = 0; j < a.n(); ++j) r.set_bit((j + shift) % a.n(), a.bit(j));
  return r;
}

std::uint8_t naive_gf_mul(std::uint8_t a, std::uint8_t b) noexcept {
  std::uint16_t product = 0;
  for (unsigned i = 0; i < 8; ++i)
    if ((b >> i) & 1U) product ^= static_cast<std::uint16_t>(a << i);
  for (unsigned bit = 15; bit >= 8; --bit)
    if ((product >> bit) & 1U) product ^= static_cast<std::uint16_t>(0x11D << (bit - 8));
  return static_cast<std::uint8_t>(product);
}

namespace {

std::uint8_t naive_alpha_pow(std::size_t e) noexcept {
  std::uint8_t v = 1;
  for (std::size_t i = 0; i < e % 255; ++i) v = naive_gf_mul(v, 0x02);
  return v;
}

}  // namespace

std::vector<std::uint8_t> naive_rs_generator(const ParamSet& params) {
  const std::size_t r = params.rs_n1 - params.rs_k;
  // Multiply out prod (x + alpha^i), coefficients lowest degree first.
  std::vector<std::uint8_t> g{1};
  for (std::size_t i = 1; i <= r; ++i) {
    const std::uint8_t root = naive_alpha_pow(i);
    std::vector<std::uint8_t> next(g.size() + 1, 0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      next[j + 1] ^= g[j];
      next[j] ^= naive_gf_mul(g[j], root);
    }
    g = std::move(next);
  }
  g.pop_back();
  return g;
}

std::vector<std::uint8_t> naive_rs_encode(std::span<const std::uint8_t> msg, const ParamSet& params) {
  if (msg.size() != params.rs_k) throw std::invalid_argument("naive_rs_encode: wrong message length");
  const std::vector<std::uint8_t> g = naive_rs_generator(params);
  const std::size_t r = g.size();
  std::vector<std::uint8_t> reg(r, 0);
  for (const std::uint8_t byte : msg) {
    const std::uint8_t feedback = byte ^ reg[r - 1];
    for (std::size_t j = r - 1; j > 0; --j) reg[j] = reg[j - 1] ^ naive_gf_mul(g[j], feedback);
    reg[0] = naive_gf_mul(g[0], feedback);
  }
  std::vector<std::uint8_t> codeword(msg.begin(), msg.end());
  for (std::size_t i = 0; i < r; ++i) codeword.push_back(reg[r - 1 - i]);
  return codeword;
}

std::vector<std::uint8_t> naive_rs_syndromes(std::span<const std::uint8_t> received, const ParamSet& params) {
  if (received.size() != params.rs_n1) throw std::invalid_argument("naive_rs_syndromes: wrong length");
  std::vector<std::uint8_t> s(params.rs_n1 - params.rs_k);
  for (std::size_t i = 1; i <= s.size(); ++i) {
    const std::uint8_t x = naive_alpha_pow(i);
    // received[0] is the highest-degree coefficient.
    std::uint8_t acc = 0;
    for (const std::uint8_t c : received) acc = naive_gf_mul(acc, x) ^ c;
    s[i - 1] = acc;
  }
  return s;
}

std::vector<std::vector<std::uint8_t>> scalar_shake_batch(std::span<const keccak::BatchRequest> requests) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(requests.size());
  for (const auto& r : requests) {
    keccak::Shake256 sponge;
    for (const std::uint8_t b : r.input) sponge.absorb({&b, 1});
    std::vector<std::uint8_t> digest(r.out_len);
    for (auto& b : digest) sponge.squeeze({&b, 1});
    out.push_back(std::move(digest));
  }
  return out;
}

namespace {

RingElement baseline_mul(const SparseVector& sparse, const RingElement& dense, std::size_t /*threshold*/) {
  return naive_ring_mul(to_dense(sparse), dense);
}

}  // namespace

const Backend& baseline_backend() noexcept {
  static const Backend backend{"baseline", &baseline_mul, &naive_rs_encode, &naive_rs_syndromes};
  return backend;
}

}  // namespace hqc::oracle
