#include <algorithm>
#include <random>
#include <string>

#include "bench.hpp"
#include "hqc/codec.hpp"
#include "hqc/gf256.hpp"
#include "hqc/kem.hpp"
#include "hqc/keccak.hpp"
#include "hqc/oracle/oracle.hpp"
#include "hqc/prng.hpp"

namespace hqc::bench {
namespace {

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(std::stoi(std::string(hex.substr(2 * i, 2)), nullptr, 16));
  return out;
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t len) {
  std::vector<std::uint8_t> out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

SuiteResult shake_vectors() {
  struct Vector {
    std::vector<std::uint8_t> input;
    std::string_view expected;
  };
  const std::vector<Vector> vectors = {
      {{}, "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f"},
      {{'a', 'b', 'c'},
       "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739"
       "d5a15bef186a5386c75744c0527e1faa9f8726e462a12a4feb06bd8801e751e4"},
      {std::vector<std::uint8_t>(200, 0xA3), "cd8a920ed141aa0407a22d59288652e9d9f1a7ee0c1e7c1ca699424da84a904d"},
  };
  std::size_t failed = 0;
  for (const auto& v : vectors) {
    const auto expected = from_hex(v.expected);
    if (keccak::shake256(v.input, expected.size()) != expected) ++failed;
    keccak::Shake256 sponge;
    sponge.absorb(v.input);
    std::vector<std::uint8_t> out(expected.size());
    sponge.squeeze(out);
    if (out != expected) ++failed;
  }
  return {"shake256_vectors", "-", failed == 0, std::to_string(vectors.size()) + " vectors, fused and incremental"};
}

SuiteResult shake_batch_differential() {
  std::mt19937_64 rng(7);
  std::size_t mismatches = 0;
  std::size_t requests = 0;
  for (std::size_t count = 1; count <= 8; ++count) {
    std::vector<std::vector<std::uint8_t>> inputs;
    std::vector<keccak::BatchRequest> batch;
    for (std::size_t i = 0; i < count; ++i) inputs.push_back(random_bytes(rng, rng() % 300));
    for (std::size_t i = 0; i < count; ++i) batch.push_back({inputs[i], 1 + rng() % 400});
    if (keccak::shake_batch(batch) != oracle::scalar_shake_batch(batch)) ++mismatches;
    requests += count;
  }
  return {"shake_batch_differential", "-", mismatches == 0, std::to_string(requests) + " requests in batches of 1..8"};
}

SuiteResult gf_mul_exhaustive() {
  std::size_t mismatches = 0;
  for (unsigned a = 0; a < 256; ++a) {
    for (unsigned b = 0; b < 256; ++b) {
      const auto x = static_cast<std::uint8_t>(a);
      const auto y = static_cast<std::uint8_t>(b);
      if (gf256::mul(x, y) != oracle::naive_gf_mul(x, y)) ++mismatches;
    }
  }
  return {"gf_mul_exhaustive", "-", mismatches == 0, "65536 pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 256 single-byte messages (each value at the first and last message byte)
// plus random ones.
std::vector<std::vector<std::uint8_t>> rs_messages(const ParamSet& p, std::mt19937_64& rng, std::size_t random) {
  std::vector<std::vector<std::uint8_t>> out;
  for (unsigned v = 0; v < 256; ++v) {
    std::vector<std::uint8_t> m(p.rs_k, 0);
    m.front() = static_cast<std::uint8_t>(v);
    out.push_back(m);
    std::fill(m.begin(), m.end(), 0);
    m.back() = static_cast<std::uint8_t>(v);
    out.push_back(m);
  }
  for (std::size_t i = 0; i < random; ++i) out.push_back(random_bytes(rng, p.rs_k));
  return out;
}

SuiteResult rs_encode_differential(const ParamSet& p, bool corrupt) {
  gf256::EncodeTable table = codec::encode_table(p);
  if (corrupt) table.corrupt_entry(0, 0x01, 0x01);
  std::mt19937_64 rng(11);
  std::size_t mismatches = 0;
  const auto messages = rs_messages(p, rng, 100);
  for (const auto& m : messages) {
    if (codec::rs_encode_with(m, p, table) != oracle::naive_rs_encode(m, p)) ++mismatches;
  }
  std::string detail = std::to_string(messages.size()) + " messages, " + std::to_string(mismatches) + " mismatches";
  if (corrupt) detail += " (corrupted table)";
  return {"rs_encode_differential", std::string(p.name), mismatches == 0, detail};
}

SuiteResult rs_syndromes_differential(const ParamSet& p) {
  std::mt19937_64 rng(13);
  std::size_t mismatches = 0;
  std::size_t nonzero = 0;
  const auto messages = rs_messages(p, rng, 100);
  for (const auto& m : messages) {
    const auto word = oracle::naive_rs_encode(m, p);
    const auto syn = codec::rs_syndromes(word, p);
    if (std::any_of(syn.begin(), syn.end(), [](std::uint8_t s) { return s != 0; })) ++nonzero;
    auto received = random_bytes(rng, p.rs_n1);
    if (codec::rs_syndromes(received, p) != oracle::naive_rs_syndromes(received, p)) ++mismatches;
  }
  return {"rs_syndromes_differential", std::string(p.name), mismatches == 0 && nonzero == 0,
          std::to_string(messages.size()) + " words, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(nonzero) + " codewords with nonzero syndromes"};
}

SuiteResult ring_differential(const ParamSet& p, std::size_t trials) {
  const std::vector<std::uint8_t> seed = {'r', 'i', 'n', 'g', static_cast<std::uint8_t>(p.level)};
  Prng prng(seed);
  std::size_t mismatches = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t w = t % 2 == 0 ? p.omega : p.omega_r;
    const SparseVector s = sample_fixed_weight(prng, w, p);
    const RingElement d = sample_dense(prng, p);
    const RingElement expected = oracle::naive_ring_mul(to_dense(s), d);
    if (sparse_dense_mul(s, d) != expected) ++mismatches;
    if (dense_mul(to_dense(s), d) != expected) ++mismatches;
    if (mul(s, d) != expected) ++mismatches;
  }
  return {"ring_differential", std::string(p.name), mismatches == 0,
          std::to_string(trials) + " products x 3 kernels, " + std::to_string(mismatches) + " mismatches"};
}

SuiteResult kem_roundtrip(const ParamSet& p, std::size_t trials) {
  const std::vector<std::uint8_t> seed = {'k', 'e', 'm', static_cast<std::uint8_t>(p.level)};
  Prng prng(seed);
  std::size_t failures = 0;
  std::size_t accepted_tampered = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const kem::KeyPair kp = kem::keygen(prng.bytes(kSeedBytes), p);
    const kem::Encapsulation enc = kem::encap(kp.pk, prng.bytes(kSeedBytes), p);
    if (kem::decap(kp.sk, enc.ct, p) != enc.key) ++failures;
    kem::Ciphertext tampered = enc.ct;
    tampered.v[t % tampered.v.size()] ^= 0x01;
    if (kem::decap(kp.sk, tampered, p) == enc.key) ++accepted_tampered;
  }
  return {"kem_roundtrip", std::string(p.name), failures == 0 && accepted_tampered == 0,
          std::to_string(trials) + " round trips, " + std::to_string(failures) + " failures, " +
              std::to_string(accepted_tampered) + " tampered ciphertexts accepted"};
}

}  // namespace

std::vector<SuiteResult> self_test(const SelfTestOptions& options) {
  std::vector<SuiteResult> results;
  results.push_back(shake_vectors());
  results.push_back(shake_batch_differential());
  results.push_back(gf_mul_exhaustive());
  for (const Level level : options.levels) {
    const ParamSet& p = get_params(level);
    results.push_back(rs_encode_differential(p, options.corrupt_encode_table));
    results.push_back(rs_syndromes_differential(p));
    results.push_back(ring_differential(p, options.ring_trials));
    results.push_back(kem_roundtrip(p, options.kem_trials));
  }
  return results;
}

}  // namespace hqc::bench
