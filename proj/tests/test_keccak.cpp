#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "hqc/keccak.hpp"
#include "hqc/oracle/oracle.hpp"
#include "hqc/prng.hpp"
#include "test_support.hpp"

using namespace hqc;

namespace {

std::string hex(std::span<const std::uint8_t> bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (const auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

std::vector<std::uint8_t> pattern(std::size_t len) {
  std::vector<std::uint8_t> m(len);
  for (std::size_t i = 0; i < len; ++i) m[i] = static_cast<std::uint8_t>(i % 251);
  return m;
}

}  // namespace

TEST_CASE("Keccak-f[1600] on the zero state") {
  keccak::State s{};
  keccak::permute(s);
  CHECK(s[0] == 0xF1258F7940E1DDE7ULL);
  CHECK(s[1] == 0x84D5CCF933C0478AULL);
}

TEST_CASE("SHAKE256 known answers") {
  CHECK(hex(keccak::shake256({}, 32)) == "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
  CHECK(keccak::shake256({}, 0).empty());

  const std::string abc = "abc";
  const std::vector<std::uint8_t> abc_bytes(abc.begin(), abc.end());
  CHECK(hex(keccak::shake256(abc_bytes, 64)) ==
        "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739"
        "d5a15bef186a5386c75744c0527e1faa9f8726e462a12a4feb06bd8801e751e4");

  const std::vector<std::uint8_t> a3(200, 0xA3);
  CHECK(hex(keccak::shake256(a3, 32)) == "cd8a920ed141aa0407a22d59288652e9d9f1a7ee0c1e7c1ca699424da84a904d");

  CHECK(hex(keccak::shake256(pattern(135), 48)) ==
        "c45dae624ad8a2f5aa7bac9d7557737fd91c96eedb70a6be5574d57a844eade07f4056bf081a1098101cea8132188c42");
  CHECK(hex(keccak::shake256(pattern(136), 48)) ==
        "b7ff4073b3f5a8eabd6e17705ca7f6761a31058f9df781a6a47e3a3063b9d67a757e8dbf043dac48d2154e46d59c0b9e");
  CHECK(hex(keccak::shake256(pattern(137), 48)) ==
        "01d90952c642a5eb2a8fc9d713f843a45d7ac05132dddcb2efc9bebc27e37bcbe42130c36f3540250ab11796980e7736");
  CHECK(hex(keccak::shake256(pattern(272), 48)) ==
        "e3299fa992163e7ffc875aff708dac93d2157e9b4ccaa2a13ba1ca4ef0b40f29a8922462cee9739430c22a70d36a91fd");

  const auto long_out = keccak::shake256({}, 300);
  CHECK(hex(std::span(long_out).subspan(268)) == "73cdcd0fab882c45755feb3aed96d477ff96390bf9a66d1368b208e21f7c10d0");
}

TEST_CASE("split squeezes equal one squeeze") {
  std::mt19937_64 rng(1);
  for (std::size_t len : {0UL, 1UL, 135UL, 136UL, 137UL, 500UL}) {
    const auto msg = test::random_bytes(rng, len);
    keccak::Shake256 sponge;
    sponge.absorb(msg);
    std::vector<std::uint8_t> a(16), b(16);
    sponge.squeeze(a);
    sponge.squeeze(b);
    a.insert(a.end(), b.begin(), b.end());
    CHECK(a == keccak::shake256(msg, 32));
  }
}

TEST_CASE("fused one-shot path equals incremental sponge") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto msg = test::random_bytes(rng, rng() % 700);
    const std::size_t out_len = rng() % 600;
    keccak::Shake256 sponge;
    std::size_t pos = 0;
    while (pos < msg.size()) {
      const std::size_t chunk = std::min<std::size_t>(1 + rng() % 200, msg.size() - pos);
      sponge.absorb(std::span(msg).subspan(pos, chunk));
      pos += chunk;
    }
    std::vector<std::uint8_t> out(out_len);
    pos = 0;
    while (pos < out_len) {
      const std::size_t chunk = std::min<std::size_t>(1 + rng() % 300, out_len - pos);
      sponge.squeeze(std::span(out).subspan(pos, chunk));
      pos += chunk;
    }
    CHECK(out == keccak::shake256(msg, out_len));
  }
}

TEST_CASE("sponge state bookkeeping") {
  keccak::Shake256 sponge;
  CHECK(sponge.phase() == keccak::Shake256::Phase::absorbing);
  const std::vector<std::uint8_t> block(keccak::kRate + 3, 7);
  sponge.absorb(block);
  CHECK(sponge.rate_offset() == 3);
  std::vector<std::uint8_t> out(10);
  sponge.squeeze(out);
  CHECK(sponge.phase() == keccak::Shake256::Phase::squeezing);
  CHECK(sponge.rate_offset() == 10);
  CHECK_THROWS_AS(sponge.absorb(block), std::logic_error);
}

TEST_CASE("permute_x4 equals four scalar permutations") {
  std::mt19937_64 rng(3);
  std::array<keccak::State, 4> scalar{};
  keccak::StateX4 wide;
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < keccak::kLanes; ++i) wide.lanes[i][k] = scalar[k][i] = rng();
  keccak::permute_x4(wide);
  for (auto& s : scalar) keccak::permute(s);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < keccak::kLanes; ++i) CHECK(wide.lanes[i][k] == scalar[k][i]);
}

TEST_CASE("shake_batch matches the scalar path") {
  std::mt19937_64 rng(4);
  SUBCASE("batch of one") {
    const auto msg = test::random_bytes(rng, 77);
    const keccak::BatchRequest req{msg, 64};
    CHECK(keccak::shake_batch(std::span(&req, 1))[0] == keccak::shake256(msg, 64));
  }
  SUBCASE("batch of four random inputs") {
    std::vector<std::vector<std::uint8_t>> msgs;
    std::vector<keccak::BatchRequest> reqs;
    for (int i = 0; i < 4; ++i) msgs.push_back(test::random_bytes(rng, 100 + 50 * i));
    for (int i = 0; i < 4; ++i) reqs.push_back({msgs[i], static_cast<std::size_t>(32 + 100 * i)});
    CHECK(keccak::shake_batch(reqs) == oracle::scalar_shake_batch(reqs));
  }
  SUBCASE("empty inputs give the empty-string digest") {
    std::vector<keccak::BatchRequest> reqs(5, keccak::BatchRequest{{}, 32});
    for (const auto& out : keccak::shake_batch(reqs))
      CHECK(hex(out) == "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
  }
  SUBCASE("mixed lengths, zero-length outputs") {
    std::vector<std::vector<std::uint8_t>> msgs;
    std::vector<keccak::BatchRequest> reqs;
    for (int i = 0; i < 11; ++i) msgs.push_back(test::random_bytes(rng, rng() % 600));
    for (int i = 0; i < 11; ++i) reqs.push_back({msgs[i], static_cast<std::size_t>(rng() % 400)});
    reqs[3].out_len = 0;
    CHECK(keccak::shake_batch(reqs) == oracle::scalar_shake_batch(reqs));
  }
}

TEST_CASE("derive") {
  std::mt19937_64 rng(5);
  const auto m = test::random_bytes(rng, 16);
  CHECK(derive(DomainTag::g, {m}, 32) == derive(DomainTag::g, {m}, 32));
  CHECK(derive(DomainTag::h, {m}, 64).size() == 64);

  std::vector<std::uint8_t> with_tag = m;
  with_tag.push_back(0x01);
  CHECK(derive(DomainTag::g, {m}, 40) == keccak::shake256(with_tag, 40));

  const auto a = test::random_bytes(rng, 5);
  const auto b = test::random_bytes(rng, 9);
  std::vector<std::uint8_t> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  CHECK(derive(DomainTag::k, {a, b}, 32) == derive(DomainTag::k, {ab}, 32));

  int collisions = 0;
  for (int i = 0; i < 100; ++i) {
    const auto msg = test::random_bytes(rng, 16);
    collisions += derive(DomainTag::g, {msg}, 32) == derive(DomainTag::k, {msg}, 32);
  }
  CHECK(collisions == 0);
}

TEST_CASE("prng streams") {
  std::mt19937_64 rng(6);
  const auto seed = test::random_bytes(rng, 32);
  Prng a(seed), b(seed);
  CHECK(a.bytes(300) == b.bytes(300));
  CHECK(a.emitted() == 300);

  const auto before = a.emitted();
  CHECK(a.bytes(0).empty());
  CHECK(a.emitted() == before);

  Prng split(seed), whole(seed);
  auto first = split.bytes(100);
  const auto second = split.bytes(57);
  first.insert(first.end(), second.begin(), second.end());
  CHECK(first == whole.bytes(157));

  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = test::random_bytes(rng, 32);
    Prng p(s, DomainTag::prng);
    Prng q(s, DomainTag::g);
    equal += p.bytes(32) == q.bytes(32);
  }
  CHECK(equal == 0);
}

TEST_CASE("sample_dense") {
  const ParamSet& p = get_params(Level::hqc1);
  std::mt19937_64 rng(7);
  const auto seed = test::random_bytes(rng, 32);
  Prng a(seed), b(seed);
  const RingElement x = sample_dense(a, p);
  CHECK(x == sample_dense(b, p));
  CHECK(x.padding_is_zero());

  const double mean = static_cast<double>(p.n) / 2;
  const double bound = 4 * std::sqrt(static_cast<double>(p.n) / 4);
  for (int i = 0; i < 100; ++i) {
    Prng prng(test::random_bytes(rng, 32));
    const double w = static_cast<double>(weight(sample_dense(prng, p)));
    CHECK(std::abs(w - mean) < bound);
  }
}

TEST_CASE("sample_fixed_weight") {
  const ParamSet& p = get_params(Level::hqc1);
  std::mt19937_64 rng(8);
  Prng prng(test::random_bytes(rng, 32));
  CHECK(sample_fixed_weight(prng, p.omega, p).weight() == 66);
  CHECK(sample_fixed_weight(prng, p.omega_r, p).weight() == 75);
  CHECK_THROWS_AS((void)sample_fixed_weight(prng, 0, p), std::invalid_argument);
  CHECK_THROWS_AS((void)sample_fixed_weight(prng, p.n, p), std::invalid_argument);

  SUBCASE("consumes exactly 4 bytes per position") {
    const auto before = prng.emitted();
    (void)sample_fixed_weight(prng, 75, p);
    CHECK(prng.emitted() - before == 300);
  }

  SUBCASE("distinct, in range, sorted over 10^4 vectors") {
    bool ok = true;
    for (int i = 0; i < 10000; ++i) {
      const SparseVector s = sample_fixed_weight(prng, p.omega_r, p);
      const auto idx = s.indices();
      ok = ok && idx.size() == p.omega_r && idx.back() < p.n;
      for (std::size_t j = 1; j < idx.size(); ++j) ok = ok && idx[j - 1] < idx[j];
    }
    CHECK(ok);
  }

  SUBCASE("collision resolution on a tiny ring") {
    for (int i = 0; i < 2000; ++i) {
      const SparseVector s = sample_fixed_weight(prng, 7, 8);
      CHECK(s.weight() == 7);
    }
  }

  SUBCASE("stream position is part of the state") {
    const auto seed = test::random_bytes(rng, 32);
    Prng a(seed), b(seed);
    const SparseVector sa = sample_fixed_weight(a, 66, p);
    const RingElement da = sample_dense(a, p);
    CHECK(sa == sample_fixed_weight(b, 66, p));
    CHECK(da == sample_dense(b, p));
  }
}
