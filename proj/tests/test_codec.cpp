#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "hqc/codec.hpp"
#include "hqc/oracle/oracle.hpp"
#include "test_support.hpp"

using namespace hqc;

namespace {

// Corrupts `count` distinct positions of `data` with nonzero error values.
void corrupt_symbols(std::mt19937_64& rng, std::vector<std::uint8_t>& data, std::size_t count) {
  std::vector<std::size_t> pos(data.size());
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  for (std::size_t i = 0; i < count; ++i) data[pos[i]] ^= static_cast<std::uint8_t>(1 + rng() % 255);
}

void flip_bits(std::mt19937_64& rng, codec::RmBlock& block, std::size_t count) {
  std::vector<std::size_t> pos(block.bits);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  for (std::size_t i = 0; i < count; ++i) block.flip(pos[i]);
}

std::size_t block_weight(const codec::RmBlock& b) {
  std::size_t w = 0;
  for (const auto word : b.words) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

}  // namespace

TEST_CASE("rs generator") {
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const auto g = codec::rs_generator(p);
    CHECK(g.size() == p.rs_parity());
    CHECK(g == oracle::naive_rs_generator(p));
    // Each alpha^i, i = 1..2delta, is a root of the monic polynomial.
    for (std::size_t i = 1; i <= g.size(); ++i) {
      const std::uint8_t x = gf256::alpha_pow(i);
      std::uint8_t acc = 1;
      for (std::size_t j = g.size(); j-- > 0;) acc = gf256::mul(acc, x) ^ g[j];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("rs_encode") {
  std::mt19937_64 rng(31);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    CHECK(codec::rs_encode(std::vector<std::uint8_t>(p.rs_k, 0), p) == std::vector<std::uint8_t>(p.rs_n1, 0));
    CHECK_THROWS_AS((void)codec::rs_encode(std::vector<std::uint8_t>(p.rs_k + 1), p), std::invalid_argument);

    for (int trial = 0; trial < 200; ++trial) {
      const auto msg = test::random_bytes(rng, p.rs_k);
      const auto cw = codec::rs_encode(msg, p);
      REQUIRE(cw.size() == p.rs_n1);
      CHECK(std::equal(msg.begin(), msg.end(), cw.begin()));
      CHECK(cw == oracle::naive_rs_encode(msg, p));
      const auto syn = codec::rs_syndromes(cw, p);
      CHECK(std::all_of(syn.begin(), syn.end(), [](std::uint8_t s) { return s == 0; }));
    }
  }
  CHECK(codec::rs_encode(std::vector<std::uint8_t>(16, 1), get_params(Level::hqc1)).size() == 46);
}

TEST_CASE("rs_encode with a damaged table diverges from the reference") {
  const ParamSet& p = get_params(Level::hqc1);
  gf256::EncodeTable table = codec::encode_table(p);
  table.corrupt_entry(3, 0x01, 0x40);
  std::vector<std::uint8_t> msg(p.rs_k, 0);
  msg[0] = 0x01;
  CHECK(codec::rs_encode_with(msg, p, table) != oracle::naive_rs_encode(msg, p));
}

TEST_CASE("rs_syndromes") {
  std::mt19937_64 rng(32);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    CHECK(codec::rs_syndromes(std::vector<std::uint8_t>(p.rs_n1, 0), p) ==
          std::vector<std::uint8_t>(p.rs_parity(), 0));
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = test::random_bytes(rng, p.rs_n1);
      const auto b = test::random_bytes(rng, p.rs_n1);
      const auto sa = codec::rs_syndromes(a, p);
      CHECK(sa == oracle::naive_rs_syndromes(a, p));

      std::vector<std::uint8_t> ab(p.rs_n1);
      for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = a[i] ^ b[i];
      const auto sb = codec::rs_syndromes(b, p);
      const auto sab = codec::rs_syndromes(ab, p);
      for (std::size_t i = 0; i < sab.size(); ++i) CHECK(sab[i] == (sa[i] ^ sb[i]));
    }
  }
  const ParamSet& p1 = get_params(Level::hqc1);
  // Table lookups replace every non-trivial multiply: 2*delta rows x (n1 - 1) terms.
  CHECK(p1.rs_parity() * (p1.rs_n1 - 1) == 1350);
}

TEST_CASE("rs_decode") {
  std::mt19937_64 rng(33);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const auto msg = test::random_bytes(rng, p.rs_k);
    CHECK(codec::rs_decode(codec::rs_encode(msg, p), p) == msg);

    for (int trial = 0; trial < 200; ++trial) {
      const auto m = test::random_bytes(rng, p.rs_k);
      auto cw = codec::rs_encode(m, p);
      corrupt_symbols(rng, cw, 1 + rng() % p.rs_delta);
      REQUIRE(codec::rs_decode(cw, p) == m);
    }
    for (int trial = 0; trial < 20; ++trial) {
      auto cw = codec::rs_encode(test::random_bytes(rng, p.rs_k), p);
      corrupt_symbols(rng, cw, p.rs_delta + 3);
      CHECK(codec::rs_decode(cw, p).size() == p.rs_k);
    }
  }
}

TEST_CASE("rs_decode failure returns the received message bytes") {
  const ParamSet& p = get_params(Level::hqc1);
  std::mt19937_64 rng(34);
  int unchanged = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto cw = codec::rs_encode(test::random_bytes(rng, p.rs_k), p);
    corrupt_symbols(rng, cw, p.rs_n1 / 2);
    const auto out = codec::rs_decode(cw, p);
    unchanged += std::equal(out.begin(), out.end(), cw.begin());
  }
  // Heavy corruption almost always yields a locator whose roots do not
  // match its degree.
  CHECK(unchanged > 40);
}

TEST_CASE("rm_encode") {
  const ParamSet& p1 = get_params(Level::hqc1);
  CHECK(block_weight(codec::rm_encode(0x00, p1)) == 0);
  CHECK(codec::rm_encode(0x00, p1).bits == 384);
  CHECK(codec::rm_encode(0x00, get_params(Level::hqc3)).bits == 640);

  for (const ParamSet& p : all_params()) {
    for (unsigned b = 1; b < 256; ++b) {
      const auto block = codec::rm_encode(static_cast<std::uint8_t>(b), p);
      const std::size_t w = block_weight(block);
      CHECK((w == 64 * p.rm_mult || w == 128 * p.rm_mult));
      // Copies are identical.
      for (std::size_t c = 1; c < p.rm_mult; ++c) {
        CHECK(block.words[2 * c] == block.words[0]);
        CHECK(block.words[2 * c + 1] == block.words[1]);
      }
    }
  }

  // Generator-matrix enumeration: bit p = b7 + sum_k b_k * p_k.
  for (unsigned b = 0; b < 256; ++b) {
    const auto block = codec::rm_encode(static_cast<std::uint8_t>(b), p1);
    for (unsigned pos = 0; pos < 128; ++pos) {
      const unsigned expected = ((b >> 7) ^ std::popcount(pos & b & 0x7FU)) & 1U;
      REQUIRE(block.bit(pos) == (expected == 1));
    }
  }
}

TEST_CASE("rm_decode") {
  std::mt19937_64 rng(35);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    for (unsigned b = 0; b < 256; ++b) {
      CHECK(codec::rm_decode(codec::rm_encode(static_cast<std::uint8_t>(b), p), p) == b);
    }
    codec::RmBlock zero;
    zero.bits = p.rm_n2;
    CHECK(codec::rm_decode(zero, p) == 0);

    const std::size_t radius = (p.rm_d() - 1) / 2;
    for (int trial = 0; trial < 300; ++trial) {
      const auto b = static_cast<std::uint8_t>(rng());
      auto block = codec::rm_encode(b, p);
      flip_bits(rng, block, radius);
      REQUIRE(codec::rm_decode(block, p) == b);
    }
  }
}

TEST_CASE("rm_decode accumulates copies") {
  // Every copy decodes to b on its own, so the sum does too.
  const ParamSet& p = get_params(Level::hqc5);
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = static_cast<std::uint8_t>(rng());
    auto block = codec::rm_encode(b, p);
    for (std::size_t c = 0; c < p.rm_mult; ++c) {
      for (int f = 0; f < 31; ++f) block.flip(128 * c + rng() % 128);
    }
    CHECK(codec::rm_decode(block, p) == b);
  }
}

TEST_CASE("concatenated code") {
  std::mt19937_64 rng(37);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const std::vector<std::uint8_t> zero(p.rs_k, 0);
    CHECK(codec::code_encode(zero, p) == RingElement(p));
    CHECK(codec::code_decode(RingElement(p), p) == zero);
    CHECK_THROWS_AS((void)codec::code_encode(std::vector<std::uint8_t>(p.rs_k - 1), p), std::invalid_argument);

    for (int trial = 0; trial < 50; ++trial) {
      const auto m = test::random_bytes(rng, p.rs_k);
      const RingElement c = codec::code_encode(m, p);
      for (std::size_t i = p.code_bits(); i < p.n; ++i) REQUIRE_FALSE(c.bit(i));
      CHECK(codec::code_decode(c, p) == m);
    }
  }
  CHECK(get_params(Level::hqc1).code_bits() == 17664);
}

TEST_CASE("table and reference backends agree through the codec") {
  std::mt19937_64 rng(38);
  const ParamSet& p = get_params(Level::hqc3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = test::random_bytes(rng, p.rs_k);
    const RingElement c = codec::code_encode(m, p);
    CHECK(c == codec::code_encode(m, p, oracle::baseline_backend()));
    CHECK(codec::code_decode(c, p, oracle::baseline_backend()) == m);
  }
}
