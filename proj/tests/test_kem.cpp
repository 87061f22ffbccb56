#include <doctest.h>

#include <random>
#include <set>

#include "hqc/codec.hpp"
#include "hqc/errors.hpp"
#include "hqc/kem.hpp"
#include "hqc/oracle/oracle.hpp"
#include "hqc/prng.hpp"
#include "test_support.hpp"

using namespace hqc;

TEST_CASE("keygen") {
  std::mt19937_64 rng(41);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const auto seed = test::random_bytes(rng, 32);
    const kem::KeyPair a = kem::keygen(seed, p);
    const kem::KeyPair b = kem::keygen(seed, p);
    CHECK(kem::serialize(a.pk) == kem::serialize(b.pk));
    CHECK(kem::serialize(a.sk) == kem::serialize(b.sk));
    CHECK(a.sk.x.weight() == p.omega);
    CHECK(a.sk.y.weight() == p.omega);
    CHECK(a.sk.sigma.size() == p.rs_k);

    const RingElement h = kem::expand_h(a.pk.seed_h, p);
    const RingElement s = add(to_dense(a.sk.x), oracle::naive_ring_mul(to_dense(a.sk.y), h));
    CHECK(s == a.pk.s);
    CHECK(a.pk.s.padding_is_zero());
  }
  CHECK(kem::keygen(std::vector<std::uint8_t>(32, 1), get_params(Level::hqc1)).sk.x.weight() == 66);
  CHECK_THROWS_AS((void)kem::keygen(std::vector<std::uint8_t>(31), get_params(Level::hqc1)), std::invalid_argument);
}

TEST_CASE("pke encrypt/decrypt") {
  std::mt19937_64 rng(42);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
    const auto m = test::random_bytes(rng, p.rs_k);
    const auto theta = test::random_bytes(rng, 32);
    const kem::Ciphertext c = kem::pke_encrypt(kp.pk, m, theta, p);
    CHECK(c == kem::pke_encrypt(kp.pk, m, theta, p));
    CHECK(c.v.size() == p.code_bytes());
    CHECK(c.u.padding_is_zero());
    CHECK(kem::pke_decrypt(kp.sk, c, p) == m);

    const kem::Ciphertext zero{RingElement(p), std::vector<std::uint8_t>(p.code_bytes(), 0)};
    CHECK(kem::pke_decrypt(kp.sk, zero, p) == std::vector<std::uint8_t>(p.rs_k, 0));

    CHECK_THROWS_AS((void)kem::pke_encrypt(kp.pk, std::vector<std::uint8_t>(p.rs_k + 1), theta, p),
                    std::invalid_argument);

    for (int trial = 0; trial < 100; ++trial) {
      const auto mt = test::random_bytes(rng, p.rs_k);
      REQUIRE(kem::pke_decrypt(kp.sk, kem::pke_encrypt(kp.pk, mt, test::random_bytes(rng, 32), p), p) == mt);
    }
  }
}

TEST_CASE("encryption noise weights") {
  const ParamSet& p = get_params(Level::hqc1);
  std::mt19937_64 rng(43);
  Prng prng(test::random_bytes(rng, 32));
  CHECK(sample_fixed_weight(prng, p.omega_r, p).weight() == 75);
  CHECK(p.omega_r == 75);
}

TEST_CASE("decoding under HQC-shaped noise") {
  // v + u*y = mG + x*r2 + r1*y + e, truncated to the code length.
  std::mt19937_64 rng(44);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const int trials = p.level == Level::hqc1 ? 10000 : 1000;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      const auto m = test::random_bytes(rng, p.rs_k);
      const SparseVector x = test::random_sparse(rng, p.n, p.omega);
      const SparseVector y = test::random_sparse(rng, p.n, p.omega);
      const SparseVector r1 = test::random_sparse(rng, p.n, p.omega_r);
      const SparseVector r2 = test::random_sparse(rng, p.n, p.omega_r);
      const SparseVector e = test::random_sparse(rng, p.n, p.omega_r);
      RingElement noisy = codec::code_encode(m, p);
      add_in_place(noisy, sparse_dense_mul(r2, to_dense(x)));
      add_in_place(noisy, sparse_dense_mul(y, to_dense(r1)));
      add_in_place(noisy, to_dense(e));
      failures += codec::code_decode(noisy, p) != m;
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("encap/decap") {
  std::mt19937_64 rng(45);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
    const auto coins = test::random_bytes(rng, 32);
    const kem::Encapsulation enc = kem::encap(kp.pk, coins, p);
    const kem::Encapsulation again = kem::encap(kp.pk, coins, p);
    CHECK(enc.ct == again.ct);
    CHECK(enc.key == again.key);
    CHECK(kem::decap(kp.sk, enc.ct, p) == enc.key);

    std::set<std::vector<std::uint8_t>> seen;
    for (int i = 0; i < 100; ++i) {
      const kem::Encapsulation e = kem::encap(kp.pk, test::random_bytes(rng, 32), p);
      seen.insert(kem::serialize(e.ct));
      REQUIRE(kem::decap(kp.sk, e.ct, p) == e.key);
    }
    CHECK(seen.size() == 100);
  }
}

TEST_CASE("implicit rejection") {
  std::mt19937_64 rng(46);
  const ParamSet& p = get_params(Level::hqc1);
  const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
  const kem::Encapsulation enc = kem::encap(kp.pk, test::random_bytes(rng, 32), p);

  kem::Ciphertext t1 = enc.ct;
  t1.u.flip_bit(rng() % p.n);
  kem::Ciphertext t2 = enc.ct;
  t2.u.flip_bit(rng() % p.n);
  if (t2 == t1) t2.v[0] ^= 1;

  const kem::SharedSecret k1 = kem::decap(kp.sk, t1, p);
  CHECK(k1 != enc.key);
  CHECK(k1 == kem::decap(kp.sk, t1, p));
  CHECK(kem::decap(kp.sk, t2, p) != k1);

  // The rejection key is K(sigma, c).
  const auto ct_bytes = kem::serialize(t1);
  const auto expected = derive(DomainTag::k, {kp.sk.sigma, ct_bytes}, kSharedSecretBytes);
  CHECK(std::equal(expected.begin(), expected.end(), k1.begin()));

  kem::Ciphertext t3 = enc.ct;
  t3.v.back() ^= 0x10;
  CHECK(kem::decap(kp.sk, t3, p) != enc.key);

  const kem::Ciphertext bad{RingElement(p), std::vector<std::uint8_t>(10)};
  CHECK_THROWS_AS((void)kem::decap(kp.sk, bad, p), std::invalid_argument);
}

TEST_CASE("serialization") {
  std::mt19937_64 rng(47);
  for (const ParamSet& p : all_params()) {
    CAPTURE(p.name);
    for (int i = 0; i < 10; ++i) {
      const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
      const auto pk_bytes = kem::serialize(kp.pk);
      const auto sk_bytes = kem::serialize(kp.sk);
      CHECK(pk_bytes.size() == p.public_key_bytes());
      CHECK(sk_bytes.size() == p.secret_key_bytes());
      CHECK(kem::deserialize_public_key(pk_bytes, p) == kp.pk);
      CHECK(kem::deserialize_secret_key(sk_bytes, p) == kp.sk);

      const kem::Encapsulation enc = kem::encap(kp.pk, test::random_bytes(rng, 32), p);
      const auto ct_bytes = kem::serialize(enc.ct);
      CHECK(ct_bytes.size() == p.ciphertext_bytes());
      CHECK(kem::deserialize_ciphertext(ct_bytes, p) == enc.ct);

      const kem::SecretKey restored = kem::deserialize_secret_key(sk_bytes, p);
      CHECK(kem::decap(restored, kem::deserialize_ciphertext(ct_bytes, p), p) == enc.key);
    }
    const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
    auto pk_bytes = kem::serialize(kp.pk);
    CHECK_THROWS_AS((void)kem::deserialize_public_key(std::span(pk_bytes).first(pk_bytes.size() - 1), p), ParseError);
    pk_bytes.back() |= 0x80;
    if (p.n % 8 != 0) CHECK_THROWS_AS((void)kem::deserialize_public_key(pk_bytes, p), ParseError);
    CHECK_THROWS_AS((void)kem::deserialize_ciphertext(std::vector<std::uint8_t>(5), p), ParseError);
    CHECK_THROWS_AS((void)kem::deserialize_secret_key(std::vector<std::uint8_t>(5), p), ParseError);
  }
  CHECK(get_params(Level::hqc1).ciphertext_bytes() == 4417);
}

TEST_CASE("baseline backend produces identical protocol outputs") {
  std::mt19937_64 rng(48);
  const ParamSet& p = get_params(Level::hqc1);
  const auto seed = test::random_bytes(rng, 32);
  const auto coins = test::random_bytes(rng, 32);
  const kem::KeyPair a = kem::keygen(seed, p);
  const kem::KeyPair b = kem::keygen(seed, p, oracle::baseline_backend());
  CHECK(a.pk == b.pk);
  const kem::Encapsulation ea = kem::encap(a.pk, coins, p);
  const kem::Encapsulation eb = kem::encap(b.pk, coins, p, oracle::baseline_backend());
  CHECK(ea.ct == eb.ct);
  CHECK(ea.key == eb.key);
  CHECK(kem::decap(b.sk, ea.ct, p, oracle::baseline_backend()) == ea.key);
}

TEST_CASE("decap accept and reject paths emit the same operation trace") {
  std::mt19937_64 rng(49);
  const ParamSet& p = get_params(Level::hqc1);
  const kem::KeyPair kp = kem::keygen(test::random_bytes(rng, 32), p);
  const kem::Encapsulation enc = kem::encap(kp.pk, test::random_bytes(rng, 32), p);
  kem::Ciphertext tampered = enc.ct;
  tampered.u.flip_bit(17);

  test::TraceRecorder accept, reject;
  {
    instrument::ScopedSink g(&accept);
    (void)kem::decap(kp.sk, enc.ct, p);
  }
  {
    instrument::ScopedSink g(&reject);
    (void)kem::decap(kp.sk, tampered, p);
  }
  CHECK(!accept.events.empty());
  CHECK(accept.events == reject.events);
  CHECK(accept.spans == reject.spans);
}
