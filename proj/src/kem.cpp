#include "hqc/kem.hpp"

#include <algorithm>
#include <stdexcept>

#include "hqc/codec.hpp"
#include "hqc/ct.hpp"
#include "hqc/errors.hpp"
#include "hqc/instrument.hpp"
#include "hqc/prng.hpp"

namespace hqc::kem {
namespace {

using instrument::Component;
using instrument::Span;

Seed to_seed(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSeedBytes) throw std::invalid_argument("seed must be 32 bytes");
  Seed s;
  std::copy(bytes.begin(), bytes.end(), s.begin());
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

struct EncryptionNoise {
  SparseVector r1;
  SparseVector r2;
  SparseVector e;
};

EncryptionNoise sample_noise(std::span<const std::uint8_t> theta, const ParamSet& params) {
  Prng prng(theta);
  Span span(Component::vector_gen);
  SparseVector r1 = sample_fixed_weight(prng, params.omega_r, params);
  SparseVector r2 = sample_fixed_weight(prng, params.omega_r, params);
  SparseVector e = sample_fixed_weight(prng, params.omega_r, params);
  return {std::move(r1), std::move(r2), std::move(e)};
}

}  // namespace

SecretExpansion expand_secret(std::span<const std::uint8_t> seed, const ParamSet& params) {
  Prng prng(seed);
  Span span(Component::vector_gen);
  SparseVector x = sample_fixed_weight(prng, params.omega, params);
  SparseVector y = sample_fixed_weight(prng, params.omega, params);
  std::vector<std::uint8_t> sigma = prng.bytes(params.rs_k);
  return {std::move(x), std::move(y), std::move(sigma)};
}

RingElement expand_h(std::span<const std::uint8_t> seed_h, const ParamSet& params) {
  Prng prng(seed_h);
  Span span(Component::vector_gen);
  return sample_dense(prng, params);
}

KeyPair keygen(std::span<const std::uint8_t> seed, const ParamSet& params, const Backend& backend) {
  require(seed.size() == kSeedBytes, "keygen: seed must be 32 bytes");
  Prng master(seed);
  const std::vector<std::uint8_t> seeds = master.bytes(2 * kSeedBytes);
  const Seed sk_seed = to_seed(std::span(seeds).first(kSeedBytes));
  const Seed pk_seed = to_seed(std::span(seeds).subspan(kSeedBytes));

  const RingElement h = expand_h(pk_seed, params);
  SecretExpansion secret = expand_secret(sk_seed, params);

  RingElement hy = [&] {
    Span span(Component::poly_mult);
    return backend.mul(secret.y, h, params.sparse_threshold);
  }();
  {
    Span span(Component::poly_add);
    add_in_place(hy, to_dense(secret.x));
  }

  PublicKey pk{pk_seed, std::move(hy)};
  SecretKey sk{sk_seed, std::move(secret.x), std::move(secret.y), std::move(secret.sigma), pk};
  return {std::move(pk), std::move(sk)};
}

Ciphertext pke_encrypt(const PublicKey& pk, std::span<const std::uint8_t> m, std::span<const std::uint8_t> theta,
                       const ParamSet& params, const Backend& backend) {
  require(m.size() == params.rs_k, "pke_encrypt: message must be rs_k bytes");
  require(pk.s.n() == params.n, "pke_encrypt: public key does not match parameter set");
  const RingElement h = expand_h(pk.seed_h, params);
  const EncryptionNoise noise = sample_noise(theta, params);

  RingElement u = [&] {
    Span span(Component::poly_mult);
    return backend.mul(noise.r2, h, params.sparse_threshold);
  }();
  RingElement sr2 = [&] {
    Span span(Component::poly_mult);
    return backend.mul(noise.r2, pk.s, params.sparse_threshold);
  }();
  const RingElement mg = [&] {
    Span span(Component::code_encode);
    return codec::code_encode(m, params, backend);
  }();
  {
    Span span(Component::poly_add);
    add_in_place(u, to_dense(noise.r1));
    add_in_place(sr2, mg);
    add_in_place(sr2, to_dense(noise.e));
  }
  Span span(Component::vector_resize);
  std::vector<std::uint8_t> v = truncate(sr2, params.code_bits());
  return {std::move(u), std::move(v)};
}

std::vector<std::uint8_t> pke_decrypt(const SecretKey& sk, const Ciphertext& c, const ParamSet& params,
                                      const Backend& backend) {
  require(c.u.n() == params.n && c.v.size() == params.code_bytes(), "pke_decrypt: malformed ciphertext");
  RingElement noisy = [&] {
    Span span(Component::vector_resize);
    return RingElement::load_masked(c.v, params.n);
  }();
  const RingElement uy = [&] {
    Span span(Component::poly_mult);
    return backend.mul(sk.y, c.u, params.sparse_threshold);
  }();
  {
    Span span(Component::poly_add);
    add_in_place(noisy, uy);
  }
  Span span(Component::code_decode);
  return codec::code_decode(noisy, params, backend);
}

Encapsulation encap(const PublicKey& pk, std::span<const std::uint8_t> coins, const ParamSet& params,
                    const Backend& backend) {
  require(coins.size() == kSeedBytes, "encap: coins must be 32 bytes");
  const std::vector<std::uint8_t> pk_bytes = serialize(pk);
  std::vector<std::uint8_t> m;
  std::vector<std::uint8_t> theta;
  {
    Span span(Component::shake);
    m = derive(DomainTag::h, {coins}, params.rs_k);
    theta = derive(DomainTag::g, {m, pk_bytes}, kSeedBytes);
  }
  Ciphertext ct = pke_encrypt(pk, m, theta, params, backend);
  const std::vector<std::uint8_t> ct_bytes = serialize(ct);
  Encapsulation out{std::move(ct), {}};
  Span span(Component::shake);
  const std::vector<std::uint8_t> key = derive(DomainTag::k, {m, ct_bytes}, kSharedSecretBytes);
  std::copy(key.begin(), key.end(), out.key.begin());
  return out;
}

SharedSecret decap(const SecretKey& sk, const Ciphertext& c, const ParamSet& params, const Backend& backend) {
  require(c.u.n() == params.n && c.v.size() == params.code_bytes(), "decap: malformed ciphertext");
  const std::vector<std::uint8_t> m = pke_decrypt(sk, c, params, backend);
  const std::vector<std::uint8_t> pk_bytes = serialize(sk.pk);
  std::vector<std::uint8_t> theta;
  {
    Span span(Component::shake);
    theta = derive(DomainTag::g, {m, pk_bytes}, kSeedBytes);
  }
  const Ciphertext reencrypted = pke_encrypt(sk.pk, m, theta, params, backend);

  const std::vector<std::uint8_t> ct_bytes = serialize(c);
  const std::vector<std::uint8_t> expected = serialize(reencrypted);

  const std::uint8_t accept = ct::equal_bytes_mask(ct_bytes, expected);
  Span span(Component::shake);
  const std::vector<std::uint8_t> k_accept = derive(DomainTag::k, {m, ct_bytes}, kSharedSecretBytes);
  const std::vector<std::uint8_t> k_reject = derive(DomainTag::k, {sk.sigma, ct_bytes}, kSharedSecretBytes);
  SharedSecret out{};
  ct::select_bytes(out, accept, k_accept, k_reject);
  return out;
}

std::vector<std::uint8_t> serialize(const PublicKey& pk) {
  std::vector<std::uint8_t> out(pk.seed_h.begin(), pk.seed_h.end());
  const std::vector<std::uint8_t> s = pk.s.to_bytes();
  out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<std::uint8_t> serialize(const SecretKey& sk) {
  std::vector<std::uint8_t> out(sk.seed.begin(), sk.seed.end());
  out.insert(out.end(), sk.sigma.begin(), sk.sigma.end());
  const std::vector<std::uint8_t> pk = serialize(sk.pk);
  out.insert(out.end(), pk.begin(), pk.end());
  return out;
}

std::vector<std::uint8_t> serialize(const Ciphertext& ct) {
  std::vector<std::uint8_t> out = ct.u.to_bytes();
  out.insert(out.end(), ct.v.begin(), ct.v.end());
  return out;
}

PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes, const ParamSet& params) {
  if (bytes.size() != params.public_key_bytes()) throw ParseError("public key: wrong length");
  return {to_seed(bytes.first(kSeedBytes)), RingElement::from_bytes(bytes.subspan(kSeedBytes), params.n)};
}

SecretKey deserialize_secret_key(std::span<const std::uint8_t> bytes, const ParamSet& params) {
  if (bytes.size() != params.secret_key_bytes()) throw ParseError("secret key: wrong length");
  const Seed seed = to_seed(bytes.first(kSeedBytes));
  const auto sigma = bytes.subspan(kSeedBytes, params.rs_k);
  PublicKey pk = deserialize_public_key(bytes.subspan(kSeedBytes + params.rs_k), params);
  SecretExpansion secret = expand_secret(seed, params);
  return {seed, std::move(secret.x), std::move(secret.y), std::vector<std::uint8_t>(sigma.begin(), sigma.end()),
          std::move(pk)};
}

Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes, const ParamSet& params) {
  if (bytes.size() != params.ciphertext_bytes()) throw ParseError("ciphertext: wrong length");
  RingElement u = RingElement::from_bytes(bytes.first(params.n_bytes()), params.n);
  const auto v = bytes.subspan(params.n_bytes());
  const std::size_t tail_bits = params.code_bits() % 8;
  if (tail_bits != 0 && (v.back() >> tail_bits) != 0) throw ParseError("ciphertext: nonzero padding bits in v");
  return {std::move(u), std::vector<std::uint8_t>(v.begin(), v.end())};
}

}  // namespace hqc::kem
