#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hqc/backend.hpp"
#include "hqc/params.hpp"
#include "hqc/ring.hpp"

namespace hqc::kem {

using Seed = std::array<std::uint8_t, kSeedBytes>;
using SharedSecret = std::array<std::uint8_t, kSharedSecretBytes>;

struct PublicKey {
  Seed seed_h;    // regenerates h
  RingElement s;  // x + h*y

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
  Seed seed;  // regenerates x, y
  SparseVector x;
  SparseVector y;
  std::vector<std::uint8_t> sigma;  // rs_k bytes, implicit-rejection secret
  PublicKey pk;

  friend bool operator==(const SecretKey&, const SecretKey&) = default;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

struct Ciphertext {
  RingElement u;
  std::vector<std::uint8_t> v;  // n1*n2 bits, truncated

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct Encapsulation {
  Ciphertext ct;
  SharedSecret key;
};

/// Derives (x, y, sigma) from the secret seed.
struct SecretExpansion {
  SparseVector x;
  SparseVector y;
  std::vector<std::uint8_t> sigma;
};
[[nodiscard]] SecretExpansion expand_secret(std::span<const std::uint8_t> seed, const ParamSet& params);

/// h from its public seed.
[[nodiscard]] RingElement expand_h(std::span<const std::uint8_t> seed_h, const ParamSet& params);

[[nodiscard]] KeyPair keygen(std::span<const std::uint8_t> seed, const ParamSet& params,
                             const Backend& backend = optimized_backend());

/// u = r1 + h*r2, v = truncate(mG + s*r2 + e); (r1, r2, e) drawn from theta.
[[nodiscard]] Ciphertext pke_encrypt(const PublicKey& pk, std::span<const std::uint8_t> m,
                                     std::span<const std::uint8_t> theta, const ParamSet& params,
                                     const Backend& backend = optimized_backend());

/// Decode(v + u*y). Always returns rs_k bytes.
[[nodiscard]] std::vector<std::uint8_t> pke_decrypt(const SecretKey& sk, const Ciphertext& c, const ParamSet& params,
                                                    const Backend& backend = optimized_backend());

[[nodiscard]] Encapsulation encap(const PublicKey& pk, std::span<const std::uint8_t> coins, const ParamSet& params,
                                  const Backend& backend = optimized_backend());

/// Re-encrypts and returns K(m', c) on an exact match, K(sigma, c) otherwise.
/// Both candidates are always computed and selected with a mask.
[[nodiscard]] SharedSecret decap(const SecretKey& sk, const Ciphertext& c, const ParamSet& params,
                                 const Backend& backend = optimized_backend());

// Fixed-length encodings:
//   public key  = seed_h (32) || s (ceil(n/8))
//   secret key  = seed (32) || sigma (rs_k) || public key
//   ciphertext  = u (ceil(n/8)) || v (ceil(n1*n2/8))
// Deserializers throw ParseError on a bad length or nonzero padding bits.
[[nodiscard]] std::vector<std::uint8_t> serialize(const PublicKey& pk);
[[nodiscard]] std::vector<std::uint8_t> serialize(const SecretKey& sk);
[[nodiscard]] std::vector<std::uint8_t> serialize(const Ciphertext& ct);

[[nodiscard]] PublicKey deserialize_public_key(std::span<const std::uint8_t> bytes, const ParamSet& params);
[[nodiscard]] SecretKey deserialize_secret_key(std::span<const std::uint8_t> bytes, const ParamSet& params);
[[nodiscard]] Ciphertext deserialize_ciphertext(std::span<const std::uint8_t> bytes, const ParamSet& params);

}  // namespace hqc::kem
