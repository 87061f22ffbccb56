#include <array>
#include <mutex>
#include <stdexcept>

#include "hqc/codec.hpp"
#include "hqc/ct.hpp"
#include "hqc/instrument.hpp"

namespace hqc::codec {
namespace {

// Largest 2*delta over the standard sets, plus the constant term.
constexpr std::size_t kMaxPoly = 64;

void require_length(std::span<const std::uint8_t> data, std::size_t expected, const char* what) {
  if (data.size() != expected) throw std::invalid_argument(std::string(what) + ": wrong input length");
}

// Inverse that maps 0 to 0 instead of failing.
std::uint8_t inv_or_zero(std::uint8_t a) noexcept {
  const auto& t = gf256::log_tables();
  const std::uint8_t r = t.exp[gf256::kGroupOrder - t.log[a]];
  const auto zero = static_cast<std::uint8_t>((unsigned{a} - 1U) >> 8);
  return r & static_cast<std::uint8_t>(~zero);
}

// sum_i poly[i] * x^i for i < len.
std::uint8_t eval(std::span<const std::uint8_t> poly, std::uint8_t x) noexcept {
  std::uint8_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = gf256::mul(acc, x) ^ poly[i];
  return acc;
}

}  // namespace

std::vector<std::uint8_t> rs_generator(const ParamSet& params) {
  const std::size_t r = params.rs_parity();
  // g holds r + 1 coefficients, lowest degree first; starts as 1.
  std::vector<std::uint8_t> g(r + 1, 0);
  g[0] = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    const std::uint8_t root = gf256::alpha_pow(i);
    for (std::size_t j = i; j > 0; --j) g[j] = g[j - 1] ^ gf256::mul(g[j], root);
    g[0] = gf256::mul(g[0], root);
  }
  g.pop_back();
  return g;
}

const gf256::EncodeTable& encode_table(const ParamSet& params) {
  static std::array<gf256::EncodeTable, 3> tables;
  static std::array<std::once_flag, 3> once;
  const auto idx = static_cast<std::size_t>(params.level);
  std::call_once(once[idx], [&] { tables[idx] = gf256::EncodeTable::build(rs_generator(params)); });
  return tables[idx];
}

std::vector<std::uint8_t> rs_encode(std::span<const std::uint8_t> msg, const ParamSet& params) {
  return rs_encode_with(msg, params, encode_table(params));
}

std::vector<std::uint8_t> rs_encode_with(std::span<const std::uint8_t> msg, const ParamSet& params,
                                         const gf256::EncodeTable& table) {
  require_length(msg, params.rs_k, "rs_encode");
  const std::size_t r = params.rs_parity();
  std::array<std::uint8_t, kMaxPoly> reg{};
  for (const std::uint8_t byte : msg) {
    const std::uint8_t feedback = byte ^ reg[r - 1];
    for (std::size_t j = r - 1; j > 0; --j) reg[j] = reg[j - 1] ^ table.at(j, feedback);
    reg[0] = table.at(0, feedback);
  }
  std::vector<std::uint8_t> codeword(params.rs_n1);
  std::copy(msg.begin(), msg.end(), codeword.begin());
  for (std::size_t i = 0; i < r; ++i) codeword[params.rs_k + i] = reg[r - 1 - i];
  return codeword;
}

std::vector<std::uint8_t> rs_syndromes(std::span<const std::uint8_t> received, const ParamSet& params) {
  require_length(received, params.rs_n1, "rs_syndromes");
  instrument::emit(instrument::Event::rs_syndromes, static_cast<std::uint32_t>(params.rs_n1));
  const auto& tables = gf256::syndrome_tables();
  const std::size_t n1 = params.rs_n1;
  const std::size_t count = params.rs_parity();
  std::vector<std::uint8_t> s(count);
  for (std::size_t i = 1; i <= count; ++i) {
    // The last byte is the x^0 coefficient and contributes unrotated.
    std::uint8_t acc = received[n1 - 1];
    std::size_t p = 0;
    for (std::size_t t = n1 - 1; t-- > 0;) {
      p += i;
      if (p >= gf256::kGroupOrder) p -= gf256::kGroupOrder;
      acc ^= tables.mul_alpha_pow(p, received[t]);
    }
    s[i - 1] = acc;
  }
  return s;
}

std::vector<std::uint8_t> rs_decode(std::span<const std::uint8_t> received, const ParamSet& params,
                                    const Backend& backend) {
  require_length(received, params.rs_n1, "rs_decode");
  const std::size_t n1 = params.rs_n1;
  const std::size_t two_delta = params.rs_parity();
  const std::vector<std::uint8_t> syn = backend.rs_syndromes(received, params);

  // Berlekamp-Massey with B kept pre-multiplied by x^m / b.
  std::array<std::uint8_t, kMaxPoly + 1> lambda{};
  std::array<std::uint8_t, kMaxPoly + 1> b{};
  std::array<std::uint8_t, kMaxPoly + 1> next{};
  lambda[0] = 1;
  b[0] = 1;
  std::uint32_t degree = 0;
  for (std::size_t r = 0; r < two_delta; ++r) {
    instrument::emit(instrument::Event::rs_locator_step, static_cast<std::uint32_t>(two_delta));
    for (std::size_t j = two_delta; j > 0; --j) b[j] = b[j - 1];
    b[0] = 0;

    std::uint8_t d = syn[r];
    for (std::size_t i = 1; i <= r; ++i) d ^= gf256::mul(lambda[i], syn[r - i]);

    for (std::size_t j = 0; j <= two_delta; ++j) next[j] = lambda[j] ^ gf256::mul(d, b[j]);

    const std::uint32_t update =
        ct::nonzero_mask(d) & ~ct::lt_mask(static_cast<std::uint32_t>(r), 2 * degree);
    const std::uint8_t d_inv = inv_or_zero(d);
    for (std::size_t j = 0; j <= two_delta; ++j) {
      b[j] = ct::select8(static_cast<std::uint8_t>(update), gf256::mul(lambda[j], d_inv), b[j]);
    }
    degree = ct::select(update, static_cast<std::uint32_t>(r + 1) - degree, degree);
    lambda = next;
  }

  // Omega(x) = S(x) * Lambda(x) mod x^(2 delta).
  std::array<std::uint8_t, kMaxPoly> omega{};
  for (std::size_t i = 0; i < two_delta; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j <= i; ++j) acc ^= gf256::mul(lambda[j], syn[i - j]);
    omega[i] = acc;
  }
  // Formal derivative: odd-degree terms shifted down.
  std::array<std::uint8_t, kMaxPoly> lambda_prime{};
  for (std::size_t i = 1; i <= two_delta; i += 2) lambda_prime[i - 1] = lambda[i];

  const std::span<const std::uint8_t> lambda_view(lambda.data(), two_delta + 1);
  const std::span<const std::uint8_t> omega_view(omega.data(), two_delta);
  const std::span<const std::uint8_t> prime_view(lambda_prime.data(), two_delta);

  instrument::emit(instrument::Event::rs_root_sweep, static_cast<std::uint32_t>(n1));
  std::vector<std::uint8_t> corrected(received.begin(), received.end());
  std::uint32_t roots = 0;
  for (std::size_t t = 0; t < n1; ++t) {
    const std::size_t e = n1 - 1 - t;
    const std::uint8_t x_inv = gf256::alpha_pow(gf256::kGroupOrder - (e % gf256::kGroupOrder));
    const std::uint32_t is_root = ct::eq_mask(eval(lambda_view, x_inv), 0);
    roots += is_root & 1U;
    const std::uint8_t magnitude = gf256::mul(eval(omega_view, x_inv), inv_or_zero(eval(prime_view, x_inv)));
    corrected[t] ^= magnitude & static_cast<std::uint8_t>(is_root);
  }

  const auto ok = static_cast<std::uint8_t>(ct::eq_mask(roots, degree));
  std::vector<std::uint8_t> msg(params.rs_k);
  ct::select_bytes(msg, ok, std::span(corrected).first(params.rs_k), received.first(params.rs_k));
  return msg;
}

}  // namespace hqc::codec
