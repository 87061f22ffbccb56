#include <stdexcept>

#include "hqc/codec.hpp"

namespace hqc {

namespace {

RingElement routed_mul(const SparseVector& sparse, const RingElement& dense, std::size_t threshold) {
  return mul(sparse, dense, threshold);
}

}  // namespace

const Backend& optimized_backend() noexcept {
  static const Backend backend{"optimized", &routed_mul, &codec::rs_encode, &codec::rs_syndromes};
  return backend;
}

namespace codec {

RingElement code_encode(std::span<const std::uint8_t> msg, const ParamSet& params, const Backend& backend) {
  if (msg.size() != params.rs_k) throw std::invalid_argument("code_encode: wrong message length");
  const std::vector<std::uint8_t> rs = backend.rs_encode(msg, params);
  RingElement out(params);
  const std::size_t block_words = params.rm_n2 / 64;
  auto words = out.words();
  for (std::size_t t = 0; t < params.rs_n1; ++t) {
    detail::rm_encode_words(rs[t], params.rm_mult, words.subspan(t * block_words, block_words));
  }
  return out;
}

std::vector<std::uint8_t> code_decode(const RingElement& noisy, const ParamSet& params, const Backend& backend) {
  if (noisy.n() != params.n) throw std::invalid_argument("code_decode: ring length mismatch");
  const std::size_t block_words = params.rm_n2 / 64;
  const auto words = noisy.words();
  std::vector<std::uint8_t> rs(params.rs_n1);
  for (std::size_t t = 0; t < params.rs_n1; ++t) {
    rs[t] = detail::rm_decode_words(words.subspan(t * block_words, block_words), params.rm_mult);
  }
  return rs_decode(rs, params, backend);
}

}  // namespace codec

}  // namespace hqc
