#include "hqc/ring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hqc/errors.hpp"
#include "hqc/instrument.hpp"

namespace hqc {
namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": ring length mismatch");
}

std::uint64_t top_mask(std::size_t n) noexcept {
  const std::size_t r = n % 64;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

// acc[q .. q + nw] ^= dense << (64 q + b) with q, b taken from `shift`.
// The loop bounds depend only on nw.
void shift_accumulate(std::uint64_t* acc, std::span<const std::uint64_t> dense, std::size_t nw,
                      std::uint32_t shift) noexcept {
  const std::size_t q = shift >> 6;
  const unsigned b = shift & 63U;
  const unsigned rb = 63U - b;
  std::uint64_t* dst = acc + q;
  const std::uint64_t* src = dense.data();
  // (x >> 1) >> (63 - b) == x >> (64 - b), and is zero when b == 0.
  dst[0] ^= src[0] << b;
  for (std::size_t k = 1; k < nw; ++k) dst[k] ^= (src[k] << b) | ((src[k - 1] >> 1) >> rb);
  dst[nw] ^= (src[nw - 1] >> 1) >> rb;
}

}  // namespace

RingElement::RingElement(std::size_t n) : n_(n), words_(padded_words(n), 0) {
  if (n == 0) throw std::invalid_argument("RingElement: zero length");
}

void RingElement::mask() noexcept {
  const std::size_t used = used_words();
  words_[used - 1] &= top_mask(n_);
  std::fill(words_.begin() + static_cast<std::ptrdiff_t>(used), words_.end(), 0);
}

bool RingElement::padding_is_zero() const noexcept {
  const std::size_t used = used_words();
  if ((words_[used - 1] & ~top_mask(n_)) != 0) return false;
  return std::all_of(words_.begin() + static_cast<std::ptrdiff_t>(used), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::vector<std::uint8_t> RingElement::to_bytes() const { return truncate(*this, n_); }

RingElement RingElement::load_masked(std::span<const std::uint8_t> bytes, std::size_t n) {
  RingElement r(n);
  const std::size_t count = std::min(bytes.size(), (n + 7) / 8);
  for (std::size_t i = 0; i < count; ++i) r.words_[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
  r.mask();
  return r;
}

RingElement RingElement::from_bytes(std::span<const std::uint8_t> bytes, std::size_t n) {
  if (bytes.size() != (n + 7) / 8) throw ParseError("ring element: wrong byte length");
  if (n % 8 != 0 && (bytes.back() >> (n % 8)) != 0) throw ParseError("ring element: nonzero padding bits");
  return load_masked(bytes, n);
}

SparseVector::SparseVector(std::vector<std::uint32_t> indices, std::size_t n) : indices_(std::move(indices)), n_(n) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] >= n_) throw std::invalid_argument("SparseVector: index out of range");
    if (i > 0 && indices_[i - 1] >= indices_[i]) throw std::invalid_argument("SparseVector: indices not strictly increasing");
  }
}

RingElement add(const RingElement& a, const RingElement& b) {
  RingElement r = a;
  add_in_place(r, b);
  return r;
}

void add_in_place(RingElement& a, const RingElement& b) {
  require_same_length(a.n(), b.n(), "add");
  auto dst = a.words();
  auto src = b.words();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

RingElement cyclic_shift(const RingElement& a, std::size_t shift) {
  if (shift >= a.n()) throw std::invalid_argument("cyclic_shift: shift out of range");
  if (shift == 0) {
    RingElement r = a;
    r.mask();
    return r;
  }
  const std::size_t nw = a.used_words();
  WordBuffer acc(2 * nw + 1, 0);
  shift_accumulate(acc.data(), a.words(), nw, static_cast<std::uint32_t>(shift));
  RingElement r = RingElement::with_length(a.n());
  detail::fold_product(r, acc);
  return r;
}

RingElement sparse_dense_mul(const SparseVector& sparse, const RingElement& dense) {
  require_same_length(sparse.n(), dense.n(), "sparse_dense_mul");
  const std::size_t nw = dense.used_words();
  WordBuffer acc(2 * nw + 1, 0);
  for (const std::uint32_t index : sparse.indices()) {
    instrument::emit(instrument::Event::shift_accumulate, static_cast<std::uint32_t>(nw + 1));
    shift_accumulate(acc.data(), dense.words(), nw, index);
  }
  RingElement r = RingElement::with_length(dense.n());
  detail::fold_product(r, acc);
  return r;
}

RingElement dense_mul(const RingElement& a, const RingElement& b) {
  require_same_length(a.n(), b.n(), "dense_mul");
  const std::size_t nw = a.used_words();
  WordBuffer product(2 * nw, 0);
  detail::karatsuba(product, a.words().first(nw), b.words().first(nw));
  RingElement r = RingElement::with_length(a.n());
  detail::fold_product(r, product);
  return r;
}

RingElement mul(const SparseVector& a1, const RingElement& a2, std::size_t threshold) {
  if (threshold == 0) throw std::invalid_argument("mul: threshold must be positive");
  if (select_route(a1.weight(), threshold) == MulRoute::sparse) {
    instrument::emit(instrument::Event::route_sparse, static_cast<std::uint32_t>(a1.weight()));
    return sparse_dense_mul(a1, a2);
  }
  instrument::emit(instrument::Event::route_dense, static_cast<std::uint32_t>(a1.weight()));
  return dense_mul(to_dense(a1), a2);
}

RingElement mul(const RingElement& a1, const RingElement& a2, std::size_t threshold) {
  if (threshold == 0) throw std::invalid_argument("mul: threshold must be positive");
  const std::size_t w = weight(a1);
  if (select_route(w, threshold) == MulRoute::sparse) {
    instrument::emit(instrument::Event::route_sparse, static_cast<std::uint32_t>(w));
    return sparse_dense_mul(to_sparse(a1), a2);
  }
  instrument::emit(instrument::Event::route_dense, static_cast<std::uint32_t>(w));
  return dense_mul(a1, a2);
}

std::size_t weight(const RingElement& a) noexcept {
  std::size_t total = 0;
  for (const std::uint64_t w : a.words()) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

RingElement to_dense(const SparseVector& s) {
  RingElement r = RingElement::with_length(s.n());
  for (const std::uint32_t i : s.indices()) r.flip_bit(i);
  return r;
}

SparseVector to_sparse(const RingElement& a) {
  std::vector<std::uint32_t> indices;
  const auto words = a.words();
  for (std::size_t w = 0; w < a.used_words(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      indices.push_back(static_cast<std::uint32_t>(64 * w + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return SparseVector(std::move(indices), a.n());
}

std::vector<std::uint8_t> truncate(const RingElement& a, std::size_t bits) {
  if (bits > a.n()) throw std::invalid_argument("truncate: more bits than the ring length");
  std::vector<std::uint8_t> out((bits + 7) / 8);
  const auto words = a.words();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8)));
  if (bits % 8 != 0) out.back() &= static_cast<std::uint8_t>((1U << (bits % 8)) - 1);
  return out;
}

namespace detail {

void fold_product(RingElement& out, std::span<const std::uint64_t> product) {
  instrument::emit(instrument::Event::ring_fold, static_cast<std::uint32_t>(out.used_words()));
  const std::size_t n = out.n();
  const std::size_t nw = out.used_words();
  const std::size_t base = n / 64;
  const unsigned off = n % 64;
  auto at = [&](std::size_t i) -> std::uint64_t { return i < product.size() ? product[i] : 0; };
  auto dst = out.words();
  for (std::size_t k = 0; k < nw; ++k) {
    std::uint64_t high = at(base + k) >> off;
    if (off != 0) high |= at(base + k + 1) << (64 - off);
    dst[k] = at(k) ^ high;
  }
  out.mask();
}

}  // namespace detail

}  // namespace hqc
