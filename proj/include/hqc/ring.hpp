#pragma once

#include <cstddef>
#include <cstdint>
#include <new>
#include <span>
#include <vector>

#include "hqc/params.hpp"

// Arithmetic in GF(2)[X]/(X^n - 1).
namespace hqc {

namespace detail {

template <class T, std::size_t Align>
struct AlignedAllocator {
  using value_type = T;
  template <class U>
  struct rebind {
    using other = AlignedAllocator<U, Align>;
  };
  AlignedAllocator() noexcept = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U, Align>&) noexcept {}
  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{Align}));
  }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, std::align_val_t{Align}); }
  template <class U>
  bool operator==(const AlignedAllocator<U, Align>&) const noexcept {
    return true;
  }
};

}  // namespace detail

using WordBuffer = std::vector<std::uint64_t, detail::AlignedAllocator<std::uint64_t, 32>>;

/// Dense ring element. Bits at positions >= n are always zero.
class RingElement {
 public:
  explicit RingElement(const ParamSet& params) : RingElement(params.n) {}

  /// Arbitrary odd or even length. Intended for small oracle rings in tests;
  /// KEM code only builds elements from a ParamSet.
  [[nodiscard]] static RingElement with_length(std::size_t n) { return RingElement(n); }

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  /// Words covering the n bits (without the alignment padding).
  [[nodiscard]] std::size_t used_words() const noexcept { return (n_ + 63) / 64; }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
  [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }

  [[nodiscard]] bool bit(std::size_t pos) const noexcept { return (words_[pos / 64] >> (pos % 64)) & 1U; }
  void flip_bit(std::size_t pos) noexcept { words_[pos / 64] ^= std::uint64_t{1} << (pos % 64); }
  void set_bit(std::size_t pos, bool value) noexcept {
    const std::uint64_t m = std::uint64_t{1} << (pos % 64);
    words_[pos / 64] = (words_[pos / 64] & ~m) | (value ? m : 0);
  }

  /// Clears every bit at position >= n.
  void mask() noexcept;
  [[nodiscard]] bool padding_is_zero() const noexcept;

  /// ceil(n/8) bytes, low positions first, LSB-first within each byte.
  [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;
  /// Inverse of to_bytes(). Throws ParseError on wrong length or nonzero pad bits.
  [[nodiscard]] static RingElement from_bytes(std::span<const std::uint8_t> bytes, std::size_t n);
  /// Loads up to ceil(n/8) bytes and masks the result; never throws on pad bits.
  [[nodiscard]] static RingElement load_masked(std::span<const std::uint8_t> bytes, std::size_t n);

  friend bool operator==(const RingElement& a, const RingElement& b) noexcept {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  explicit RingElement(std::size_t n);

  std::size_t n_;
  WordBuffer words_;
};

/// Sorted, distinct support positions of a sparse ring element.
class SparseVector {
 public:
  /// Throws std::invalid_argument unless indices are strictly increasing and < n.
  SparseVector(std::vector<std::uint32_t> indices, std::size_t n);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t weight() const noexcept { return indices_.size(); }
  [[nodiscard]] std::span<const std::uint32_t> indices() const noexcept { return indices_; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<std::uint32_t> indices_;
  std::size_t n_;
};

enum class MulRoute { sparse, dense };

[[nodiscard]] RingElement add(const RingElement& a, const RingElement& b);
/// a <- a + b.
void add_in_place(RingElement& a, const RingElement& b);

/// X^shift * a mod (X^n - 1).
[[nodiscard]] RingElement cyclic_shift(const RingElement& a, std::size_t shift);

/// XOR of cyclic_shift(dense, i) over the support. Each support index costs
/// the same word-operation count independent of its value.
[[nodiscard]] RingElement sparse_dense_mul(const SparseVector& sparse, const RingElement& dense);

/// Karatsuba carry-less product followed by reduction mod X^n - 1.
[[nodiscard]] RingElement dense_mul(const RingElement& a, const RingElement& b);

[[nodiscard]] constexpr MulRoute select_route(std::size_t weight, std::size_t threshold) noexcept {
  return weight < threshold ? MulRoute::sparse : MulRoute::dense;
}

/// Weight-routed product: sparse kernel when weight < threshold, else dense.
[[nodiscard]] RingElement mul(const SparseVector& a1, const RingElement& a2,
                              std::size_t threshold = kDefaultSparseThreshold);
[[nodiscard]] RingElement mul(const RingElement& a1, const RingElement& a2,
                              std::size_t threshold = kDefaultSparseThreshold);

[[nodiscard]] std::size_t weight(const RingElement& a) noexcept;

[[nodiscard]] RingElement to_dense(const SparseVector& s);
/// Support of a dense element (not constant-time; public data only).
[[nodiscard]] SparseVector to_sparse(const RingElement& a);

/// Low `bits` bits of a as ceil(bits/8) bytes; the final byte is zero-padded.
[[nodiscard]] std::vector<std::uint8_t> truncate(const RingElement& a, std::size_t bits);

namespace detail {

/// 64x64 -> 128 carry-less multiply; returns {low, high}.
struct Clmul128 {
  std::uint64_t lo;
  std::uint64_t hi;
};
[[nodiscard]] Clmul128 clmul64(std::uint64_t a, std::uint64_t b) noexcept;

/// out[0, 2*len) = a[0, len) * b[0, len) over GF(2)[X].
void karatsuba(std::span<std::uint64_t> out, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Reduces a product of up to 2n-1 bits modulo X^n - 1 into `out`.
void fold_product(RingElement& out, std::span<const std::uint64_t> product);

}  // namespace detail

}  // namespace hqc
