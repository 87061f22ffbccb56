#include <vector>

#include "hqc/ring.hpp"

namespace hqc::detail {
namespace {

constexpr std::size_t kSchoolbookWords = 8;

void schoolbook(std::span<std::uint64_t> out, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Clmul128 p = clmul64(a[i], b[j]);
      out[i + j] ^= p.lo;
      out[i + j + 1] ^= p.hi;
    }
  }
}

}  // namespace

Clmul128 clmul64(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  for (unsigned i = 0; i < 64; ++i) {
    const std::uint64_t m = 0 - ((b >> i) & 1U);
    lo ^= (a << i) & m;
    hi ^= ((a >> 1) >> (63 - i)) & m;
  }
  return {lo, hi};
}

void karatsuba(std::span<std::uint64_t> out, std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t len = a.size();
  if (len <= kSchoolbookWords) {
    schoolbook(out.first(2 * len), a, b);
    return;
  }
  const std::size_t lo = len / 2;
  const std::size_t hi = len - lo;

  karatsuba(out.first(2 * lo), a.first(lo), b.first(lo));
  karatsuba(out.subspan(2 * lo, 2 * hi), a.subspan(lo), b.subspan(lo));

  std::vector<std::uint64_t> sum_a(a.begin() + static_cast<std::ptrdiff_t>(lo), a.end());
  std::vector<std::uint64_t> sum_b(b.begin() + static_cast<std::ptrdiff_t>(lo), b.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sum_a[i] ^= a[i];
    sum_b[i] ^= b[i];
  }
  std::vector<std::uint64_t> middle(2 * hi);
  karatsuba(middle, sum_a, sum_b);
  for (std::size_t i = 0; i < 2 * lo; ++i) middle[i] ^= out[i];
  for (std::size_t i = 0; i < 2 * hi; ++i) middle[i] ^= out[2 * lo + i];
  for (std::size_t i = 0; i < 2 * hi; ++i) out[lo + i] ^= middle[i];
}

}  // namespace hqc::detail
