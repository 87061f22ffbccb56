#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hqc/params.hpp"
#include "hqc/ring.hpp"

namespace hqc {

/// The three swappable kernels. KEM and codec code reach ring products, RS
/// encoding and RS syndromes only through a Backend, so a reference build
/// can be measured through the same call graph.
struct Backend {
  std::string_view name;
  RingElement (*mul)(const SparseVector& sparse, const RingElement& dense, std::size_t threshold);
  std::vector<std::uint8_t> (*rs_encode)(std::span<const std::uint8_t> msg, const ParamSet& params);
  std::vector<std::uint8_t> (*rs_syndromes)(std::span<const std::uint8_t> received, const ParamSet& params);
};

[[nodiscard]] const Backend& optimized_backend() noexcept;

}  // namespace hqc
