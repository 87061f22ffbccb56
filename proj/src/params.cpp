#include "hqc/params.hpp"

namespace hqc {

static_assert([] {
  for (const auto& p : kParamSets) {
    if (p.n % 2 == 0 || p.code_bits() >= p.n) return false;
    if (p.rs_d > p.rs_n1 - p.rs_k + 1) return false;
    if (p.rm_n2 % 128 != 0 || (p.rm_mult != 3 && p.rm_mult != 5)) return false;
    if (!(p.omega < p.omega_r && p.omega_r < p.n)) return false;
    if (p.words % 4 != 0 || 64 * p.words < p.n) return false;
    if (2 * p.rs_delta != p.rs_parity()) return false;
  }
  return true;
}());

const ParamSet& get_params(Level level) noexcept {
  return kParamSets[static_cast<std::size_t>(level)];
}

std::optional<Level> parse_level(std::string_view name) noexcept {
  for (const auto& p : kParamSets) {
    if (p.name == name) return p.level;
  }
  return std::nullopt;
}

std::span<const ParamSet> all_params() noexcept { return kParamSets; }

}  // namespace hqc
