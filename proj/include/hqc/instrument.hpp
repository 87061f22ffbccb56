#pragma once

#include <array>
#include <cstdint>
#include <string_view>

// Optional observation hooks. A sink is installed per thread; when none is
// installed every hook reduces to a null check and functional outputs are
// unaffected either way.
namespace hqc::instrument {

/// Runtime breakdown categories for the benchmark report.
enum class Component : std::uint8_t {
  shake,
  vector_gen,
  poly_mult,
  poly_add,
  vector_resize,
  code_encode,
  code_decode,
  other,
};

inline constexpr std::size_t kComponentCount = 8;

inline constexpr std::array<std::string_view, kComponentCount> kComponentNames = {
    "shake", "vector_gen", "poly_mult", "poly_add", "vector_resize", "code_encode", "code_decode", "other"};

[[nodiscard]] constexpr std::string_view name(Component c) noexcept {
  return kComponentNames[static_cast<std::size_t>(c)];
}

/// Operation-level events. The argument carries a public size (word count,
/// byte count, domain tag) and never secret data.
enum class Event : std::uint8_t {
  keccak_permute,
  hash_derive,
  prng_init,
  shift_accumulate,
  ring_fold,
  route_sparse,
  route_dense,
  rs_syndromes,
  rs_locator_step,
  rs_root_sweep,
  rm_decode_block,
  ct_compare,
  ct_select,
};

class Sink {
 public:
  virtual ~Sink() = default;
  virtual void enter(Component) {}
  virtual void leave(Component) {}
  virtual void event(Event, std::uint32_t /*arg*/) {}
};

[[nodiscard]] Sink* current() noexcept;

/// Installs `sink` on the calling thread for the lifetime of the guard.
class ScopedSink {
 public:
  explicit ScopedSink(Sink* sink) noexcept;
  ~ScopedSink();
  ScopedSink(const ScopedSink&) = delete;
  ScopedSink& operator=(const ScopedSink&) = delete;

 private:
  Sink* previous_;
};

class Span {
 public:
  explicit Span(Component c) noexcept : sink_(current()), component_(c) {
    if (sink_ != nullptr) sink_->enter(component_);
  }
  ~Span() {
    if (sink_ != nullptr) sink_->leave(component_);
  }
  Span(const Span&) = delete;
  Span& operator=(const Span&) = delete;

 private:
  Sink* sink_;
  Component component_;
};

inline void emit(Event e, std::uint32_t arg = 0) noexcept {
  if (Sink* s = current(); s != nullptr) s->event(e, arg);
}

}  // namespace hqc::instrument
