#include "hqc/instrument.hpp"

namespace hqc::instrument {
namespace {
thread_local Sink* tls_sink = nullptr;
}  // namespace

Sink* current() noexcept { return tls_sink; }

ScopedSink::ScopedSink(Sink* sink) noexcept : previous_(tls_sink) { tls_sink = sink; }

ScopedSink::~ScopedSink() { tls_sink = previous_; }

}  // namespace hqc::instrument
