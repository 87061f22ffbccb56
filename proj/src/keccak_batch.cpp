#include <algorithm>

#include "hqc/keccak.hpp"
#include "keccak_internal.hpp"

namespace hqc::keccak {
namespace {

// A one-shot SHAKE evaluation broken into permutation steps. Step k performs
// the I/O that precedes the k-th permutation: absorbing full block k, the
// padded tail, or squeezing an earlier output block.
struct Job {
  std::span<const std::uint8_t> input;
  std::span<std::uint8_t> out;
  std::size_t full_blocks = 0;
  std::size_t steps = 0;

  Job(std::span<const std::uint8_t> in, std::span<std::uint8_t> o)
      : input(in), out(o), full_blocks(in.size() / kRate) {
    const std::size_t squeeze_blocks = (o.size() + kRate - 1) / kRate;
    steps = full_blocks + std::max<std::size_t>(squeeze_blocks, 1);
  }

  void before_permute(State& s, std::size_t step) const noexcept {
    if (step < full_blocks) {
      detail::xor_block(s, input.subspan(step * kRate, kRate));
    } else if (step == full_blocks) {
      detail::xor_tail(s, input.subspan(full_blocks * kRate));
    } else {
      const std::size_t block = step - full_blocks - 1;
      detail::store_block(s, out.subspan(block * kRate, kRate));
    }
  }

  void finish(const State& s) const noexcept {
    if (out.empty()) return;
    const std::size_t last = (out.size() - 1) / kRate;
    detail::store_block(s, out.subspan(last * kRate));
  }
};

void run_group(std::span<Job> jobs) {
  std::array<State, 4> states{};
  std::size_t max_steps = 0;
  for (const Job& j : jobs) max_steps = std::max(max_steps, j.steps);

  StateX4 wide;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::size_t active = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (step < jobs[i].steps) {
        jobs[i].before_permute(states[i], step);
        ++active;
      }
    }
    if (active == 4) {
      for (std::size_t lane = 0; lane < kLanes; ++lane)
        for (std::size_t k = 0; k < 4; ++k) wide.lanes[lane][k] = states[k][lane];
      permute_x4(wide);
      for (std::size_t lane = 0; lane < kLanes; ++lane)
        for (std::size_t k = 0; k < 4; ++k) states[k][lane] = wide.lanes[lane][k];
    } else {
      for (std::size_t i = 0; i < jobs.size(); ++i)
        if (step < jobs[i].steps) permute(states[i]);
    }
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) jobs[i].finish(states[i]);
}

}  // namespace

std::vector<std::vector<std::uint8_t>> shake_batch(std::span<const BatchRequest> requests) {
  std::vector<std::vector<std::uint8_t>> outputs;
  outputs.reserve(requests.size());
  for (const auto& r : requests) outputs.emplace_back(r.out_len);

  for (std::size_t base = 0; base < requests.size(); base += 4) {
    const std::size_t count = std::min<std::size_t>(4, requests.size() - base);
    std::vector<Job> jobs;
    jobs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) jobs.emplace_back(requests[base + i].input, outputs[base + i]);
    run_group(jobs);
  }
  return outputs;
}

}  // namespace hqc::keccak
