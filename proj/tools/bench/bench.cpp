#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "hqc/codec.hpp"
#include "hqc/kem.hpp"
#include "hqc/oracle/oracle.hpp"
#include "hqc/prng.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define HQC_HAVE_RDTSC 1
#endif

namespace hqc::bench {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t now_ns() {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now().time_since_epoch()).count();
}

std::optional<std::uint64_t> cycles() {
#ifdef HQC_HAVE_RDTSC
  return __rdtsc();
#else
  return std::nullopt;
#endif
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  std::ostringstream os;
  for (const auto b : bytes) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
  return os.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

BenchReport run_operation(const ParamSet& params, Operation op, const BenchConfig& config) {
  const Backend& backend = backend_for(config.variant);
  std::vector<std::uint8_t> stream_seed = config.run_seed;
  stream_seed.push_back(static_cast<std::uint8_t>(params.level));
  stream_seed.push_back(static_cast<std::uint8_t>(op));
  Prng seeds(stream_seed);

  const kem::KeyPair fixed = kem::keygen(seeds.bytes(kSeedBytes), params, backend);

  Profiler profiler;
  keccak::Shake256 digest;
  std::vector<double> wall;
  std::vector<double> cycle_counts;
  const std::size_t total = config.warmup + config.iterations;

  for (std::size_t it = 0; it < total; ++it) {
    const bool measured = it >= config.warmup;
    const std::vector<std::uint8_t> input = seeds.bytes(kSeedBytes);
    std::optional<kem::Encapsulation> prepared;
    if (op == Operation::decaps) prepared = kem::encap(fixed.pk, input, params, backend);

    std::vector<std::uint8_t> output;
    std::optional<instrument::ScopedSink> sink;
    if (config.profile && measured) {
      sink.emplace(&profiler);
      profiler.start();
    }
    const auto c0 = cycles();
    const std::int64_t t0 = now_ns();
    switch (op) {
      case Operation::keygen: {
        const kem::KeyPair kp = kem::keygen(input, params, backend);
        const std::int64_t t1 = now_ns();
        const auto c1 = cycles();
        if (sink) profiler.stop();
        sink.reset();
        wall.push_back(static_cast<double>(t1 - t0));
        if (c0 && c1) cycle_counts.push_back(static_cast<double>(*c1 - *c0));
        output = kem::serialize(kp.sk);
        break;
      }
      case Operation::encaps: {
        const kem::Encapsulation enc = kem::encap(fixed.pk, input, params, backend);
        const std::int64_t t1 = now_ns();
        const auto c1 = cycles();
        if (sink) profiler.stop();
        sink.reset();
        wall.push_back(static_cast<double>(t1 - t0));
        if (c0 && c1) cycle_counts.push_back(static_cast<double>(*c1 - *c0));
        output = kem::serialize(enc.ct);
        output.insert(output.end(), enc.key.begin(), enc.key.end());
        break;
      }
      case Operation::decaps: {
        const kem::SharedSecret key = kem::decap(fixed.sk, prepared->ct, params, backend);
        const std::int64_t t1 = now_ns();
        const auto c1 = cycles();
        if (sink) profiler.stop();
        sink.reset();
        wall.push_back(static_cast<double>(t1 - t0));
        if (c0 && c1) cycle_counts.push_back(static_cast<double>(*c1 - *c0));
        output.assign(key.begin(), key.end());
        break;
      }
    }
    if (!measured) {
      wall.clear();
      cycle_counts.clear();
      continue;
    }
    digest.absorb(output);
  }

  BenchReport report;
  report.param_set = std::string(params.name);
  report.operation = op;
  report.variant = config.variant;
  report.iterations = config.iterations;
  report.mean_ns = std::accumulate(wall.begin(), wall.end(), 0.0) / static_cast<double>(wall.size());
  report.median_ns = median(wall);
  report.min_ns = *std::min_element(wall.begin(), wall.end());
  if (!cycle_counts.empty()) {
    report.mean_cycles =
        std::accumulate(cycle_counts.begin(), cycle_counts.end(), 0.0) / static_cast<double>(cycle_counts.size());
  }

  const auto& totals = profiler.totals_ns();
  const double sum = std::accumulate(totals.begin(), totals.end(), 0.0);
  for (std::size_t c = 0; c < instrument::kComponentCount; ++c) {
    ComponentTiming t;
    t.component = static_cast<instrument::Component>(c);
    t.total_ns = totals[c];
    t.mean_ns = totals[c] / static_cast<double>(config.iterations);
    t.percent = sum > 0 ? 100.0 * totals[c] / sum : 0.0;
    report.components.push_back(t);
  }

  std::vector<std::uint8_t> d(32);
  digest.squeeze(d);
  report.output_digest = to_hex(d);
  return report;
}

}  // namespace

std::string_view name(Operation op) noexcept {
  switch (op) {
    case Operation::keygen: return "keygen";
    case Operation::encaps: return "encaps";
    case Operation::decaps: return "decaps";
  }
  return "?";
}

std::string_view name(Variant v) noexcept { return v == Variant::optimized ? "optimized" : "baseline"; }

const Backend& backend_for(Variant v) noexcept {
  return v == Variant::optimized ? optimized_backend() : oracle::baseline_backend();
}

void Profiler::start() {
  stack_.clear();
  mark_ = now_ns();
}

void Profiler::stop() {
  charge();
  stack_.clear();
}

void Profiler::enter(instrument::Component c) {
  charge();
  stack_.push_back(c);
}

void Profiler::leave(instrument::Component) {
  charge();
  if (!stack_.empty()) stack_.pop_back();
}

void Profiler::reset() noexcept {
  totals_.fill(0);
  stack_.clear();
}

void Profiler::charge() {
  const std::int64_t t = now_ns();
  const auto target = stack_.empty() ? instrument::Component::other : stack_.back();
  totals_[static_cast<std::size_t>(target)] += static_cast<double>(t - mark_);
  mark_ = t;
}

std::vector<BenchReport> run_bench(const BenchConfig& config) {
  if (config.iterations == 0) throw std::invalid_argument("iterations must be at least 1");
  std::vector<std::vector<BenchReport>> per_level(config.levels.size());
  auto run_level = [&](std::size_t i) {
    const ParamSet& params = get_params(config.levels[i]);
    for (const Operation op : config.operations) per_level[i].push_back(run_operation(params, op, config));
  };
  if (config.parallel) {
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < config.levels.size(); ++i) workers.emplace_back(run_level, i);
    for (auto& w : workers) w.join();
  } else {
    for (std::size_t i = 0; i < config.levels.size(); ++i) run_level(i);
  }
  std::vector<BenchReport> out;
  for (auto& v : per_level) out.insert(out.end(), v.begin(), v.end());
  return out;
}

SweepReport sweep_threshold(Level level, const std::vector<std::size_t>& thresholds, std::size_t iterations,
                            std::uint64_t seed) {
  if (thresholds.empty()) throw std::invalid_argument("threshold list must not be empty");
  if (iterations == 0) throw std::invalid_argument("iterations must be at least 1");
  const ParamSet& params = get_params(level);
  SweepReport report;
  report.param_set = std::string(params.name);
  report.iterations = iterations;

  std::vector<std::uint8_t> seed_bytes(8);
  for (std::size_t i = 0; i < 8; ++i) seed_bytes[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  Prng prng(seed_bytes);
  const RingElement dense = sample_dense(prng, params);

  auto time_mul = [&](const SparseVector& s, std::size_t threshold, RingElement& out) {
    out = mul(s, dense, threshold);
    const std::int64_t t0 = now_ns();
    for (std::size_t i = 0; i < iterations; ++i) out = mul(s, dense, threshold);
    return static_cast<double>(now_ns() - t0) / static_cast<double>(iterations);
  };

  const std::vector<std::size_t> table_weights = {66, 100, 131, 149};
  for (const std::size_t w : table_weights) {
    const SparseVector s = sample_fixed_weight(prng, w, params);
    std::optional<RingElement> reference;
    for (const std::size_t threshold : thresholds) {
      if (threshold == 0) throw std::invalid_argument("thresholds must be positive");
      RingElement out(params);
      const double ns = time_mul(s, threshold, out);
      if (!reference) reference = out;
      report.outputs_identical = report.outputs_identical && out == *reference;
      const bool sparse = select_route(w, threshold) == MulRoute::sparse;
      report.rows.push_back({threshold, w, sparse ? "sparse" : "dense", ns});
    }
  }

  const std::vector<std::size_t> grid = {66, 100, 131, 149, 256, 512, 1024, 2048, 4096, 8192};
  const std::size_t always_sparse = std::numeric_limits<std::size_t>::max();
  for (const std::size_t w : grid) {
    const SparseVector s = sample_fixed_weight(prng, w, params);
    RingElement a(params), b(params);
    const double sparse_ns = time_mul(s, always_sparse, a);
    const double dense_ns = time_mul(s, 1, b);
    report.outputs_identical = report.outputs_identical && a == b;
    report.calibration.push_back({always_sparse, w, "sparse", sparse_ns});
    report.calibration.push_back({1, w, "dense", dense_ns});
    if (!report.crossover_weight && dense_ns < sparse_ns) report.crossover_weight = w;
  }
  return report;
}

std::optional<std::vector<std::uint8_t>> parse_seed_hex(std::string_view hex) {
  if (hex.size() > 2 * kSeedBytes || hex.size() % 2 != 0) return std::nullopt;
  std::vector<std::uint8_t> out(kSeedBytes, 0);
  auto digit = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  for (std::size_t i = 0; i < hex.size() / 2; ++i) {
    const int hi = digit(hex[2 * i]);
    const int lo = digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

nlohmann::json to_json(const BenchReport& r) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : r.components) {
    components.push_back({{"component", std::string(instrument::name(c.component))},
                          {"total_ns", c.total_ns},
                          {"mean_ns", c.mean_ns},
                          {"percent", c.percent}});
  }
  nlohmann::json j = {{"param_set", r.param_set},
                      {"operation", std::string(name(r.operation))},
                      {"variant", std::string(name(r.variant))},
                      {"iterations", r.iterations},
                      {"components", components},
                      {"wall_ns", {{"mean", r.mean_ns}, {"median", r.median_ns}, {"min", r.min_ns}}},
                      {"output_digest", r.output_digest}};
  j["mean_cycles"] = r.mean_cycles ? nlohmann::json(*r.mean_cycles) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SweepReport& r) {
  auto rows = [](const std::vector<SweepRow>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& row : v) {
      a.push_back({{"threshold", row.threshold}, {"weight", row.weight}, {"route", row.route}, {"mean_ns", row.mean_ns}});
    }
    return a;
  };
  nlohmann::json j = {{"param_set", r.param_set},
                      {"iterations", r.iterations},
                      {"rows", rows(r.rows)},
                      {"calibration", rows(r.calibration)},
                      {"outputs_identical", r.outputs_identical}};
  j["crossover_weight"] = r.crossover_weight ? nlohmann::json(*r.crossover_weight) : nlohmann::json(nullptr);
  return j;
}

std::string to_csv(const std::vector<BenchReport>& reports) {
  std::ostringstream os;
  os << "param,op,variant,component,mean_ns,percent\n";
  os << std::fixed << std::setprecision(2);
  for (const auto& r : reports) {
    for (const auto& c : r.components) {
      os << r.param_set << ',' << name(r.operation) << ',' << name(r.variant) << ',' << instrument::name(c.component)
         << ',' << c.mean_ns << ',' << c.percent << '\n';
    }
    os << r.param_set << ',' << name(r.operation) << ',' << name(r.variant) << ",total," << r.mean_ns << ",100.00\n";
  }
  return os.str();
}

std::string to_table(const std::vector<BenchReport>& reports) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  for (const auto& r : reports) {
    os << r.param_set << ' ' << name(r.operation) << " (" << name(r.variant) << ", " << r.iterations
       << " iterations)\n";
    os << "  mean " << r.mean_ns / 1000 << " us   median " << r.median_ns / 1000 << " us   min " << r.min_ns / 1000
       << " us";
    if (r.mean_cycles) os << "   " << std::setprecision(0) << *r.mean_cycles << " cycles" << std::setprecision(1);
    os << '\n';
    for (const auto& c : r.components) {
      os << "    " << std::left << std::setw(14) << instrument::name(c.component) << std::right << std::setw(12)
         << c.mean_ns / 1000 << " us " << std::setw(7) << c.percent << " %\n";
    }
  }
  return os.str();
}

std::string to_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  os << "param,kind,threshold,weight,route,mean_ns\n" << std::fixed << std::setprecision(2);
  for (const auto& r : reports) {
    for (const auto& row : r.rows)
      os << r.param_set << ",sweep," << row.threshold << ',' << row.weight << ',' << row.route << ',' << row.mean_ns << '\n';
    for (const auto& row : r.calibration)
      os << r.param_set << ",calibration," << row.threshold << ',' << row.weight << ',' << row.route << ','
         << row.mean_ns << '\n';
  }
  return os.str();
}

std::string to_table(const std::vector<SweepReport>& reports) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  for (const auto& r : reports) {
    os << r.param_set << " threshold sweep (" << r.iterations << " iterations per point)\n";
    for (const auto& row : r.rows) {
      os << "  threshold " << std::setw(6) << row.threshold << "  weight " << std::setw(5) << row.weight << "  "
         << std::setw(6) << row.route << std::setw(12) << row.mean_ns / 1000 << " us\n";
    }
    os << "  cross-over: ";
    if (r.crossover_weight) {
      os << "dense faster from weight " << *r.crossover_weight << '\n';
    } else {
      os << "sparse faster at every measured weight\n";
    }
    os << "  outputs identical across thresholds: " << (r.outputs_identical ? "yes" : "NO") << '\n';
  }
  return os.str();
}

std::string to_table(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << r.suite << std::setw(6) << r.param_set
       << r.detail << '\n';
  }
  return os.str();
}

}  // namespace hqc::bench
