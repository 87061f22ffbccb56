#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hqc/backend.hpp"
#include "hqc/instrument.hpp"
#include "hqc/params.hpp"

namespace hqc::bench {

enum class Operation { keygen, encaps, decaps };
enum class Variant { optimized, baseline };

[[nodiscard]] std::string_view name(Operation op) noexcept;
[[nodiscard]] std::string_view name(Variant v) noexcept;
[[nodiscard]] const Backend& backend_for(Variant v) noexcept;

struct ComponentTiming {
  instrument::Component component;
  double total_ns = 0;
  double mean_ns = 0;
  double percent = 0;
};

struct BenchReport {
  std::string param_set;
  Operation operation = Operation::keygen;
  Variant variant = Variant::optimized;
  std::size_t iterations = 0;
  std::vector<ComponentTiming> components;  // one per Component, in enum order
  double mean_ns = 0;
  double median_ns = 0;
  double min_ns = 0;
  std::optional<double> mean_cycles;
  /// SHAKE256 digest over every key, ciphertext and shared secret produced.
  std::string output_digest;
};

struct BenchConfig {
  std::vector<Level> levels;
  std::vector<Operation> operations;
  std::size_t iterations = 100;
  std::size_t warmup = 10;
  Variant variant = Variant::optimized;
  std::vector<std::uint8_t> run_seed = std::vector<std::uint8_t>(32, 0);
  /// Attach the span profiler. Wall-clock totals are measured either way.
  bool profile = true;
  /// Run parameter sets on separate threads.
  bool parallel = false;
};

[[nodiscard]] std::vector<BenchReport> run_bench(const BenchConfig& config);

/// Accumulates exclusive time per component: time inside nested spans is
/// charged to the innermost one, time outside every span to `other`.
class Profiler final : public instrument::Sink {
 public:
  void start();
  void stop();
  void enter(instrument::Component c) override;
  void leave(instrument::Component c) override;

  [[nodiscard]] const std::array<double, instrument::kComponentCount>& totals_ns() const noexcept { return totals_; }
  void reset() noexcept;

 private:
  void charge();

  std::array<double, instrument::kComponentCount> totals_{};
  std::vector<instrument::Component> stack_;
  std::int64_t mark_ = 0;
};

struct SweepRow {
  std::size_t threshold = 0;
  std::size_t weight = 0;
  std::string route;  // "sparse" or "dense"
  double mean_ns = 0;
};

struct SweepReport {
  std::string param_set;
  std::size_t iterations = 0;
  std::vector<SweepRow> rows;
  /// Per-weight forced-route timings used to locate the cross-over.
  std::vector<SweepRow> calibration;
  std::optional<std::size_t> crossover_weight;
  bool outputs_identical = true;
};

[[nodiscard]] SweepReport sweep_threshold(Level level, const std::vector<std::size_t>& thresholds,
                                          std::size_t iterations, std::uint64_t seed = 1);

struct SelfTestOptions {
  std::vector<Level> levels = {Level::hqc1, Level::hqc3, Level::hqc5};
  std::size_t kem_trials = 20;
  std::size_t ring_trials = 10;
  /// Flip one encode-table entry before the rs_encode differential suite.
  bool corrupt_encode_table = false;
};

struct SuiteResult {
  std::string suite;
  std::string param_set;  // "-" for parameter-independent suites
  bool passed = false;
  std::string detail;
};

[[nodiscard]] std::vector<SuiteResult> self_test(const SelfTestOptions& options);

// Output.
[[nodiscard]] nlohmann::json to_json(const BenchReport& r);
[[nodiscard]] nlohmann::json to_json(const SweepReport& r);
[[nodiscard]] std::string to_csv(const std::vector<BenchReport>& reports);
[[nodiscard]] std::string to_table(const std::vector<BenchReport>& reports);
[[nodiscard]] std::string to_csv(const std::vector<SweepReport>& reports);
[[nodiscard]] std::string to_table(const std::vector<SweepReport>& reports);
[[nodiscard]] std::string to_table(const std::vector<SuiteResult>& results);

/// Parses up to 64 hex digits; shorter input is zero-padded to 32 bytes.
[[nodiscard]] std::optional<std::vector<std::uint8_t>> parse_seed_hex(std::string_view hex);

}  // namespace hqc::bench
