#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"

namespace {

using namespace hqc;
using namespace hqc::bench;

std::vector<Level> levels_for(const std::string& param) {
  if (param == "all") return {Level::hqc1, Level::hqc3, Level::hqc5};
  return {*parse_level(param)};
}

std::vector<Operation> operations_for(const std::string& op) {
  if (op == "keygen") return {Operation::keygen};
  if (op == "encaps") return {Operation::encaps};
  if (op == "decaps") return {Operation::decaps};
  return {Operation::keygen, Operation::encaps, Operation::decaps};
}

std::vector<std::size_t> parse_thresholds(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size() || v == 0) throw std::invalid_argument("bad threshold: " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty threshold list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HQC KEM benchmark and self-test"};
  app.require_subcommand(1);

  std::string param = "all";
  std::string op = "all";
  std::size_t iters = 100;
  std::string variant = "optimized";
  std::string format = "table";
  std::string seed_hex;
  std::string sweep;
  bool parallel = false;

  auto* bench_cmd = app.add_subcommand("bench", "Time keygen, encaps and decaps");
  bench_cmd->add_option("--param", param, "Parameter set")->check(CLI::IsMember({"hqc1", "hqc3", "hqc5", "all"}));
  bench_cmd->add_option("--op", op, "Operation")->check(CLI::IsMember({"keygen", "encaps", "decaps", "all"}));
  bench_cmd->add_option("--iters", iters, "Measured iterations")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--variant", variant, "Kernel set")->check(CLI::IsMember({"optimized", "baseline"}));
  bench_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  bench_cmd->add_option("--seed", seed_hex, "Run seed, up to 64 hex digits");
  bench_cmd->add_option("--sweep-threshold", sweep, "Comma-separated sparse/dense thresholds to sweep");
  bench_cmd->add_flag("--parallel", parallel, "Run parameter sets on separate threads");

  bool corrupt = false;
  auto* self_cmd = app.add_subcommand("selftest", "Differential and known-answer checks");
  self_cmd->add_flag("--corrupt-encode-table", corrupt)->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (self_cmd->parsed()) {
      SelfTestOptions options;
      options.corrupt_encode_table = corrupt;
      const auto results = self_test(options);
      std::cout << to_table(results);
      const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed; });
      std::cout << (ok ? "selftest: all suites passed\n" : "selftest: FAILED\n");
      return ok ? 0 : 1;
    }

    const auto levels = levels_for(param);
    if (!sweep.empty()) {
      const auto thresholds = parse_thresholds(sweep);
      std::vector<SweepReport> reports;
      for (const Level level : levels) reports.push_back(sweep_threshold(level, thresholds, iters));
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << (format == "csv" ? to_csv(reports) : to_table(reports));
      }
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const SweepReport& r) { return r.outputs_identical; });
      return ok ? 0 : 1;
    }

    BenchConfig config;
    config.levels = levels;
    config.operations = operations_for(op);
    config.iterations = iters;
    config.variant = variant == "baseline" ? Variant::baseline : Variant::optimized;
    config.parallel = parallel;
    if (!seed_hex.empty()) {
      const auto seed = parse_seed_hex(seed_hex);
      if (!seed) {
        std::cerr << "--seed: expected up to 64 hex digits\n";
        return 2;
      }
      config.run_seed = *seed;
    }
    const auto reports = run_bench(config);
    if (format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : reports) j.push_back(to_json(r));
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << (format == "csv" ? to_csv(reports) : to_table(reports));
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
