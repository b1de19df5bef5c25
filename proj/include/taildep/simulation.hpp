#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taildep/bev_model.hpp"
#include "taildep/estimators.hpp"

namespace taildep {

struct SimulationConfig {
  std::vector<BevModel> models;
  std::vector<int> sizes{50, 100, 500, 1000};
  int replications = 1000;
  std::uint64_t base_seed = 0;
  bool run_new = true;
  bool run_huang = true;
  int threads = 1;  // 0 = hardware concurrency; affects speed only
  PlateauConfig plateau{};
};

struct EstimatorStats {
  double bias = 0.0;  // signed mean error
  double abs_bias = 0.0;
  double rmse = 0.0;
  double mean = 0.0;
  double stdev = 0.0;
  int count = 0;
};

struct SimulationCell {
  std::string model_spec;
  int n = 0;
  double true_tdc = 0.0;
  std::optional<EstimatorStats> estimator_new;
  std::optional<EstimatorStats> estimator_huang;
  double seconds = 0.0;  // diagnostic only; excluded from default serialization
};

struct SimulationReport {
  std::vector<std::string> model_specs;
  std::vector<int> sizes;
  int replications = 0;
  std::uint64_t base_seed = 0;
  bool has_new = false;
  bool has_huang = false;
  std::vector<SimulationCell> cells;  // one per (model, n), config order
  double total_seconds = 0.0;
};

/// Runs the Monte Carlo study: for every (model, n, replication) draw a
/// sample, rank-transform it and apply the requested estimators, then
/// aggregate bias/abs_bias/rmse/mean/std per cell. Replication r of a cell
/// always samples with replication_seed(base_seed, spec, n, r), so reports
/// are identical across reruns, thread counts and cell orderings.
SimulationReport run_study(const SimulationConfig& cfg);

struct ComparisonRow {
  std::string model_spec;
  int n = 0;
  double rmse_new = 0.0;
  double rmse_huang = 0.0;
  double ratio = 0.0;  // huang / new
};

struct EstimatorComparison {
  std::vector<ComparisonRow> rows;
  int new_wins = 0;  // cells where the rank-based estimator has lower rmse
};

/// Per-cell rmse comparison; requires both estimators in every cell.
EstimatorComparison compare_estimators(const SimulationReport& report);

/// Deterministic serializations. Timing fields are emitted only when
/// with_timings is set, so default reports are byte-identical across runs.
std::string report_to_json(const SimulationReport& report, bool with_timings = false);
std::string report_to_csv(const SimulationReport& report, bool with_timings = false);

/// Seed for one replication stream: base_seed XOR a stable hash of
/// (model spec, n, replication). Adding models or sizes to a config never
/// shifts the streams of existing cells.
std::uint64_t replication_seed(std::uint64_t base_seed, std::string_view model_spec,
                               int n, int replication);

}  // namespace taildep
