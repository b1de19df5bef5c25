#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "taildep/sample.hpp"

namespace taildep {

enum class Method { New, Huang, NewKnownMargins };

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
};

/// A TDC point estimate. value_raw may leave [0,1] near tail independence at
/// small n; value_clamped = min(1, max(0, value_raw)). k is present exactly
/// when method == Huang.
struct TdcEstimate {
  double value_raw = 0.0;
  double value_clamped = 0.0;
  Method method = Method::New;
  std::optional<int> k;
  std::optional<ConfidenceInterval> ci;
  bool plateau_fallback = false;  // set when auto k selection found no plateau
};

/// Threshold-estimate path over every admissible k = 1..n-1.
struct KPath {
  std::vector<int> k;
  std::vector<double> lambda_h;
};

/// Tuning for the plateau scan used to pick k; defaults follow the usual
/// moving-average heuristic and can be overridden.
struct PlateauConfig {
  double smooth_fraction = 0.005;  // half-width b = max(1, floor(fraction*n))
  double band_multiplier = 2.0;    // plateau band, in units of the path std
};

struct KSelection {
  int k = 0;
  double estimate = 0.0;
  bool plateau_found = false;
};

/// Rank transform: u_j = rank/(n+1) per margin, ties averaged, input order
/// preserved. Requires n >= 2 and no NaN entries.
PseudoSample rank_transform(const BivariateSample& sample);

/// Rank-based TDC estimator 3 - 1/(1 - M), M = mean of max(u1, u2).
/// For rank input the raw value never exceeds 1, with equality exactly on
/// comonotone samples.
TdcEstimate tdc_new(const PseudoSample& ps);

/// Empirical stable tail dependence function at (x1, x2), x1, x2 > 0:
/// M_x/(1 - M_x) with M_x = mean of max(u1^(1/x1), u2^(1/x2)).
/// At (1,1) the identity tdc_new == 2 - stdf_empirical holds.
double stdf_empirical(const PseudoSample& ps, double x1, double x2);

/// Threshold TDC estimator 2 - (1/k) * #{i : u1 > 1-k/n or u2 > 1-k/n}
/// for a fixed threshold count k in [1, n-1].
TdcEstimate tdc_huang(const PseudoSample& ps, int k);

/// Full threshold-estimate path, one pass over sorted ranks (O(n log n)).
KPath huang_kpath(const PseudoSample& ps);

/// Plateau selection over a k-path: smooth with a centered moving average,
/// scan for the first window of length floor(sqrt(n-2b)) whose deviations
/// stay inside band_multiplier * std of the smoothed path, and average it.
/// Falls back to k = floor(sqrt(n)) with plateau_found = false.
KSelection select_k(const KPath& path, std::size_t n,
                    const PlateauConfig& cfg = {});

/// Threshold estimator with automatic k: huang_kpath + select_k packaged as
/// an estimate. The same code path backs the CLI and the simulation harness.
TdcEstimate tdc_huang_auto(const PseudoSample& ps, const PlateauConfig& cfg = {});

/// TDC estimator when the marginal distributions are known: u_j = cdf_j(x_j)
/// instead of ranks. The raw value is not bounded by 1 in finite samples.
TdcEstimate tdc_new_known_margins(const BivariateSample& sample,
                                  const std::function<double(double)>& cdf1,
                                  const std::function<double(double)>& cdf2);

/// Asymptotic variance of the known-margins estimator, l(1+l)^2/(2+l),
/// for l = l(1,1) in [1, 2].
double asymptotic_variance(double l11);

/// Attaches a confidence interval to an estimate computed from ps.
/// Rank-based methods get a percentile bootstrap (resample pairs, re-rank,
/// re-estimate; resamples >= 200); the known-margins method gets a normal
/// interval from asymptotic_variance. Results are independent of the worker
/// count: resample b always uses the same derived seed.
TdcEstimate ci_tdc(const TdcEstimate& est, const PseudoSample& ps, double level,
                   int resamples, std::uint64_t seed, int threads = 1);

}  // namespace taildep
