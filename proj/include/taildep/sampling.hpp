#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "taildep/bev_model.hpp"
#include "taildep/sample.hpp"

namespace taildep {

struct SamplerConfig {
  std::uint64_t seed = 0;
  double root_tolerance = 1e-12;
  int max_bisection_steps = 200;  // must be >= 60
};

/// One draw in uniform-margin representation, strictly interior to (0,1)^2.
struct UnitSquarePair {
  double u;
  double v;
};

/// Draws n i.i.d. pairs from the model copula by conditional inversion:
/// U is a uniform draw, V solves dC/du(U, V) = P for an independent uniform P
/// by bisection on [1e-15, 1-1e-15]. Identical (seed, model, n) inputs
/// reproduce identical output bit-for-bit.
std::vector<UnitSquarePair> sample_copula(const BevModel& model, std::size_t n,
                                          const SamplerConfig& cfg);

/// Maps uniform-margin pairs to unit Frechet margins, x = -1/log(u).
BivariateSample to_frechet(const std::vector<UnitSquarePair>& pairs);

}  // namespace taildep
