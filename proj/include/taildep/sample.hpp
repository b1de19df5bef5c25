#pragma once

#include <cstddef>
#include <vector>

namespace taildep {

/// Raw bivariate observations; the unit of ingestion and estimation.
/// Coordinates are stored column-wise, pair i is (x1[i], x2[i]).
struct BivariateSample {
  std::vector<double> x1;
  std::vector<double> x2;

  std::size_t size() const { return x1.size(); }
};

/// Rank pseudo-observations u = rank/(n+1), strictly inside (0,1)^2.
/// Margin-free representation feeding all estimators.
struct PseudoSample {
  std::vector<double> u1;
  std::vector<double> u2;

  std::size_t size() const { return u1.size(); }
};

}  // namespace taildep
