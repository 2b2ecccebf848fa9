#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ispec/igraph.hpp"
#include "ispec/oracle.hpp"
#include "ispec/sweep.hpp"

namespace ispec::testing {

inline std::vector<IGraphParams> all_params(int n_max, int n_min = 3) { return SweepRange{n_min, n_max, false}.enumerate(); }

inline std::vector<double> dense_spectrum(const IGraphParams& p) {
  return oracle::eigenvalues_bruteforce(oracle::DenseSymmetricMatrix::from_adjacency(build_adjacency(p)));
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Random symmetric 0/1 first row of length n with entry 0 free as well.
inline std::vector<double> random_symmetric_row(std::mt19937& rng, int n, bool zero_diagonal = true) {
  std::bernoulli_distribution coin(0.5);
  std::vector<double> row(std::size_t(n), 0.0);
  if (!zero_diagonal) row[0] = coin(rng) ? 1.0 : 0.0;
  for (int t = 1; t <= n / 2; ++t) {
    const double v = coin(rng) ? 1.0 : 0.0;
    row[std::size_t(t)] = v;
    row[std::size_t(n - t)] = v;
  }
  return row;
}

}  // namespace ispec::testing
