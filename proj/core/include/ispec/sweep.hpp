#pragma once

#include <string>
#include <vector>

#include "ispec/igraph.hpp"
#include "ispec/structure.hpp"

namespace ispec {

struct SweepRange {
  int n_min = 3;
  int n_max = 3;
  bool k_twice_j = false;  // restrict to I(n, j, 2j)

  void validate() const;

  /// Every canonical (n, j, k) in range, sorted.
  std::vector<IGraphParams> enumerate() const;
};

struct SweepRow {
  IGraphParams params;
  int gcd = 1;
  bool connected = false;
  bool bipartite = false;  // spectral symmetry
  int eta = 0;             // certificate when k = 2j, numeric otherwise
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

SweepRow sweep_row(const IGraphParams& p, double tol = kDefaultTolerance);

/// jobs <= 0 means hardware concurrency. Output order follows enumerate().
std::vector<SweepRow> run_sweep(const SweepRange& range, int jobs = 0, double tol = kDefaultTolerance);

struct VerifyOptions {
  double tolerance = kDefaultTolerance;
  int jobs = 0;
  // Added to every closed-form eigenvalue before comparison; fault injection.
  double fault = 0.0;
};

struct VerifyReport {
  int instances = 0;
  double max_spectrum_deviation = 0.0;
  double max_eigenvector_residual = 0.0;  // scaled by 1 / (1 + |lambda|)
  double max_quadratic_residual = 0.0;
  int connectivity_mismatches = 0;
  int bipartite_mismatches = 0;
  int nullity_mismatches = 0;
  int rowlinson_violations = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Oracle-vs-closed-form suite over the range.
VerifyReport run_verify(const SweepRange& range, const VerifyOptions& opts = {});

}  // namespace ispec
