#include "ispec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "ispec/errors.hpp"
#include "ispec/nullity.hpp"
#include "ispec/oracle.hpp"
#include "ispec/spectrum.hpp"

namespace ispec {
namespace {

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  unsigned workers = jobs > 0 ? unsigned(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
}

struct InstanceCheck {
  double spectrum_deviation = 0.0;
  double eigenvector_residual = 0.0;
  double quadratic_residual = 0.0;
  bool connectivity_ok = true;
  bool bipartite_ok = true;
  bool nullity_ok = true;
  bool rowlinson_ok = true;
  std::string error;
};

InstanceCheck check_instance(const IGraphParams& p, const VerifyOptions& opts) {
  InstanceCheck out;
  const Spectrum spec = full_spectrum(p);
  const AdjacencyMatrix adj = build_adjacency(p);

  std::vector<double> closed = spec.sorted_values();
  for (double& v : closed) v += opts.fault;
  std::sort(closed.begin(), closed.end());
  const std::vector<double> brute =
      oracle::eigenvalues_bruteforce(oracle::DenseSymmetricMatrix::from_adjacency(adj));
  for (std::size_t i = 0; i < closed.size(); ++i)
    out.spectrum_deviation = std::max(out.spectrum_deviation, std::abs(closed[i] - brute[i]));

  for (const auto& pt : spec.points) {
    EigenPair pair = eigenvector(p, pt.l, pt.branch);
    pair.point.value += opts.fault;
    out.eigenvector_residual =
        std::max(out.eigenvector_residual, oracle::residual(adj, pair) / (1.0 + std::abs(pair.point.value)));
    SpectralPoint shifted = pt;
    shifted.value += opts.fault;
    out.quadratic_residual = std::max(out.quadratic_residual, quadratic_residual(p, shifted));
  }

  // Spectral decisions use the (possibly faulted) closed-form values.
  Spectrum faulted = spec;
  for (auto& pt : faulted.points) pt.value += opts.fault;
  const int components = oracle::bfs_components(adj);
  const int mult3 = multiplicity_of_three(faulted, opts.tolerance);
  out.connectivity_ok = (is_connected_gcd(p) == (components == 1)) && components == mult3;

  const bool coloured = oracle::two_coloring(adj);
  out.bipartite_ok = is_bipartite_spectral(faulted, opts.tolerance) == coloured;
  if (auto parity = is_bipartite_parity(p)) out.bipartite_ok = out.bipartite_ok && *parity == coloured;

  int eta = 0;
  for (double v : closed) eta += std::abs(v) <= opts.tolerance ? 1 : 0;
  if (p.k() == 2 * p.j()) {
    int oracle_eta = 0;
    for (double v : brute) oracle_eta += std::abs(v) <= 1e-6 ? 1 : 0;
    const int cert_eta = nullity_certificate(p).eta;
    out.nullity_ok = cert_eta == eta && cert_eta == oracle_eta;
  }
  out.rowlinson_ok = rowlinson_bound_holds(p, eta).value_or(true);
  return out;
}

}  // namespace

void SweepRange::validate() const {
  if (n_min < 3) throw InvalidParams("sweep n_min must be at least 3");
  if (n_max < n_min) throw InvalidParams("sweep n_max must be at least n_min");
}

std::vector<IGraphParams> SweepRange::enumerate() const {
  validate();
  std::vector<IGraphParams> out;
  for (int n = n_min; n <= n_max; ++n) {
    const int top = (n - 1) / 2;
    for (int j = 1; j <= top; ++j) {
      if (k_twice_j) {
        if (2 * j <= top) out.push_back(validate_and_canonicalize(n, j, 2 * j));
        continue;
      }
      for (int k = j; k <= top; ++k) out.push_back(validate_and_canonicalize(n, j, k));
    }
  }
  return out;
}

SweepRow sweep_row(const IGraphParams& p, double tol) {
  const Spectrum spec = full_spectrum(p);
  SweepRow row{p};
  row.gcd = gcd_njk(p);
  row.connected = row.gcd == 1;
  row.bipartite = is_bipartite_spectral(spec, tol);
  row.eta = p.k() == 2 * p.j() ? nullity_certificate(p).eta : nullity_numeric(p, tol).eta;
  const auto values = spec.sorted_values();
  row.lambda_min = values.front();
  row.lambda_max = values.back();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepRange& range, int jobs, double tol) {
  const auto params = range.enumerate();
  std::vector<std::optional<SweepRow>> slots(params.size());
  parallel_for(params.size(), jobs, [&](std::size_t i) { slots[i] = sweep_row(params[i], tol); });
  std::vector<SweepRow> rows;
  rows.reserve(slots.size());
  for (auto& s : slots) rows.push_back(std::move(*s));
  return rows;
}

VerifyReport run_verify(const SweepRange& range, const VerifyOptions& opts) {
  const auto params = range.enumerate();
  std::vector<InstanceCheck> checks(params.size());
  parallel_for(params.size(), opts.jobs, [&](std::size_t i) {
    try {
      checks[i] = check_instance(params[i], opts);
    } catch (const std::exception& e) {
      checks[i].error = e.what();
    }
  });

  VerifyReport report;
  report.instances = static_cast<int>(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& c = checks[i];
    const std::string name = to_string(params[i]);
    if (!c.error.empty()) {
      report.failures.push_back(name + ": " + c.error);
      continue;
    }
    report.max_spectrum_deviation = std::max(report.max_spectrum_deviation, c.spectrum_deviation);
    report.max_eigenvector_residual = std::max(report.max_eigenvector_residual, c.eigenvector_residual);
    report.max_quadratic_residual = std::max(report.max_quadratic_residual, c.quadratic_residual);
    if (c.spectrum_deviation > opts.tolerance) report.failures.push_back(name + ": spectrum deviation");
    if (c.eigenvector_residual > 1e-9) report.failures.push_back(name + ": eigenvector residual");
    if (c.quadratic_residual > 1e-9) report.failures.push_back(name + ": quadratic residual");
    if (!c.connectivity_ok) {
      ++report.connectivity_mismatches;
      report.failures.push_back(name + ": connectivity mismatch");
    }
    if (!c.bipartite_ok) {
      ++report.bipartite_mismatches;
      report.failures.push_back(name + ": bipartite mismatch");
    }
    if (!c.nullity_ok) {
      ++report.nullity_mismatches;
      report.failures.push_back(name + ": nullity mismatch");
    }
    if (!c.rowlinson_ok) {
      ++report.rowlinson_violations;
      report.failures.push_back(name + ": eta exceeds n + 1");
    }
  }
  return report;
}

}  // namespace ispec
