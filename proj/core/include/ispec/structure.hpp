#pragma once

#include <optional>

#include "ispec/igraph.hpp"
#include "ispec/spectrum.hpp"

namespace ispec {

inline constexpr double kDefaultTolerance = 1e-8;

int gcd_njk(const IGraphParams& p);

bool is_connected_gcd(const IGraphParams& p);

/// Number of points with |value - 3| <= tol.
int multiplicity_of_three(const Spectrum& spec, double tol = kDefaultTolerance);

/// True iff the sorted eigenvalues equal their negation elementwise within tol.
bool is_bipartite_spectral(const Spectrum& spec, double tol = kDefaultTolerance);

/// n even and j, k odd. Empty for disconnected graphs, where the criterion
/// does not apply (I(12,2,2) is bipartite with even steps).
std::optional<bool> is_bipartite_parity(const IGraphParams& p);

/// Index l' with lambda_l^+ + lambda_{l'}^- = 0: n/2 - l for l <= n/2,
/// else 3n/2 - l. Requires n even and j, k odd.
int symmetry_pairing(const IGraphParams& p, int l);

struct StructureReport {
  bool connected = false;          // gcd criterion
  int component_count = 0;         // BFS oracle
  int mult_of_3 = 0;               // spectral
  bool bipartite = false;          // two-coloring oracle
  bool spectrum_symmetric = false;
  std::optional<bool> bipartite_parity;
  int gcd_njk = 1;
};

StructureReport structure_report(const IGraphParams& p, double tol = kDefaultTolerance);

}  // namespace ispec
