#include "ispec/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ispec/errors.hpp"
#include "ispec/oracle.hpp"

namespace ispec {

int gcd_njk(const IGraphParams& p) { return std::gcd(p.n(), std::gcd(p.j(), p.k())); }

bool is_connected_gcd(const IGraphParams& p) { return gcd_njk(p) == 1; }

int multiplicity_of_three(const Spectrum& spec, double tol) {
  return static_cast<int>(std::count_if(spec.points.begin(), spec.points.end(),
                                        [tol](const SpectralPoint& pt) { return std::abs(pt.value - 3.0) <= tol; }));
}

bool is_bipartite_spectral(const Spectrum& spec, double tol) {
  const std::vector<double> v = spec.sorted_values();
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs(v[i] + v[m - 1 - i]) > tol) return false;
  return true;
}

std::optional<bool> is_bipartite_parity(const IGraphParams& p) {
  if (!is_connected_gcd(p)) return std::nullopt;
  return p.n() % 2 == 0 && p.j() % 2 == 1 && p.k() % 2 == 1;
}

int symmetry_pairing(const IGraphParams& p, int l) {
  const int n = p.n();
  if (n % 2 != 0 || p.j() % 2 == 0 || p.k() % 2 == 0)
    throw InvalidParams("symmetry pairing needs n even and j, k odd, got " + to_string(p));
  if (l < 0 || l >= n) throw IndexOutOfRange("index l = " + std::to_string(l));
  return l <= n / 2 ? n / 2 - l : 3 * n / 2 - l;
}

StructureReport structure_report(const IGraphParams& p, double tol) {
  const Spectrum spec = full_spectrum(p);
  const AdjacencyMatrix adj = build_adjacency(p);
  StructureReport r;
  r.gcd_njk = gcd_njk(p);
  r.connected = r.gcd_njk == 1;
  r.component_count = oracle::bfs_components(adj);
  r.mult_of_3 = multiplicity_of_three(spec, tol);
  r.bipartite = oracle::two_coloring(adj);
  r.spectrum_symmetric = is_bipartite_spectral(spec, tol);
  r.bipartite_parity = is_bipartite_parity(p);
  return r;
}

}  // namespace ispec
