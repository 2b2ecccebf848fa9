#include "ispec/igraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "ispec/errors.hpp"

namespace ispec {
namespace {

// Largest n accepted; keeps products like 10 * j * l well inside int64.
constexpr long long kMaxN = 1'000'000;

long long reduce_step(long long n, long long step, char name) {
  long long r = step % n;
  if (r < 0) r += n;
  r = std::min(r, n - r);
  if (r == 0 || 2 * r == n) {
    throw InvalidParams("non-simple graph: " + std::string(1, name) + " = " + std::to_string(step) +
                        " reduces to " + (r == 0 ? std::string("0") : std::string("n/2")) +
                        " modulo n = " + std::to_string(n));
  }
  return r;
}

void require_rim_step(int n, int step) {
  if (n < 3 || step < 1 || 2 * step >= n) {
    throw InvalidParams("rim step must satisfy 1 <= step < n/2 (n = " + std::to_string(n) +
                        ", step = " + std::to_string(step) + ")");
  }
}

}  // namespace

IGraphParams validate_and_canonicalize(long long n, long long j, long long k) {
  if (n < 3) throw InvalidParams("n must be at least 3, got " + std::to_string(n));
  if (n > kMaxN) throw InvalidParams("n must be at most " + std::to_string(kMaxN));
  long long jr = reduce_step(n, j, 'j');
  long long kr = reduce_step(n, k, 'k');
  if (jr > kr) std::swap(jr, kr);
  return IGraphParams(static_cast<int>(n), static_cast<int>(jr), static_cast<int>(kr));
}

std::string to_string(const IGraphParams& p) {
  return "I(" + std::to_string(p.n()) + "," + std::to_string(p.j()) + "," + std::to_string(p.k()) + ")";
}

int AdjacencyMatrix::degree(int v) const {
  int d = 0;
  for (int c = 0; c < order_; ++c) d += at(v, c) ? 1 : 0;
  return d;
}

std::vector<int> AdjacencyMatrix::neighbours(int v) const {
  std::vector<int> out;
  for (int c = 0; c < order_; ++c)
    if (at(v, c)) out.push_back(c);
  return out;
}

AdjacencyMatrix build_adjacency(const IGraphParams& p) {
  const int n = p.n();
  AdjacencyMatrix m(2 * n);
  for (int i = 0; i < n; ++i) {
    m.connect(i, (i + p.k()) % n);
    m.connect(n + i, n + (i + p.j()) % n);
    m.connect(i, n + i);
  }
  return m;
}

AdjacencyMatrix rim_adjacency(int n, int step) {
  require_rim_step(n, step);
  AdjacencyMatrix m(n);
  for (int i = 0; i < n; ++i) m.connect(i, (i + step) % n);
  return m;
}

std::vector<Edge> edge_list(const IGraphParams& p) {
  const int n = p.n();
  std::vector<Edge> edges;
  edges.reserve(std::size_t(3) * n);
  auto add = [&edges](int u, int v) { edges.push_back(u < v ? Edge{u, v} : Edge{v, u}); };
  for (int i = 0; i < n; ++i) {
    add(n + i, n + (i + p.j()) % n);
    add(i, n + i);
    add(i, (i + p.k()) % n);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

AdjacencyMatrix adjacency_from_edges(int order, std::span<const Edge> edges) {
  AdjacencyMatrix m(order);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order || e.u == e.v)
      throw InvalidParams("edge out of range or a loop");
    m.connect(e.u, e.v);
  }
  return m;
}

std::string vertex_name(const IGraphParams& p, int index) {
  if (index < 0 || index >= p.order()) throw IndexOutOfRange("vertex index " + std::to_string(index));
  return index < p.n() ? "b" + std::to_string(index) : "a" + std::to_string(index - p.n());
}

CycleDecomposition subgraph_cycles(int n, int step) {
  require_rim_step(n, step);
  CycleDecomposition out;
  std::vector<bool> seen(std::size_t(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[std::size_t(start)]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      seen[std::size_t(v)] = true;
      cycle.push_back(v);
      v = (v + step) % n;
    } while (v != start);
    out.components.push_back(std::move(cycle));
  }
  out.component_count = static_cast<int>(out.components.size());
  out.cycle_length = static_cast<int>(out.components.front().size());
  return out;
}

}  // namespace ispec
