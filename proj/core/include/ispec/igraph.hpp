#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ispec {

/// Canonical parameters of I(n, j, k): n >= 3 and 1 <= j <= k < n/2.
///
/// The only way to obtain one is validate_and_canonicalize(), so every
/// instance satisfies the invariants.
class IGraphParams {
 public:
  int n() const { return n_; }
  int j() const { return j_; }
  int k() const { return k_; }

  /// Number of vertices (2n).
  int order() const { return 2 * n_; }

  friend auto operator<=>(const IGraphParams&, const IGraphParams&) = default;

 private:
  friend IGraphParams validate_and_canonicalize(long long n, long long j, long long k);
  IGraphParams(int n, int j, int k) : n_(n), j_(j), k_(k) {}

  int n_;
  int j_;
  int k_;
};

/// Reduces each step to min(x mod n, n - x mod n) and orders them so j <= k.
/// Throws InvalidParams for n < 3 or a step that reduces to 0 or n/2.
IGraphParams validate_and_canonicalize(long long n, long long j, long long k);

std::string to_string(const IGraphParams& p);

/// Dense symmetric 0/1 matrix. Used both for whole I-graphs and single rims.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(int order) : order_(order), cells_(std::size_t(order) * order, 0) {}

  int order() const { return order_; }
  bool at(int row, int col) const { return cells_[index(row, col)] != 0; }

  /// Sets both (u, v) and (v, u).
  void connect(int u, int v) {
    cells_[index(u, v)] = 1;
    cells_[index(v, u)] = 1;
  }

  int degree(int v) const;
  std::vector<int> neighbours(int v) const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t index(int row, int col) const { return std::size_t(row) * order_ + col; }

  int order_;
  std::vector<std::uint8_t> cells_;
};

/// Block layout [[B, I], [I, A]]: b_i is vertex i, a_i is vertex n + i.
AdjacencyMatrix build_adjacency(const IGraphParams& p);

/// The n x n cycle-union graph i ~ i + step (mod n).
AdjacencyMatrix rim_adjacency(int n, int step);

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// 3n edges with u < v, sorted.
std::vector<Edge> edge_list(const IGraphParams& p);

AdjacencyMatrix adjacency_from_edges(int order, std::span<const Edge> edges);

/// "b3" for index 3, "a3" for index n + 3.
std::string vertex_name(const IGraphParams& p, int index);

struct CycleDecomposition {
  int component_count = 0;
  int cycle_length = 0;
  // Each component listed in walk order starting from its smallest vertex.
  std::vector<std::vector<int>> components;
};

/// Components of the rim i ~ i + step (mod n). Requires 1 <= step < n/2.
CycleDecomposition subgraph_cycles(int n, int step);

}  // namespace ispec
