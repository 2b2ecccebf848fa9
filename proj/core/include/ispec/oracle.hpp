#pragma once

#include <vector>

#include "ispec/igraph.hpp"
#include "ispec/spectrum.hpp"

// Brute-force checkers. Nothing here calls the closed-form code.
namespace ispec::oracle {

class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(int order) : order_(order), cells_(std::size_t(order) * order, 0.0) {}

  static DenseSymmetricMatrix from_adjacency(const AdjacencyMatrix& a);

  /// Throws InvalidParams unless values is order^2 long and exactly symmetric.
  static DenseSymmetricMatrix from_row_major(int order, std::vector<double> values);

  int order() const { return order_; }
  double at(int r, int c) const { return cells_[std::size_t(r) * order_ + c]; }

  void set(int r, int c, double v) {
    cells_[std::size_t(r) * order_ + c] = v;
    cells_[std::size_t(c) * order_ + r] = v;
  }

  double frobenius_norm() const;
  double trace() const;

 private:
  friend std::vector<double> eigenvalues_bruteforce(DenseSymmetricMatrix m);

  int order_;
  std::vector<double> cells_;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr int kMaxOracleOrder = 4096;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// 1e-12 times the matrix norm. Ascending. Throws ConvergenceError if the
/// sweep budget runs out.
std::vector<double> eigenvalues_bruteforce(DenseSymmetricMatrix m);

int bfs_components(const AdjacencyMatrix& a);

bool two_coloring(const AdjacencyMatrix& a);

/// ||A w - lambda w||_inf.
double residual(const AdjacencyMatrix& a, const EigenPair& pair);

}  // namespace ispec::oracle
