#include "ispec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "ispec/errors.hpp"

namespace ispec::oracle {

DenseSymmetricMatrix DenseSymmetricMatrix::from_adjacency(const AdjacencyMatrix& a) {
  DenseSymmetricMatrix m(a.order());
  for (int r = 0; r < a.order(); ++r)
    for (int c = r + 1; c < a.order(); ++c)
      if (a.at(r, c)) m.set(r, c, 1.0);
  return m;
}

DenseSymmetricMatrix DenseSymmetricMatrix::from_row_major(int order, std::vector<double> values) {
  if (order < 0 || values.size() != std::size_t(order) * order)
    throw InvalidParams("row-major data does not match order " + std::to_string(order));
  DenseSymmetricMatrix m(order);
  for (int r = 0; r < order; ++r)
    for (int c = 0; c < order; ++c) {
      const double v = values[std::size_t(r) * order + c];
      if (v != values[std::size_t(c) * order + r]) throw InvalidParams("matrix is not symmetric");
    }
  m.cells_ = std::move(values);
  return m;
}

double DenseSymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : cells_) s += v * v;
  return std::sqrt(s);
}

double DenseSymmetricMatrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < order_; ++i) s += at(i, i);
  return s;
}

std::vector<double> eigenvalues_bruteforce(DenseSymmetricMatrix m) {
  const int size = m.order_;
  if (size > kMaxOracleOrder) throw InvalidParams("oracle order above " + std::to_string(kMaxOracleOrder));
  auto& a = m.cells_;
  auto at = [&a, size](int r, int c) -> double& { return a[std::size_t(r) * size + c]; };

  const double norm = m.frobenius_norm();
  const double target = 1e-12 * norm;
  auto off_norm = [&] {
    double s = 0.0;
    for (int r = 0; r < size; ++r)
      for (int c = r + 1; c < size; ++c) s += 2.0 * at(r, c) * at(r, c);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (norm > 0.0 && off_norm() > target) {
    if (++sweep > kMaxJacobiSweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
    for (int p = 0; p < size - 1; ++p) {
      for (int q = p + 1; q < size; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        // Rotation zeroing (p, q), Golub & Van Loan sym.schur2.
        const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < size; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < size; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) eig[std::size_t(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

int bfs_components(const AdjacencyMatrix& a) {
  const int size = a.order();
  std::vector<bool> seen(std::size_t(size), false);
  int components = 0;
  for (int s = 0; s < size; ++s) {
    if (seen[std::size_t(s)]) continue;
    ++components;
    std::deque<int> queue{s};
    seen[std::size_t(s)] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < size; ++w) {
        if (a.at(v, w) && !seen[std::size_t(w)]) {
          seen[std::size_t(w)] = true;
          queue.push_back(w);
        }
      }
    }
  }
  return components;
}

bool two_coloring(const AdjacencyMatrix& a) {
  const int size = a.order();
  std::vector<int> colour(std::size_t(size), -1);
  for (int s = 0; s < size; ++s) {
    if (colour[std::size_t(s)] != -1) continue;
    colour[std::size_t(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < size; ++w) {
        if (!a.at(v, w)) continue;
        if (colour[std::size_t(w)] == -1) {
          colour[std::size_t(w)] = 1 - colour[std::size_t(v)];
          queue.push_back(w);
        } else if (colour[std::size_t(w)] == colour[std::size_t(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

double residual(const AdjacencyMatrix& a, const EigenPair& pair) {
  const int size = a.order();
  if (static_cast<int>(pair.vector.size()) != size)
    throw InvalidParams("eigenvector length " + std::to_string(pair.vector.size()) + " != order " +
                        std::to_string(size));
  double worst = 0.0;
  for (int r = 0; r < size; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (int c = 0; c < size; ++c)
      if (a.at(r, c)) acc += pair.vector[std::size_t(c)];
    acc -= pair.point.value * pair.vector[std::size_t(r)];
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

}  // namespace ispec::oracle
