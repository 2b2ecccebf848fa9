#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ispec/igraph.hpp"

namespace ispec {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// First row (m_0, ..., m_{n-1}) of an n x n circulant; row i is row 0
/// shifted right i places, so M[i][c] = m[(c - i) mod n].
class CirculantRow {
 public:
  explicit CirculantRow(std::vector<double> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int t) const { return entries_[std::size_t(t)]; }
  std::span<const double> entries() const { return entries_; }

  /// entries[t] == entries[n - t] for all t, i.e. the expanded matrix is symmetric.
  bool is_symmetric() const;

  /// Row-major n x n expansion.
  std::vector<double> expand() const;

 private:
  std::vector<double> entries_;
};

/// xi^e with xi = exp(2 pi i / n). The exponent is reduced mod n first.
Complex root_of_unity_power(int n, long long e);

/// sum_t m_t xi^{t l}.
Complex circulant_eigenvalue(const CirculantRow& row, int l);

/// Real eigenvalue of a symmetric row. Throws InconsistencyError if the
/// imaginary part exceeds 1e-12 and InvalidParams if the row is not symmetric.
double circulant_eigenvalue_real(const CirculantRow& row, int l);

/// (1, xi^l, xi^{2l}, ..., xi^{(n-1)l}).
ComplexVector fourier_vector(int n, int l);

/// M x for the circulant M generated by row.
ComplexVector multiply(const CirculantRow& row, std::span<const Complex> x);

/// Ones at positions step and n - step. Requires 1 <= step < n/2.
CirculantRow rim_row(int n, int step);

/// 2 cos(2 pi step l / n), the l-th eigenvalue of the rim circulant.
double rim_eigenvalue(int n, int step, int l);

/// Outer rim eigenvalue 2 cos(2 pi j l / n).
double alpha(const IGraphParams& p, int l);

/// Inner rim eigenvalue 2 cos(2 pi k l / n).
double beta(const IGraphParams& p, int l);

}  // namespace ispec
