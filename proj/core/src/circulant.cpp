#include "ispec/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ispec/errors.hpp"

namespace ispec {
namespace {

constexpr double kImagTolerance = 1e-12;

void require_index(int n, int l) {
  if (l < 0 || l >= n)
    throw IndexOutOfRange("index l = " + std::to_string(l) + " outside [0, " + std::to_string(n - 1) + "]");
}

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CirculantRow::CirculantRow(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidParams("circulant row must be non-empty");
}

bool CirculantRow::is_symmetric() const {
  const int n = size();
  for (int t = 1; t < n; ++t)
    if (entries_[std::size_t(t)] != entries_[std::size_t(n - t)]) return false;
  return true;
}

std::vector<double> CirculantRow::expand() const {
  const int n = size();
  std::vector<double> m(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) m[std::size_t(i) * n + c] = entries_[std::size_t(mod(c - i, n))];
  return m;
}

Complex root_of_unity_power(int n, long long e) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(e, n)) / n;
  return {std::cos(angle), std::sin(angle)};
}

Complex circulant_eigenvalue(const CirculantRow& row, int l) {
  const int n = row.size();
  require_index(n, l);
  Complex sum{0.0, 0.0};
  for (int t = 0; t < n; ++t) {
    if (row[t] != 0.0) sum += row[t] * root_of_unity_power(n, static_cast<long long>(t) * l);
  }
  return sum;
}

double circulant_eigenvalue_real(const CirculantRow& row, int l) {
  if (!row.is_symmetric()) throw InvalidParams("circulant row is not symmetric");
  const Complex z = circulant_eigenvalue(row, l);
  if (std::abs(z.imag()) > kImagTolerance)
    throw InconsistencyError("symmetric circulant produced imaginary part " + std::to_string(z.imag()));
  return z.real();
}

ComplexVector fourier_vector(int n, int l) {
  require_index(n, l);
  ComplexVector v(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) v[std::size_t(t)] = root_of_unity_power(n, static_cast<long long>(t) * l);
  return v;
}

ComplexVector multiply(const CirculantRow& row, std::span<const Complex> x) {
  const int n = row.size();
  if (static_cast<int>(x.size()) != n) throw InvalidParams("dimension mismatch in circulant multiply");
  ComplexVector y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (int c = 0; c < n; ++c) acc += row[static_cast<int>(mod(c - i, n))] * x[std::size_t(c)];
    y[std::size_t(i)] = acc;
  }
  return y;
}

CirculantRow rim_row(int n, int step) {
  if (n < 3 || step < 1 || 2 * step >= n)
    throw InvalidParams("rim step must satisfy 1 <= step < n/2");
  std::vector<double> row(std::size_t(n), 0.0);
  row[std::size_t(step)] = 1.0;
  row[std::size_t(n - step)] = 1.0;
  return CirculantRow(std::move(row));
}

double rim_eigenvalue(int n, int step, int l) {
  require_index(n, l);
  // Reduce step * l first so that exact multiples of n give cos(0) = 1 exactly,
  // and fold to [0, n/2] so that l and n - l agree bit for bit.
  long long e = mod(static_cast<long long>(step) * l, n);
  e = std::min(e, n - e);
  return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(e) / n);
}

double alpha(const IGraphParams& p, int l) { return rim_eigenvalue(p.n(), p.j(), l); }

double beta(const IGraphParams& p, int l) { return rim_eigenvalue(p.n(), p.k(), l); }

}  // namespace ispec
