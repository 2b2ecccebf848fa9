#include "ispec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "ispec/errors.hpp"

namespace ispec {

char sign_char(Branch b) { return b == Branch::plus ? '+' : '-'; }

std::vector<double> Spectrum::sorted_values() const {
  std::vector<double> v;
  v.reserve(points.size());
  for (const auto& pt : points) v.push_back(pt.value);
  std::sort(v.begin(), v.end());
  return v;
}

SpectralPoint eigenvalue(const IGraphParams& p, int l, Branch branch) {
  if (l < 0 || l >= p.n())
    throw IndexOutOfRange("index l = " + std::to_string(l) + " outside [0, " + std::to_string(p.n() - 1) + "]");
  SpectralPoint pt;
  pt.l = l;
  pt.branch = branch;
  pt.alpha = alpha(p, l);
  pt.beta = beta(p, l);
  const double d = pt.alpha - pt.beta;
  // Never below 2, so the branches are distinct and a_coeff is finite.
  const double root = std::sqrt(d * d + 4.0);
  const double mid = pt.alpha + pt.beta;
  pt.value = branch == Branch::plus ? (mid + root) / 2.0 : (mid - root) / 2.0;
  pt.a_coeff = pt.value - pt.alpha;
  return pt;
}

std::vector<SpectralGroup> group_values(std::vector<double> values, double gap) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<SpectralGroup> groups;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i - 1] - values[i] > gap) {
      double sum = 0.0;
      for (std::size_t t = start; t < i; ++t) sum += values[t];
      const auto count = static_cast<int>(i - start);
      groups.push_back({sum / count, count});
      start = i;
    }
  }
  return groups;
}

Spectrum full_spectrum(const IGraphParams& p, double group_gap) {
  Spectrum s{p, {}, {}};
  s.points.reserve(std::size_t(p.order()));
  for (int l = 0; l < p.n(); ++l) {
    s.points.push_back(eigenvalue(p, l, Branch::plus));
    s.points.push_back(eigenvalue(p, l, Branch::minus));
  }
  std::vector<double> values;
  values.reserve(s.points.size());
  for (const auto& pt : s.points) values.push_back(pt.value);
  s.groups = group_values(std::move(values), group_gap);
  return s;
}

EigenPair eigenvector(const IGraphParams& p, int l, Branch branch) {
  EigenPair pair{eigenvalue(p, l, branch), {}};
  const ComplexVector v = fourier_vector(p.n(), l);
  pair.vector.reserve(std::size_t(p.order()));
  for (const Complex& z : v) pair.vector.push_back(pair.point.a_coeff * z);
  pair.vector.insert(pair.vector.end(), v.begin(), v.end());
  return pair;
}

double quadratic_residual(const IGraphParams& p, const SpectralPoint& point) {
  const double a = alpha(p, point.l);
  const double b = beta(p, point.l);
  return std::abs((point.value - b) * (point.value - a) - 1.0);
}

Spectrum gp_spectrum(long long n, long long k, double group_gap) {
  return full_spectrum(validate_and_canonicalize(n, 1, k), group_gap);
}

}  // namespace ispec
