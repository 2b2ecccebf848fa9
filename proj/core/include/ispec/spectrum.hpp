#pragma once

#include <vector>

#include "ispec/circulant.hpp"
#include "ispec/igraph.hpp"

namespace ispec {

enum class Branch { plus, minus };

/// '+' or '-'.
char sign_char(Branch b);

inline constexpr double kDefaultGroupGap = 1e-6;

/// One eigenvalue of I(n,j,k), with the rim eigenvalues it was built from.
/// a_coeff is the factor on the b-block of the eigenvector, value - alpha.
struct SpectralPoint {
  int l = 0;
  Branch branch = Branch::plus;
  double value = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double a_coeff = 0.0;
};

struct SpectralGroup {
  double value = 0.0;
  int multiplicity = 0;
};

struct Spectrum {
  IGraphParams params;
  // Ordered by l, then + before -.
  std::vector<SpectralPoint> points;
  // Descending by value.
  std::vector<SpectralGroup> groups;

  std::vector<double> sorted_values() const;
};

struct EigenPair {
  SpectralPoint point;
  // (a_l v_l ; v_l): b-coordinates first, unnormalized.
  ComplexVector vector;
};

/// lambda = (alpha_l + beta_l +- sqrt((alpha_l - beta_l)^2 + 4)) / 2.
SpectralPoint eigenvalue(const IGraphParams& p, int l, Branch branch);

Spectrum full_spectrum(const IGraphParams& p, double group_gap = kDefaultGroupGap);

/// Sorts values and splits clusters wherever consecutive values differ by more than gap.
std::vector<SpectralGroup> group_values(std::vector<double> values, double gap);

EigenPair eigenvector(const IGraphParams& p, int l, Branch branch);

/// |(lambda - beta_l)(lambda - alpha_l) - 1| with alpha_l, beta_l recomputed from p.
double quadratic_residual(const IGraphParams& p, const SpectralPoint& point);

/// Spectrum of the generalized Petersen graph G(n, k) = I(n, 1, k).
Spectrum gp_spectrum(long long n, long long k, double group_gap = kDefaultGroupGap);

}  // namespace ispec
