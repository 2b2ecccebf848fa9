#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "ispec/igraph.hpp"
#include "ispec/spectrum.hpp"

namespace ispec {

struct ZeroIndex {
  int l = 0;
  Branch branch = Branch::plus;
  friend auto operator<=>(const ZeroIndex&, const ZeroIndex&) = default;
};

/// m j l = n (c + m r) for some integer r >= 0, i.e. j l / n = c / m (mod 1).
///
/// For k = 2j put x = cos(2 pi j l / n). Then alpha = 2x, beta = 4x^2 - 2 and
///   lambda_{+-} = 2x^2 + x - 1 +- sqrt((2x^2 - x - 1)^2 + 1).
/// lambda = 0 forces alpha beta = 1, i.e. 8x^3 - 4x - 1 = 0, with roots
/// -1/2, (1 + sqrt5)/4, (1 - sqrt5)/4. The plus branch vanishes exactly when
/// 2x^2 + x - 1 < 0, which holds at -1/2 and (1 - sqrt5)/4; at (1 + sqrt5)/4
/// it is positive and the minus branch vanishes instead.
struct DivisibilityCondition {
  std::string_view name;
  int modulus;
  int residue;
  Branch branch;
};

inline constexpr std::array<DivisibilityCondition, 6> kNullityConditions{{
    {"R1", 3, 1, Branch::plus},    // x = -1/2
    {"R2", 3, 2, Branch::plus},    // x = -1/2
    {"S1", 10, 1, Branch::minus},  // x = (1 + sqrt5)/4
    {"S3", 10, 3, Branch::plus},   // x = (1 - sqrt5)/4
    {"S7", 10, 7, Branch::plus},   // x = (1 - sqrt5)/4
    {"S9", 10, 9, Branch::minus},  // x = (1 + sqrt5)/4
}};

/// Certificate for I(n, j, 2j). sets[i] belongs to kNullityConditions[i].
struct NullityCertificate {
  IGraphParams params;
  std::array<std::vector<int>, 6> sets;
  std::vector<ZeroIndex> zero_indices;
  int eta = 0;
};

/// Largest r enumerated for a condition. j - 1 everywhere except S9, which
/// stops at j - 2 when n < 10j (no member can reach j - 1 there).
int certificate_upper_bound(const IGraphParams& p, const DivisibilityCondition& c);

/// l = n (c + m r) / (m j), the eigenvalue index a certificate member encodes.
int certificate_index(const IGraphParams& p, const DivisibilityCondition& c, int r);

/// All (l, branch) with a zero eigenvalue, from integer congruences only. Requires k = 2j.
std::vector<ZeroIndex> zero_indices_exact(const IGraphParams& p);

/// Enumerates the six sets and cross-checks them against zero_indices_exact.
/// Throws InvalidParams if k != 2j and InconsistencyError if the routes disagree.
NullityCertificate nullity_certificate(const IGraphParams& p);

struct NumericNullity {
  int eta = 0;
  std::vector<ZeroIndex> zeros;
  // Points with tol < |value| < warn_band.
  std::vector<SpectralPoint> ambiguous;
};

/// Counts closed-form eigenvalues with |lambda| <= tol for any k.
NumericNullity nullity_numeric(const IGraphParams& p, double tol = 1e-8, double warn_band = 1e-6);

/// eta <= n + 1; empty for disconnected graphs.
std::optional<bool> rowlinson_bound_holds(const IGraphParams& p, int eta);

}  // namespace ispec
