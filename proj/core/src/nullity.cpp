#include "ispec/nullity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ispec/errors.hpp"
#include "ispec/structure.hpp"

namespace ispec {
namespace {

void require_k_twice_j(const IGraphParams& p) {
  if (p.k() != 2 * p.j())
    throw InvalidParams("exact nullity needs k = 2j, got " + to_string(p));
}

}  // namespace

int certificate_upper_bound(const IGraphParams& p, const DivisibilityCondition& c) {
  // From l <= n - 1: r <= floor(j - j/n - c/m). For c/m <= 7/10 that is j - 1
  // whenever n > 4j, which k = 2j < n/2 guarantees. For S9 it is j - 1 iff n >= 10j.
  if (c.modulus == 10 && c.residue == 9 && static_cast<long long>(p.n()) < 10LL * p.j()) return p.j() - 2;
  return p.j() - 1;
}

int certificate_index(const IGraphParams& p, const DivisibilityCondition& c, int r) {
  const long long num = static_cast<long long>(p.n()) * (c.residue + static_cast<long long>(c.modulus) * r);
  const long long den = static_cast<long long>(c.modulus) * p.j();
  if (num % den != 0)
    throw InconsistencyError(std::string(c.name) + " member " + std::to_string(r) + " does not divide");
  return static_cast<int>(num / den);
}

std::vector<ZeroIndex> zero_indices_exact(const IGraphParams& p) {
  require_k_twice_j(p);
  const long long n = p.n();
  const long long j = p.j();
  std::vector<ZeroIndex> out;
  for (long long l = 0; l < n; ++l) {
    for (const auto& c : kNullityConditions) {
      // m j l = n (c + m r), r >= 0
      const long long diff = c.modulus * j * l - n * c.residue;
      if (diff >= 0 && diff % (c.modulus * n) == 0) out.push_back({static_cast<int>(l), c.branch});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NullityCertificate nullity_certificate(const IGraphParams& p) {
  require_k_twice_j(p);
  NullityCertificate cert{p, {}, {}, 0};
  std::vector<ZeroIndex> from_sets;
  for (std::size_t i = 0; i < kNullityConditions.size(); ++i) {
    const auto& c = kNullityConditions[i];
    const long long den = static_cast<long long>(c.modulus) * p.j();
    const int upper = certificate_upper_bound(p, c);
    for (int r = 0; r <= upper; ++r) {
      const long long num = static_cast<long long>(p.n()) * (c.residue + static_cast<long long>(c.modulus) * r);
      if (num % den != 0) continue;
      cert.sets[i].push_back(r);
      const int l = certificate_index(p, c, r);
      if (l < 0 || l >= p.n())
        throw InconsistencyError(std::string(c.name) + " member " + std::to_string(r) + " maps outside [0, n-1]");
      from_sets.push_back({l, c.branch});
      ++cert.eta;
    }
  }
  std::sort(from_sets.begin(), from_sets.end());

  cert.zero_indices = zero_indices_exact(p);
  if (from_sets != cert.zero_indices || cert.eta != static_cast<int>(cert.zero_indices.size())) {
    throw InconsistencyError("certificate for " + to_string(p) + " has " + std::to_string(cert.eta) +
                             " members but " + std::to_string(cert.zero_indices.size()) + " zero indices");
  }
  return cert;
}

NumericNullity nullity_numeric(const IGraphParams& p, double tol, double warn_band) {
  NumericNullity out;
  for (const auto& pt : full_spectrum(p).points) {
    const double mag = std::abs(pt.value);
    if (mag <= tol) {
      out.zeros.push_back({pt.l, pt.branch});
    } else if (mag < warn_band) {
      out.ambiguous.push_back(pt);
    }
  }
  out.eta = static_cast<int>(out.zeros.size());
  return out;
}

std::optional<bool> rowlinson_bound_holds(const IGraphParams& p, int eta) {
  if (!is_connected_gcd(p)) return std::nullopt;
  return eta <= p.n() + 1;
}

}  // namespace ispec
