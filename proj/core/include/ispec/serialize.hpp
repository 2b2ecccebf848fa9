#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ispec/igraph.hpp"
#include "ispec/nullity.hpp"
#include "ispec/spectrum.hpp"
#include "ispec/structure.hpp"
#include "ispec/sweep.hpp"

namespace ispec {

/// Shortest decimal that round-trips through binary64.
std::string format_double(double v);

std::string spectrum_json(const Spectrum& s);
std::string spectrum_csv(const Spectrum& s);

std::string structure_json(const IGraphParams& p, const StructureReport& r);

std::string certificate_json(const NullityCertificate& c);
std::string numeric_nullity_json(const IGraphParams& p, const NumericNullity& nn);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

std::string verify_json(const VerifyReport& r);

/// Undirected DOT with vertices b0..b{n-1}, a0..a{n-1}.
std::string to_dot(const IGraphParams& p);

/// One line per row, entries 0/1 separated by single spaces.
std::string matrix_text(const AdjacencyMatrix& a);

/// Inverse of matrix_text. Throws InvalidParams on ragged, non-binary or asymmetric input.
AdjacencyMatrix parse_matrix_text(std::string_view text);

}  // namespace ispec
