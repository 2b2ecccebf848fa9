#include "ispec/serialize.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "ispec/errors.hpp"

namespace ispec {
namespace {

using nlohmann::ordered_json;

std::string branch_string(Branch b) { return std::string(1, sign_char(b)); }

ordered_json zero_indices_array(const std::vector<ZeroIndex>& zs) {
  ordered_json arr = ordered_json::array();
  for (const auto& z : zs) arr.push_back({{"l", z.l}, {"branch", branch_string(z.branch)}});
  return arr;
}

ordered_json nullable(const std::optional<bool>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json sweep_row_json(const SweepRow& r) {
  return {{"n", r.params.n()},         {"j", r.params.j()},       {"k", r.params.k()},
          {"gcd", r.gcd},              {"connected", r.connected}, {"bipartite", r.bipartite},
          {"eta", r.eta},              {"lambda_min", r.lambda_min}, {"lambda_max", r.lambda_max}};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string spectrum_json(const Spectrum& s) {
  ordered_json j;
  j["n"] = s.params.n();
  j["j"] = s.params.j();
  j["k"] = s.params.k();
  ordered_json points = ordered_json::array();
  for (const auto& pt : s.points) {
    points.push_back({{"l", pt.l},
                      {"branch", branch_string(pt.branch)},
                      {"value", pt.value},
                      {"alpha", pt.alpha},
                      {"beta", pt.beta},
                      {"a", pt.a_coeff}});
  }
  j["points"] = std::move(points);
  ordered_json groups = ordered_json::array();
  for (const auto& g : s.groups) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  j["groups"] = std::move(groups);
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "l,branch,value,alpha,beta,a\n";
  for (const auto& pt : s.points) {
    out << pt.l << ',' << sign_char(pt.branch) << ',' << format_double(pt.value) << ',' << format_double(pt.alpha)
        << ',' << format_double(pt.beta) << ',' << format_double(pt.a_coeff) << '\n';
  }
  return out.str();
}

std::string structure_json(const IGraphParams& p, const StructureReport& r) {
  ordered_json j{{"n", p.n()},
                 {"j", p.j()},
                 {"k", p.k()},
                 {"connected", r.connected},
                 {"component_count", r.component_count},
                 {"mult_of_3", r.mult_of_3},
                 {"bipartite", r.bipartite},
                 {"spectrum_symmetric", r.spectrum_symmetric},
                 {"bipartite_parity", nullable(r.bipartite_parity)},
                 {"gcd_njk", r.gcd_njk}};
  return j.dump(2) + "\n";
}

std::string certificate_json(const NullityCertificate& c) {
  ordered_json sets = ordered_json::object();
  for (std::size_t i = 0; i < kNullityConditions.size(); ++i)
    sets[std::string(kNullityConditions[i].name)] = c.sets[i];
  ordered_json j{{"n", c.params.n()},
                 {"j", c.params.j()},
                 {"k", c.params.k()},
                 {"mode", "certificate"},
                 {"eta", c.eta},
                 {"sets", std::move(sets)},
                 {"zero_indices", zero_indices_array(c.zero_indices)}};
  return j.dump(2) + "\n";
}

std::string numeric_nullity_json(const IGraphParams& p, const NumericNullity& nn) {
  ordered_json ambiguous = ordered_json::array();
  for (const auto& pt : nn.ambiguous)
    ambiguous.push_back({{"l", pt.l}, {"branch", branch_string(pt.branch)}, {"value", pt.value}});
  ordered_json j{{"n", p.n()},
                 {"j", p.j()},
                 {"k", p.k()},
                 {"mode", "numeric"},
                 {"note", "k != 2j: count of closed-form eigenvalues within tolerance of zero"},
                 {"eta", nn.eta},
                 {"zero_indices", zero_indices_array(nn.zeros)},
                 {"ambiguous", std::move(ambiguous)}};
  return j.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,j,k,gcd,connected,bipartite,eta,lambda_min,lambda_max\n";
  for (const auto& r : rows) {
    out << r.params.n() << ',' << r.params.j() << ',' << r.params.k() << ',' << r.gcd << ','
        << (r.connected ? "true" : "false") << ',' << (r.bipartite ? "true" : "false") << ',' << r.eta << ','
        << format_double(r.lambda_min) << ',' << format_double(r.lambda_max) << '\n';
  }
  return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) arr.push_back(sweep_row_json(r));
  return arr.dump(2) + "\n";
}

std::string verify_json(const VerifyReport& r) {
  ordered_json j{{"passed", r.passed()},
                 {"instances", r.instances},
                 {"max_spectrum_deviation", r.max_spectrum_deviation},
                 {"max_eigenvector_residual", r.max_eigenvector_residual},
                 {"max_quadratic_residual", r.max_quadratic_residual},
                 {"connectivity_mismatches", r.connectivity_mismatches},
                 {"bipartite_mismatches", r.bipartite_mismatches},
                 {"nullity_mismatches", r.nullity_mismatches},
                 {"rowlinson_violations", r.rowlinson_violations},
                 {"failures", r.failures}};
  return j.dump(2) + "\n";
}

std::string to_dot(const IGraphParams& p) {
  std::ostringstream out;
  out << "graph \"I(" << p.n() << "," << p.j() << "," << p.k() << ")\" {\n";
  for (int v = 0; v < p.order(); ++v) out << "  " << vertex_name(p, v) << ";\n";
  for (const auto& e : edge_list(p)) out << "  " << vertex_name(p, e.u) << " -- " << vertex_name(p, e.v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string matrix_text(const AdjacencyMatrix& a) {
  std::string out;
  out.reserve(std::size_t(a.order()) * (2 * a.order() + 1));
  for (int r = 0; r < a.order(); ++r) {
    for (int c = 0; c < a.order(); ++c) {
      if (c > 0) out += ' ';
      out += a.at(r, c) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

AdjacencyMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream cells(line);
    std::vector<int> row;
    std::string tok;
    while (cells >> tok) {
      if (tok != "0" && tok != "1") throw InvalidParams("matrix entry '" + tok + "' is not 0 or 1");
      row.push_back(tok == "1" ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  const int order = static_cast<int>(rows.size());
  AdjacencyMatrix m(order);
  for (int r = 0; r < order; ++r) {
    if (static_cast<int>(rows[std::size_t(r)].size()) != order) throw InvalidParams("matrix is not square");
    if (rows[std::size_t(r)][std::size_t(r)] != 0) throw InvalidParams("matrix has a loop");
  }
  for (int r = 0; r < order; ++r)
    for (int c = r + 1; c < order; ++c) {
      const int v = rows[std::size_t(r)][std::size_t(c)];
      if (v != rows[std::size_t(c)][std::size_t(r)]) throw InvalidParams("matrix is not symmetric");
      if (v) m.connect(r, c);
    }
  return m;
}

}  // namespace ispec
