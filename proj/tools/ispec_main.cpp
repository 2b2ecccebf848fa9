// ispec: spectra, structure and nullity of I-graphs from the command line.
//
// Exit codes: 0 success, 1 invalid arguments, 2 verification failure,
// 3 internal inconsistency.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "ispec/errors.hpp"
#include "ispec/igraph.hpp"
#include "ispec/nullity.hpp"
#include "ispec/serialize.hpp"
#include "ispec/spectrum.hpp"
#include "ispec/structure.hpp"
#include "ispec/sweep.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInvalidArgs = 1, kVerifyFailed = 2, kInconsistent = 3 };

struct GraphArgs {
  long long n = 0;
  long long j = 0;
  long long k = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("n", n, "Vertices per rim")->required();
    cmd->add_option("j", j, "Outer rim step")->required();
    cmd->add_option("k", k, "Inner rim step")->required();
  }

  ispec::IGraphParams params() const { return ispec::validate_and_canonicalize(n, j, k); }
};

struct RangeArgs {
  ispec::SweepRange range{3, 20, false};
  int jobs = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--n-min", range.n_min, "Smallest n")->capture_default_str();
    cmd->add_option("--n-max", range.n_max, "Largest n")->capture_default_str();
    cmd->add_flag("--k-eq-2j", range.k_twice_j, "Only I(n, j, 2j)");
    cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form spectra, structure and nullity of I-graphs I(n,j,k)"};
  app.require_subcommand(1);

  double tolerance = ispec::kDefaultTolerance;
  double group_gap = ispec::kDefaultGroupGap;
  app.add_option("--tolerance", tolerance, "Comparison tolerance for floating-point decisions")
      ->capture_default_str();
  app.add_option("--group-gap", group_gap, "Gap that separates eigenvalue groups")->capture_default_str();

  GraphArgs spectrum_args;
  std::string spectrum_format = "json";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Closed-form spectrum of I(n,j,k)");
  spectrum_args.add_to(spectrum_cmd);
  spectrum_cmd->add_option("--format", spectrum_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GraphArgs structure_args;
  auto* structure_cmd = app.add_subcommand("structure", "Connectedness and bipartiteness report");
  structure_args.add_to(structure_cmd);

  GraphArgs nullity_args;
  auto* nullity_cmd = app.add_subcommand("nullity", "Nullity (certificate when k = 2j, numeric otherwise)");
  nullity_args.add_to(nullity_cmd);

  RangeArgs verify_args;
  verify_args.range.n_max = 40;
  double fault = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute-force oracles");
  verify_args.add_to(verify_cmd);
  verify_cmd->add_option("--inject-fault", fault, "Shift every closed-form eigenvalue (testing only)");

  RangeArgs sweep_args;
  std::string sweep_format = "csv";
  auto* sweep_cmd = app.add_subcommand("sweep", "Summary table over a parameter range");
  sweep_args.add_to(sweep_cmd);
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GraphArgs export_args;
  bool as_dot = false;
  bool as_matrix = false;
  auto* export_cmd = app.add_subcommand("export", "Export the graph as DOT or a 0/1 adjacency grid");
  export_args.add_to(export_cmd);
  auto* dot_flag = export_cmd->add_flag("--dot", as_dot, "Graphviz DOT (default)");
  export_cmd->add_flag("--matrix", as_matrix, "Adjacency matrix grid")->excludes(dot_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidArgs;
  }

  try {
    if (*spectrum_cmd) {
      const auto spec = ispec::full_spectrum(spectrum_args.params(), group_gap);
      std::cout << (spectrum_format == "csv" ? ispec::spectrum_csv(spec) : ispec::spectrum_json(spec));
    } else if (*structure_cmd) {
      const auto p = structure_args.params();
      std::cout << ispec::structure_json(p, ispec::structure_report(p, tolerance));
    } else if (*nullity_cmd) {
      const auto p = nullity_args.params();
      if (p.k() == 2 * p.j()) {
        std::cout << ispec::certificate_json(ispec::nullity_certificate(p));
      } else {
        const auto nn = ispec::nullity_numeric(p, tolerance);
        for (const auto& pt : nn.ambiguous) {
          std::cerr << "warning: |lambda_" << pt.l << ispec::sign_char(pt.branch) << "| = " << pt.value
                    << " lies between the tolerance and 1e-6\n";
        }
        std::cout << ispec::numeric_nullity_json(p, nn);
      }
    } else if (*verify_cmd) {
      ispec::VerifyOptions opts;
      opts.tolerance = tolerance;
      opts.jobs = verify_args.jobs;
      opts.fault = fault;
      const auto report = ispec::run_verify(verify_args.range, opts);
      std::cout << ispec::verify_json(report);
      return report.passed() ? kOk : kVerifyFailed;
    } else if (*sweep_cmd) {
      const auto rows = ispec::run_sweep(sweep_args.range, sweep_args.jobs, tolerance);
      std::cout << (sweep_format == "csv" ? ispec::sweep_csv(rows) : ispec::sweep_json(rows));
    } else if (*export_cmd) {
      const auto p = export_args.params();
      std::cout << (as_matrix ? ispec::matrix_text(ispec::build_adjacency(p)) : ispec::to_dot(p));
    }
  } catch (const ispec::InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArgs;
  } catch (const ispec::InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kOk;
}
