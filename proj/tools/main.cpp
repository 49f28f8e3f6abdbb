// revbound CLI: verify explicit instances, run Monte-Carlo sweeps, search
// for gap-minimizing states, and walk through the degenerate cases.
//
// Exit codes: 0 all defined relations hold, 1 numerical violation detected,
// 2 input or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revbound/instance_io.hpp"
#include "revbound/search.hpp"
#include "revbound/sweep.hpp"

namespace {

using namespace revbound;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::vector<Relation> parse_relation_list(const std::vector<std::string>& names) {
  if (names.empty()) return all_relations();
  std::vector<Relation> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(parse_relation(name));
  return out;
}

std::vector<Provenance> parse_provenance_list(const std::vector<std::string>& names) {
  if (names.empty()) return {Provenance::HaarGue};
  std::vector<Provenance> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(parse_provenance(name));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

int cmd_verify(const std::string& path, const std::string& format, const std::string& output,
               double tolerance, bool quiet) {
  Tolerances tol;
  if (tolerance > 0.0) tol.holds = tolerance;
  const InstanceSpec inst = load_instance(path, tol);
  const VerifyReport report = verify_instance(inst, tol);
  if (format == "json") {
    write_output(verify_report_to_json(report).dump(2) + "\n", output);
  } else if (!quiet) {
    write_output(render_verify_text(inst, report), output);
  }
  return all_defined_hold(report.records) ? kExitOk : kExitViolation;
}

int cmd_sweep(const SweepConfig& config, const std::string& format, const std::string& output,
              bool quiet) {
  const SweepOutcome outcome = run_sweep(config);
  const std::string payload = format == "json" ? report_to_json(outcome.report).dump(2) + "\n"
                                               : rows_to_csv(outcome.rows);
  write_output(payload, output);
  if (!quiet && !output.empty()) {
    long violations = 0, undefined = 0, total = 0;
    for (const SweepCell& cell : outcome.report.cells) {
      violations += cell.violation_count;
      undefined += cell.undefined_count;
      total += cell.trials;
    }
    std::cerr << "sweep: " << total << " evaluations, " << violations << " violations, "
              << undefined << " undefined -> " << output << "\n";
  }
  return outcome.report.violation_found ? kExitViolation : kExitOk;
}

int cmd_extremal(const std::string& relation_name_arg, const std::string& instance_path,
                 std::size_t dim, std::uint64_t instance_seed, SearchConfig config,
                 const std::string& output, bool quiet) {
  config.relation = parse_relation(relation_name_arg);
  if (!is_upper_bound(config.relation)) {
    throw InputError("extremal: '" + relation_name_arg +
                     "' is a lower bound; gap minimization applies to upper-bound relations "
                     "(REV_COV, REV_PROD, REV_DW)");
  }

  std::optional<InstanceSpec> inst;
  if (!instance_path.empty()) {
    inst = load_instance(instance_path);
  } else {
    inst = haar_gue_instance(dim, instance_seed);
  }

  const SearchResult result = minimize_gap(inst->a, inst->b, config);
  if (!quiet) {
    std::cout << "relation    " << relation_name_arg << "\n";
    std::cout << "best gap    " << result.best_gap << "\n";
    std::cout << "evaluations " << result.evaluations << "\n";
    std::cout << "converged   " << (result.converged ? "yes" : "no") << "\n";
    std::cout << "best state  [";
    for (std::size_t k = 0; k < result.best_state.dim(); ++k) {
      const Complex z = result.best_state.vector()[k];
      std::printf("%s(%.6g, %.6g)", k ? ", " : "", z.real(), z.imag());
    }
    std::cout << "]\n";
  }
  if (!output.empty()) {
    nlohmann::json j;
    j["relation"] = relation_name_arg;
    j["best_gap"] = result.best_gap;
    j["evaluations"] = result.evaluations;
    j["converged"] = result.converged;
    nlohmann::json state = nlohmann::json::array();
    for (std::size_t k = 0; k < result.best_state.dim(); ++k) {
      const Complex z = result.best_state.vector()[k];
      state.push_back(nlohmann::json::array({z.real(), z.imag()}));
    }
    j["best_state"] = std::move(state);
    std::ofstream out(output);
    if (!out) throw InputError("cannot write '" + output + "'");
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

InstanceSpec qutrit_uncorrelated_instance() {
  CMatrix a(3), b(3);
  a.at(0, 1) = a.at(1, 0) = 1.0;
  b.at(0, 2) = b.at(2, 0) = 1.0;
  CVector phi(3);
  phi[0] = 1.0;
  return InstanceSpec{3, Observable(std::move(a), "A"), Observable(std::move(b), "B"),
                      State(std::move(phi)), Provenance::Explicit, std::nullopt};
}

void print_record_line(const EvalRecord& rec) {
  std::cout << "  " << relation_name(rec.relation);
  for (std::size_t pad = relation_name(rec.relation).size(); pad < 10; ++pad) std::cout << ' ';
  if (!rec.defined) {
    std::cout << "UNDEFINED (finite variances exist, the bound itself does not)\n";
    return;
  }
  std::printf("lhs=%.6g  rhs=%.6g  gap=%.6g\n", rec.lhs, rec.rhs, rec.gap);
}

int cmd_demo() {
  std::cout << "-- uncorrelated qutrit: A = |0><1|+|1><0|, B = |0><2|+|2><0|, phi = |0>\n";
  std::cout << "   deviation vectors are orthogonal, so C_phi(A,B) = 0 and each bound\n";
  std::cout << "   collapses to its reduced form:\n";
  const InstanceSpec qutrit = qutrit_uncorrelated_instance();
  const EvalRecord rc = reverse_covariance(qutrit.a, qutrit.b, qutrit.phi);
  const EvalRecord rp = reverse_product(qutrit.a, qutrit.b, qutrit.phi);
  const EvalRecord rd = reverse_dw(qutrit.a, qutrit.b, qutrit.phi);
  print_record_line(rc);
  std::printf("             reduces to lhs <= lhs:            %.6g <= %.6g\n", rc.lhs, rc.rhs);
  print_record_line(rp);
  std::printf("             reduces to 0 <= 2 dA dB:          slack %.6g\n", rp.gap);
  print_record_line(rd);
  std::printf("             reduces to 0 <= (dA - dB)^2:      slack %.6g\n", rd.gap);

  std::cout << "\n-- eigenvector state: random qubit A with phi an eigenvector of A\n";
  std::cout << "   the Dunkl-Williams route is undefined there; the norm-sum bounds stay\n";
  std::cout << "   finite:\n";
  const InstanceSpec eig = eigenstate_instance(2, 2024);
  print_record_line(reverse_covariance(eig.a, eig.b, eig.phi));
  print_record_line(reverse_product(eig.a, eig.b, eig.phi));
  print_record_line(reverse_dw(eig.a, eig.b, eig.phi));
  std::printf("   (dphi_A = %.3g: phi is an eigenvector of A)\n",
              std_dev(eig.a, eig.phi));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm-sum inequality and reverse uncertainty relation toolkit"};
  app.require_subcommand(1);

  // verify
  std::string verify_path, verify_format = "text", verify_output;
  double verify_tolerance = 0.0;
  bool verify_quiet = false;
  CLI::App* verify = app.add_subcommand("verify", "evaluate all relations for an instance file");
  verify->add_option("path", verify_path, "instance JSON file")->required();
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", verify_output, "write report to file instead of stdout");
  verify->add_option("--tolerance", verify_tolerance, "override holds tolerance");
  verify->add_flag("--quiet", verify_quiet, "suppress the text report");

  // sweep
  SweepConfig sweep_config;
  std::vector<std::size_t> sweep_dims = {2, 3, 4};
  std::vector<std::string> sweep_relations, sweep_provenances;
  std::string sweep_format = "csv", sweep_output;
  double sweep_tolerance = 0.0;
  bool sweep_quiet = false;
  CLI::App* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over random instances");
  sweep->add_option("--dims", sweep_dims, "dimensions to sweep")->delimiter(',');
  sweep->add_option("--trials", sweep_config.trials, "trials per (dim, provenance)");
  sweep->add_option("--seed", sweep_config.seed, "base seed; trial t uses seed+t");
  sweep->add_option("--relations", sweep_relations, "relations (default: all)")->delimiter(',');
  sweep->add_option("--provenance", sweep_provenances,
                    "instance ensembles: HAAR_GUE, EIGENSTATE, ORTHO_DEVIATION")
      ->delimiter(',');
  sweep->add_option("--tolerance", sweep_tolerance, "override holds tolerance");
  sweep->add_option("--output", sweep_output, "report file (default stdout)");
  sweep->add_option("--format", sweep_format, "csv (per-trial rows) or json (aggregates)")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--threads", sweep_config.threads, "worker threads (output is identical)");
  sweep->add_flag("--quiet", sweep_quiet, "suppress the summary line");

  // extremal
  std::string ext_relation = "REV_COV", ext_instance, ext_output;
  std::size_t ext_dim = 2;
  std::uint64_t ext_seed = 0;
  SearchConfig ext_config;
  bool ext_quiet = false;
  CLI::App* extremal =
      app.add_subcommand("extremal", "search for a state minimizing a relation's gap");
  extremal->add_option("--relation", ext_relation, "REV_COV, REV_PROD or REV_DW");
  extremal->add_option("--instance", ext_instance, "take A, B from this instance file");
  extremal->add_option("--dim", ext_dim, "dimension for a random GUE pair (no --instance)");
  extremal->add_option("--seed", ext_seed, "seed for the random GUE pair");
  extremal->add_option("--restarts", ext_config.restarts, "independent simplex starts");
  extremal->add_option("--max-iters", ext_config.max_iterations, "iterations per restart");
  extremal->add_option("--conv-tol", ext_config.convergence_tol, "simplex diameter target");
  extremal->add_option("--search-seed", ext_config.seed, "seed for the restart starts");
  extremal->add_option("--output", ext_output, "write the result as JSON");
  extremal->add_flag("--quiet", ext_quiet, "suppress the text summary");

  // demo
  app.add_subcommand("demo", "walk through the degenerate cases numerically");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(verify_path, verify_format, verify_output, verify_tolerance, verify_quiet);
    }
    if (sweep->parsed()) {
      sweep_config.dims = sweep_dims;
      sweep_config.relations = parse_relation_list(sweep_relations);
      sweep_config.provenances = parse_provenance_list(sweep_provenances);
      if (sweep_tolerance > 0.0) sweep_config.tol.holds = sweep_tolerance;
      return cmd_sweep(sweep_config, sweep_format, sweep_output, sweep_quiet);
    }
    if (extremal->parsed()) {
      return cmd_extremal(ext_relation, ext_instance, ext_dim, ext_seed, ext_config, ext_output,
                          ext_quiet);
    }
    return cmd_demo();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
