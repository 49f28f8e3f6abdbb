#pragma once

// Serialization of instances and evaluation reports. File formats are a
// stable contract:
//
//   instance JSON: {"dim": d,
//                   "A": [[[re,im], ...], ...],   row-major
//                   "B": [[[re,im], ...], ...],
//                   "phi": [[re,im], ...],
//                   "normalize": bool,            optional, default false
//                   "provenance": "...",          optional, default EXPLICIT
//                   "seed": n}                    optional
//
// Numbers round-trip exactly (shortest representation that restores the
// same double).

#include <string>
#include <vector>

#include <json.hpp>

#include "revbound/inequalities.hpp"
#include "revbound/sampling.hpp"

namespace revbound {

// Malformed or invalid input files; the CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

InstanceSpec parse_instance(const nlohmann::json& j, const Tolerances& tol = {});
InstanceSpec load_instance(const std::string& path, const Tolerances& tol = {});
nlohmann::json instance_to_json(const InstanceSpec& inst);
void save_instance(const InstanceSpec& inst, const std::string& path);

struct VerifyScalars {
  double dphi_a = 0.0;
  double dphi_b = 0.0;
  double dphi_amb = 0.0;
  Complex cov{};            // C_phi(A,B)
  double robertson = 0.0;   // |<[A,B]>|/2
};

struct VerifyReport {
  std::vector<EvalRecord> records;
  VerifyScalars scalars;
};

VerifyReport verify_instance(const InstanceSpec& inst, const Tolerances& tol = {});
bool all_defined_hold(const std::vector<EvalRecord>& records);

// Human-readable table, 6 significant digits.
std::string render_verify_text(const InstanceSpec& inst, const VerifyReport& report);
nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json eval_record_to_json(const EvalRecord& rec);

}  // namespace revbound
