#pragma once

// Monte-Carlo sweep engine. Trials partition the seed space as
// trial_seed = base_seed + trial_index, so results are independent of the
// thread count and report bytes are reproducible run to run.
//
// CSV schema (one row per trial per relation, 17 significant digits):
//   trial_seed,dim,provenance,relation,defined,holds,lhs,rhs,gap
// Undefined evaluations leave lhs/rhs/gap empty rather than printing
// sentinel numbers.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "revbound/inequalities.hpp"
#include "revbound/sampling.hpp"

namespace revbound {

struct SweepConfig {
  std::vector<std::size_t> dims = {2};
  long trials = 1000;
  std::uint64_t seed = 0;
  std::vector<Provenance> provenances = {Provenance::HaarGue};
  std::vector<Relation> relations = all_relations();
  Tolerances tol;
  int threads = 1;
};

struct SweepRow {
  std::uint64_t trial_seed = 0;
  std::size_t dim = 0;
  Provenance provenance = Provenance::HaarGue;
  Relation relation{};
  bool defined = true;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

// Aggregate tallies for one (dim, provenance, relation) cell.
struct SweepCell {
  std::size_t dim = 0;
  Provenance provenance = Provenance::HaarGue;
  Relation relation{};
  long trials = 0;
  long holds_count = 0;
  long violation_count = 0;
  long undefined_count = 0;
  long equality_count = 0;     // |gap| <= tol.equality among defined trials
  double worst_gap = 0.0;      // most negative gap over defined trials
  double gap_min = 0.0;        // quantiles over defined trials
  double gap_median = 0.0;
  double gap_p99 = 0.0;
  double gap_max = 0.0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepCell> cells;
  bool violation_found = false;
};

struct SweepOutcome {
  std::vector<SweepRow> rows;
  SweepReport report;
};

// Throws std::invalid_argument for inconsistent flags (e.g. ORTHO_DEVIATION
// at dim 2, nonpositive trials).
SweepOutcome run_sweep(const SweepConfig& config);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
nlohmann::json report_to_json(const SweepReport& report);

}  // namespace revbound
