#include "revbound/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace revbound {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void validate_config(const SweepConfig& config) {
  if (config.dims.empty()) throw std::invalid_argument("sweep: at least one dimension required");
  if (config.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
  if (config.threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");
  if (config.provenances.empty()) throw std::invalid_argument("sweep: provenance list empty");
  if (config.relations.empty()) throw std::invalid_argument("sweep: relation list empty");
  for (Provenance p : config.provenances) {
    if (p == Provenance::Explicit) {
      throw std::invalid_argument("sweep: EXPLICIT instances cannot be swept");
    }
    for (std::size_t dim : config.dims) {
      if (dim < 2) throw std::invalid_argument("sweep: dim must be >= 2");
      if (p == Provenance::OrthoDeviation && dim < 3) {
        throw std::invalid_argument("sweep: ORTHO_DEVIATION requires dim >= 3");
      }
    }
  }
}

// Nearest-rank quantile on an ascending sample.
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double rank = q * static_cast<double>(sorted.size() - 1);
  const std::size_t idx = static_cast<std::size_t>(std::llround(std::floor(rank)));
  return sorted[std::min(idx, sorted.size() - 1)];
}

}  // namespace

SweepOutcome run_sweep(const SweepConfig& config) {
  validate_config(config);

  const std::size_t per_trial = config.relations.size();
  const std::size_t trials = static_cast<std::size_t>(config.trials);

  SweepOutcome outcome;
  outcome.report.config = config;
  outcome.rows.reserve(config.dims.size() * config.provenances.size() * trials * per_trial);

  for (std::size_t dim : config.dims) {
    for (Provenance prov : config.provenances) {
      std::vector<SweepRow> block(trials * per_trial);

      auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
          const std::uint64_t trial_seed = config.seed + t;
          const InstanceSpec inst = regenerate(prov, dim, trial_seed);
          for (std::size_t r = 0; r < per_trial; ++r) {
            const EvalRecord rec =
                evaluate_relation(config.relations[r], inst.a, inst.b, inst.phi, config.tol);
            SweepRow& row = block[t * per_trial + r];
            row = SweepRow{trial_seed, dim,     prov,    config.relations[r],
                           rec.defined, rec.holds, rec.lhs, rec.rhs,
                           rec.gap};
          }
        }
      };

      const std::size_t nthreads = std::min<std::size_t>(config.threads, trials);
      if (nthreads <= 1) {
        run_range(0, trials);
      } else {
        std::vector<std::thread> workers;
        const std::size_t chunk = (trials + nthreads - 1) / nthreads;
        for (std::size_t w = 0; w < nthreads; ++w) {
          const std::size_t begin = w * chunk;
          const std::size_t end = std::min(trials, begin + chunk);
          if (begin < end) workers.emplace_back(run_range, begin, end);
        }
        for (std::thread& worker : workers) worker.join();
      }

      outcome.rows.insert(outcome.rows.end(), block.begin(), block.end());
    }
  }

  // aggregate in deterministic row order
  for (std::size_t dim : config.dims) {
    for (Provenance prov : config.provenances) {
      for (Relation rel : config.relations) {
        SweepCell cell;
        cell.dim = dim;
        cell.provenance = prov;
        cell.relation = rel;
        std::vector<double> gaps;
        for (const SweepRow& row : outcome.rows) {
          if (row.dim != dim || row.provenance != prov || row.relation != rel) continue;
          ++cell.trials;
          if (!row.defined) {
            ++cell.undefined_count;
            continue;
          }
          if (row.holds) {
            ++cell.holds_count;
          } else {
            ++cell.violation_count;
            outcome.report.violation_found = true;
          }
          if (std::abs(row.gap) <= config.tol.equality) ++cell.equality_count;
          gaps.push_back(row.gap);
        }
        std::sort(gaps.begin(), gaps.end());
        if (!gaps.empty()) {
          cell.worst_gap = gaps.front();
          cell.gap_min = gaps.front();
          cell.gap_median = quantile(gaps, 0.5);
          cell.gap_p99 = quantile(gaps, 0.99);
          cell.gap_max = gaps.back();
        }
        outcome.report.cells.push_back(std::move(cell));
      }
    }
  }
  return outcome;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "trial_seed,dim,provenance,relation,defined,holds,lhs,rhs,gap\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.trial_seed);
    out += ',';
    out += std::to_string(row.dim);
    out += ',';
    out += provenance_name(row.provenance);
    out += ',';
    out += relation_name(row.relation);
    out += ',';
    out += row.defined ? '1' : '0';
    out += ',';
    out += row.holds ? '1' : '0';
    out += ',';
    if (row.defined) {
      out += fmt17(row.lhs);
      out += ',';
      out += fmt17(row.rhs);
      out += ',';
      out += fmt17(row.gap);
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

nlohmann::json report_to_json(const SweepReport& report) {
  nlohmann::json j;
  nlohmann::json dims = nlohmann::json::array();
  for (std::size_t d : report.config.dims) dims.push_back(d);
  nlohmann::json provs = nlohmann::json::array();
  for (Provenance p : report.config.provenances) provs.push_back(provenance_name(p));
  nlohmann::json rels = nlohmann::json::array();
  for (Relation r : report.config.relations) rels.push_back(relation_name(r));
  j["config"] = {{"dims", std::move(dims)},
                 {"trials", report.config.trials},
                 {"seed", report.config.seed},
                 {"provenances", std::move(provs)},
                 {"relations", std::move(rels)},
                 {"holds_tolerance", report.config.tol.holds},
                 {"undefined_tolerance", report.config.tol.undefined},
                 {"equality_tolerance", report.config.tol.equality},
                 {"threads", report.config.threads}};
  nlohmann::json cells = nlohmann::json::array();
  for (const SweepCell& cell : report.cells) {
    nlohmann::json c = {{"dim", cell.dim},
                        {"provenance", provenance_name(cell.provenance)},
                        {"relation", relation_name(cell.relation)},
                        {"trials", cell.trials},
                        {"holds", cell.holds_count},
                        {"violations", cell.violation_count},
                        {"undefined", cell.undefined_count},
                        {"equality", cell.equality_count}};
    if (cell.trials > cell.undefined_count) {
      c["worst_gap"] = cell.worst_gap;
      c["gap_min"] = cell.gap_min;
      c["gap_median"] = cell.gap_median;
      c["gap_p99"] = cell.gap_p99;
      c["gap_max"] = cell.gap_max;
    }
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  j["violation_found"] = report.violation_found;
  return j;
}

}  // namespace revbound
