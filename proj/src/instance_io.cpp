#include "revbound/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace revbound {

namespace {

Complex parse_complex(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": expected [re, im] pair");
  }
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InputError(where + ": non-finite entry");
  }
  return z;
}

CMatrix parse_matrix(const nlohmann::json& j, std::size_t dim, const std::string& name) {
  if (!j.is_array() || j.size() != dim) {
    throw InputError(name + ": expected " + std::to_string(dim) + " rows");
  }
  CMatrix m(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    if (!j[row].is_array() || j[row].size() != dim) {
      throw InputError(name + ": row " + std::to_string(row) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (std::size_t col = 0; col < dim; ++col) {
      m.at(row, col) = parse_complex(j[row][col], name + "[" + std::to_string(row) + "][" +
                                                      std::to_string(col) + "]");
    }
  }
  return m;
}

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t row = 0; row < m.dim(); ++row) {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t col = 0; col < m.dim(); ++col) cols.push_back(complex_to_json(m.at(row, col)));
    rows.push_back(std::move(cols));
  }
  return rows;
}

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

InstanceSpec parse_instance(const nlohmann::json& j, const Tolerances& tol) {
  if (!j.is_object()) throw InputError("instance: top level must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() < 2) {
    throw InputError("instance: \"dim\" must be an integer >= 2");
  }
  const std::size_t dim = j["dim"].get<std::size_t>();
  for (const char* key : {"A", "B", "phi"}) {
    if (!j.contains(key)) throw InputError(std::string("instance: missing \"") + key + "\"");
  }

  const CMatrix ma = parse_matrix(j["A"], dim, "A");
  const CMatrix mb = parse_matrix(j["B"], dim, "B");
  const double defect_a = hermiticity_defect(ma);
  if (defect_a > tol.structural) {
    throw InputError("A: hermiticity defect " + format_number(defect_a) +
                     " exceeds tolerance " + format_number(tol.structural));
  }
  const double defect_b = hermiticity_defect(mb);
  if (defect_b > tol.structural) {
    throw InputError("B: hermiticity defect " + format_number(defect_b) +
                     " exceeds tolerance " + format_number(tol.structural));
  }

  if (!j["phi"].is_array() || j["phi"].size() != dim) {
    throw InputError("phi: expected " + std::to_string(dim) + " entries");
  }
  CVector vec(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    vec[k] = parse_complex(j["phi"][k], "phi[" + std::to_string(k) + "]");
  }

  const bool normalize = j.value("normalize", false);
  Provenance provenance = Provenance::Explicit;
  if (j.contains("provenance")) {
    try {
      provenance = parse_provenance(j["provenance"].get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(std::string("instance: ") + e.what());
    }
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InputError("instance: \"seed\" must be unsigned");
    seed = j["seed"].get<std::uint64_t>();
  }

  try {
    State phi = normalize ? State::normalized(std::move(vec)) : State(std::move(vec), tol);
    return InstanceSpec{dim, Observable(ma, "A", tol), Observable(mb, "B", tol), std::move(phi),
                        provenance, seed};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

InstanceSpec load_instance(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("parse error in '" + path + "': " + e.what());
  }
  return parse_instance(j, tol);
}

nlohmann::json instance_to_json(const InstanceSpec& inst) {
  nlohmann::json j;
  j["dim"] = inst.dim;
  j["A"] = matrix_to_json(inst.a.matrix());
  j["B"] = matrix_to_json(inst.b.matrix());
  nlohmann::json phi = nlohmann::json::array();
  for (std::size_t k = 0; k < inst.dim; ++k) phi.push_back(complex_to_json(inst.phi.vector()[k]));
  j["phi"] = std::move(phi);
  j["normalize"] = false;
  if (inst.provenance != Provenance::Explicit) j["provenance"] = provenance_name(inst.provenance);
  if (inst.seed) j["seed"] = *inst.seed;
  return j;
}

void save_instance(const InstanceSpec& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << instance_to_json(inst).dump(2) << "\n";
}

VerifyReport verify_instance(const InstanceSpec& inst, const Tolerances& tol) {
  VerifyReport report;
  report.records = evaluate_all(inst.a, inst.b, inst.phi, tol);
  report.scalars.dphi_a = std_dev(inst.a, inst.phi, tol);
  report.scalars.dphi_b = std_dev(inst.b, inst.phi, tol);
  report.scalars.dphi_amb = std_dev(inst.a - inst.b, inst.phi, tol);
  report.scalars.cov = covariance(inst.a, inst.b, inst.phi, tol);
  report.scalars.robertson = 0.5 * std::abs(commutator_expectation(inst.a, inst.b, inst.phi, tol));
  return report;
}

bool all_defined_hold(const std::vector<EvalRecord>& records) {
  for (const EvalRecord& rec : records) {
    if (rec.defined && !rec.holds) return false;
  }
  return true;
}

std::string render_verify_text(const InstanceSpec& inst, const VerifyReport& report) {
  std::ostringstream os;
  os << "instance: dim=" << inst.dim << " provenance=" << provenance_name(inst.provenance);
  if (inst.seed) os << " seed=" << *inst.seed;
  os << "\n\nscalars:\n";
  const VerifyScalars& s = report.scalars;
  os << "  dphi_A        = " << fmt6(s.dphi_a) << "\n";
  os << "  dphi_B        = " << fmt6(s.dphi_b) << "\n";
  os << "  dphi_(A-B)    = " << fmt6(s.dphi_amb) << "\n";
  os << "  C_phi(A,B)    = " << fmt6(s.cov.real()) << " + " << fmt6(s.cov.imag()) << "i\n";
  os << "  cov_phi(A,B)  = " << fmt6(s.cov.real()) << "\n";
  os << "  robertson rhs = " << fmt6(s.robertson) << "\n";
  os << "\nrelations:\n";
  for (const EvalRecord& rec : report.records) {
    os << "  " << relation_name(rec.relation);
    for (std::size_t pad = relation_name(rec.relation).size(); pad < 10; ++pad) os << ' ';
    if (!rec.defined) {
      os << "UNDEFINED\n";
      continue;
    }
    os << "lhs=" << fmt6(rec.lhs) << "  rhs=" << fmt6(rec.rhs) << "  gap=" << fmt6(rec.gap)
       << "  " << (rec.holds ? "HOLDS" : "VIOLATED") << "\n";
  }
  return os.str();
}

nlohmann::json eval_record_to_json(const EvalRecord& rec) {
  nlohmann::json j;
  j["relation"] = relation_name(rec.relation);
  j["defined"] = rec.defined;
  if (rec.defined) {
    j["lhs"] = rec.lhs;
    j["rhs"] = rec.rhs;
    j["gap"] = rec.gap;
    j["holds"] = rec.holds;
  }
  if (!rec.aux.empty()) j["aux"] = rec.aux;
  return j;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["scalars"] = {{"dphi_A", report.scalars.dphi_a},
                  {"dphi_B", report.scalars.dphi_b},
                  {"dphi_AmB", report.scalars.dphi_amb},
                  {"cov_re", report.scalars.cov.real()},
                  {"cov_im", report.scalars.cov.imag()},
                  {"robertson_rhs", report.scalars.robertson}};
  nlohmann::json records = nlohmann::json::array();
  for (const EvalRecord& rec : report.records) records.push_back(eval_record_to_json(rec));
  j["relations"] = std::move(records);
  j["all_defined_hold"] = all_defined_hold(report.records);
  return j;
}

}  // namespace revbound
