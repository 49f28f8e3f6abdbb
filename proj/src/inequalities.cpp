#include "revbound/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revbound {

namespace {

// gap >= -holds_tol once lhs/rhs are measured on unit scale
bool holds_with(double gap, double lhs, double rhs, const Tolerances& tol) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return gap >= -tol.holds * scale;
}

EvalRecord upper_bound_record(Relation r, double lhs, double rhs, const Tolerances& tol) {
  EvalRecord rec;
  rec.relation = r;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.gap = rhs - lhs;
  rec.holds = holds_with(rec.gap, lhs, rhs, tol);
  return rec;
}

EvalRecord lower_bound_record(Relation r, double lhs, double rhs, const Tolerances& tol) {
  EvalRecord rec;
  rec.relation = r;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.gap = lhs - rhs;
  rec.holds = holds_with(rec.gap, lhs, rhs, tol);
  return rec;
}

EvalRecord undefined_record(Relation r) {
  EvalRecord rec;
  rec.relation = r;
  rec.defined = false;
  rec.holds = false;
  return rec;
}

}  // namespace

const std::vector<Relation>& all_relations() {
  static const std::vector<Relation> order = {
      Relation::Id1,           Relation::In0,
      Relation::In1,           Relation::CauchySchwarz,
      Relation::DunklWilliams, Relation::ReverseCovariance,
      Relation::ReverseProduct, Relation::ReverseDw,
      Relation::Robertson,
  };
  return order;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Id1: return "ID1";
    case Relation::In0: return "IN0";
    case Relation::In1: return "IN1";
    case Relation::CauchySchwarz: return "CS";
    case Relation::DunklWilliams: return "DW";
    case Relation::ReverseCovariance: return "REV_COV";
    case Relation::ReverseProduct: return "REV_PROD";
    case Relation::ReverseDw: return "REV_DW";
    case Relation::Robertson: return "ROBERTSON";
  }
  throw std::invalid_argument("relation_name: unknown relation");
}

Relation parse_relation(const std::string& name) {
  for (Relation r : all_relations()) {
    if (relation_name(r) == name) return r;
  }
  throw std::invalid_argument("unknown relation '" + name + "'");
}

bool is_upper_bound(Relation r) {
  return r == Relation::ReverseCovariance || r == Relation::ReverseProduct ||
         r == Relation::ReverseDw;
}

double identity_id1_residual(const CVector& psi1, const CVector& psi2) {
  require_same_dim(psi1.dim(), psi2.dim(), "identity_id1_residual");
  const double n1 = norm(psi1), n2 = norm(psi2), nd = norm(psi1 - psi2);
  const double lhs = n1 * n1 + n2 * n2;
  const double rhs = nd * nd + 2.0 * inner(psi1, psi2).real();
  return std::abs(lhs - rhs);
}

EvalRecord eval_id1(const CVector& psi1, const CVector& psi2, const Tolerances& tol) {
  require_same_dim(psi1.dim(), psi2.dim(), "eval_id1");
  const double n1 = norm(psi1), n2 = norm(psi2), nd = norm(psi1 - psi2);
  EvalRecord rec;
  rec.relation = Relation::Id1;
  rec.lhs = n1 * n1 + n2 * n2;
  rec.rhs = nd * nd + 2.0 * inner(psi1, psi2).real();
  rec.gap = -std::abs(rec.lhs - rec.rhs);  // identity: gap is minus the residual
  rec.holds = holds_with(rec.gap, rec.lhs, rec.rhs, tol);
  rec.aux["residual"] = -rec.gap;
  return rec;
}

EvalRecord bound_in0(const CVector& psi1, const CVector& psi2, const Tolerances& tol) {
  require_same_dim(psi1.dim(), psi2.dim(), "bound_in0");
  const double n1 = norm(psi1), n2 = norm(psi2), nd = norm(psi1 - psi2);
  const Complex ip = inner(psi1, psi2);
  EvalRecord rec = upper_bound_record(Relation::In0, n1 * n1 + n2 * n2,
                                      nd * nd + 2.0 * std::abs(ip), tol);
  rec.aux["inner_re"] = ip.real();
  rec.aux["inner_im"] = ip.imag();
  rec.aux["inner_abs"] = std::abs(ip);
  // the gap collapses to 2(|<p1|p2>| - Re<p1|p2>) by the norm-sum identity
  rec.aux["gap_formula"] = 2.0 * (std::abs(ip) - ip.real());
  return rec;
}

EvalRecord bound_in1(const CVector& psi1, const CVector& psi2, const Tolerances& tol) {
  require_same_dim(psi1.dim(), psi2.dim(), "bound_in1");
  const double n1 = norm(psi1), n2 = norm(psi2), nd = norm(psi1 - psi2);
  EvalRecord rec = upper_bound_record(Relation::In1, n1 * n1 + n2 * n2,
                                      nd * nd + 2.0 * n1 * n2, tol);
  rec.aux["norm1"] = n1;
  rec.aux["norm2"] = n2;
  return rec;
}

EvalRecord cauchy_schwarz(const CVector& psi1, const CVector& psi2, const Tolerances& tol) {
  require_same_dim(psi1.dim(), psi2.dim(), "cauchy_schwarz");
  return upper_bound_record(Relation::CauchySchwarz, std::abs(inner(psi1, psi2)),
                            norm(psi1) * norm(psi2), tol);
}

EvalRecord dunkl_williams(const CVector& psi1, const CVector& psi2, const Tolerances& tol) {
  require_same_dim(psi1.dim(), psi2.dim(), "dunkl_williams");
  const double n1 = norm(psi1), n2 = norm(psi2);
  if (n1 <= tol.undefined || n2 <= tol.undefined) {
    EvalRecord rec = undefined_record(Relation::DunklWilliams);
    rec.aux["norm1"] = n1;
    rec.aux["norm2"] = n2;
    return rec;
  }
  const Complex inv1 = Complex(1.0 / n1), inv2 = Complex(1.0 / n2);
  const double unit_dist = norm(inv1 * psi1 - inv2 * psi2);
  EvalRecord rec = lower_bound_record(Relation::DunklWilliams, norm(psi1 - psi2),
                                      0.5 * (n1 + n2) * unit_dist, tol);
  rec.aux["norm1"] = n1;
  rec.aux["norm2"] = n2;
  rec.aux["unit_distance"] = unit_dist;
  return rec;
}

EvalRecord reverse_covariance(const Observable& a, const Observable& b, const State& phi,
                              const Tolerances& tol) {
  const double var_a = variance(a, phi, tol);
  const double var_b = variance(b, phi, tol);
  const double var_diff = variance(a - b, phi, tol);
  const Complex c = covariance(a, b, phi, tol);
  EvalRecord rec = upper_bound_record(Relation::ReverseCovariance, var_a + var_b,
                                      var_diff + 2.0 * std::abs(c), tol);
  rec.aux["dphi_A"] = std::sqrt(var_a);
  rec.aux["dphi_B"] = std::sqrt(var_b);
  rec.aux["dphi_AmB"] = std::sqrt(var_diff);
  rec.aux["cov_re"] = c.real();
  rec.aux["cov_im"] = c.imag();
  rec.aux["cov_abs"] = std::abs(c);
  return rec;
}

EvalRecord reverse_product(const Observable& a, const Observable& b, const State& phi,
                           const Tolerances& tol) {
  const double var_a = variance(a, phi, tol);
  const double var_b = variance(b, phi, tol);
  const double var_diff = variance(a - b, phi, tol);
  const double da = std::sqrt(var_a), db = std::sqrt(var_b);
  EvalRecord rec = upper_bound_record(Relation::ReverseProduct, var_a + var_b,
                                      var_diff + 2.0 * da * db, tol);
  rec.aux["dphi_A"] = da;
  rec.aux["dphi_B"] = db;
  rec.aux["dphi_AmB"] = std::sqrt(var_diff);
  return rec;
}

EvalRecord reverse_dw(const Observable& a, const Observable& b, const State& phi,
                      const Tolerances& tol) {
  const double var_a = variance(a, phi, tol);
  const double var_b = variance(b, phi, tol);
  const double da = std::sqrt(var_a), db = std::sqrt(var_b);
  const Complex c = covariance(a, b, phi, tol);

  // definedness: deviations measured after rescaling each operator to unit
  // Frobenius norm, so eigenvector states are flagged at any overall scale
  const double fa = frobenius_norm(a.matrix());
  const double fb = frobenius_norm(b.matrix());
  const double da_unit = fa > 0.0 ? da / fa : 0.0;
  const double db_unit = fb > 0.0 ? db / fb : 0.0;

  EvalRecord rec;
  if (da_unit * db_unit <= tol.undefined) {
    rec = undefined_record(Relation::ReverseDw);
    rec.aux["dphi_A"] = da;
    rec.aux["dphi_B"] = db;
    return rec;
  }
  const double denom = 1.0 - c.real() / (da * db);
  if (std::abs(denom) <= tol.undefined) {
    rec = undefined_record(Relation::ReverseDw);
    rec.aux["dphi_A"] = da;
    rec.aux["dphi_B"] = db;
    rec.aux["denominator"] = denom;
    return rec;
  }
  const double var_diff = variance(a - b, phi, tol);
  rec = upper_bound_record(Relation::ReverseDw, var_a + var_b,
                           2.0 * var_diff / denom - 2.0 * da * db, tol);
  rec.aux["dphi_A"] = da;
  rec.aux["dphi_B"] = db;
  rec.aux["dphi_AmB"] = std::sqrt(var_diff);
  rec.aux["cov_re"] = c.real();
  rec.aux["cov_im"] = c.imag();
  rec.aux["denominator"] = denom;
  return rec;
}

EvalRecord robertson_lower(const Observable& a, const Observable& b, const State& phi,
                           const Tolerances& tol) {
  const double da = std_dev(a, phi, tol);
  const double db = std_dev(b, phi, tol);
  const Complex comm = commutator_expectation(a, b, phi, tol);
  EvalRecord rec = lower_bound_record(Relation::Robertson, da * db, 0.5 * std::abs(comm), tol);
  rec.aux["dphi_A"] = da;
  rec.aux["dphi_B"] = db;
  rec.aux["commutator_abs"] = std::abs(comm);
  return rec;
}

EvalRecord evaluate_relation(Relation r, const Observable& a, const Observable& b,
                             const State& phi, const Tolerances& tol) {
  switch (r) {
    case Relation::ReverseCovariance: return reverse_covariance(a, b, phi, tol);
    case Relation::ReverseProduct: return reverse_product(a, b, phi, tol);
    case Relation::ReverseDw: return reverse_dw(a, b, phi, tol);
    case Relation::Robertson: return robertson_lower(a, b, phi, tol);
    default: break;
  }
  const CVector psi1 = deviation_vector(a, phi, tol).vector;
  const CVector psi2 = deviation_vector(b, phi, tol).vector;
  switch (r) {
    case Relation::Id1: return eval_id1(psi1, psi2, tol);
    case Relation::In0: return bound_in0(psi1, psi2, tol);
    case Relation::In1: return bound_in1(psi1, psi2, tol);
    case Relation::CauchySchwarz: return cauchy_schwarz(psi1, psi2, tol);
    case Relation::DunklWilliams: return dunkl_williams(psi1, psi2, tol);
    default: throw std::invalid_argument("evaluate_relation: unknown relation");
  }
}

std::vector<EvalRecord> evaluate_all(const Observable& a, const Observable& b, const State& phi,
                                     const Tolerances& tol) {
  std::vector<EvalRecord> out;
  out.reserve(all_relations().size());
  for (Relation r : all_relations()) out.push_back(evaluate_relation(r, a, b, phi, tol));
  return out;
}

}  // namespace revbound
