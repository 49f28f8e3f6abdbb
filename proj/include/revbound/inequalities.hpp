#pragma once

// Every identity and inequality of the norm-sum theorem and the reverse
// uncertainty relations, evaluated as explicit lhs/rhs records.

#include <map>
#include <string>
#include <vector>

#include "revbound/observables.hpp"
#include "revbound/tolerances.hpp"

namespace revbound {

enum class Relation {
  Id1,             // norm-sum identity (residual check)
  In0,             // upper bound via |<psi1|psi2>|
  In1,             // upper bound via ||psi1|| ||psi2||
  CauchySchwarz,   // |<psi1|psi2>| <= ||psi1|| ||psi2||
  DunklWilliams,   // lower bound on ||psi1 - psi2||, nonzero vectors only
  ReverseCovariance,  // (dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2|C|
  ReverseProduct,     // (dA)^2 + (dB)^2 <= [d(A-B)]^2 + 2 dA dB
  ReverseDw,          // Dunkl-Williams route, undefined at eigenvector states
  Robertson,          // dA dB >= |<[A,B]>|/2, the lower-bound companion
};

const std::vector<Relation>& all_relations();
std::string relation_name(Relation r);
Relation parse_relation(const std::string& name);  // throws on unknown name
bool is_upper_bound(Relation r);                   // gap-minimization candidates

struct EvalRecord {
  Relation relation{};
  // lhs/rhs in the relation's written orientation; gap is normalized so
  // gap >= 0 means the relation holds (rhs - lhs for upper bounds,
  // lhs - rhs for lower bounds, minus the residual for the Id1 identity).
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  bool holds = false;
  // Undefinedness is an outcome, not an error: when false, lhs/rhs/gap are
  // zero sentinels and must not be interpreted numerically.
  bool defined = true;
  std::map<std::string, double> aux;
};

// |(||p1||^2 + ||p2||^2) - (||p1 - p2||^2 + 2 Re<p1|p2>)|
double identity_id1_residual(const CVector& psi1, const CVector& psi2);

EvalRecord bound_in0(const CVector& psi1, const CVector& psi2, const Tolerances& tol = {});
EvalRecord bound_in1(const CVector& psi1, const CVector& psi2, const Tolerances& tol = {});
EvalRecord cauchy_schwarz(const CVector& psi1, const CVector& psi2, const Tolerances& tol = {});
EvalRecord dunkl_williams(const CVector& psi1, const CVector& psi2, const Tolerances& tol = {});
EvalRecord eval_id1(const CVector& psi1, const CVector& psi2, const Tolerances& tol = {});

EvalRecord reverse_covariance(const Observable& a, const Observable& b, const State& phi,
                              const Tolerances& tol = {});
EvalRecord reverse_product(const Observable& a, const Observable& b, const State& phi,
                           const Tolerances& tol = {});
EvalRecord reverse_dw(const Observable& a, const Observable& b, const State& phi,
                      const Tolerances& tol = {});
EvalRecord robertson_lower(const Observable& a, const Observable& b, const State& phi,
                           const Tolerances& tol = {});

// Evaluates one relation for an (A, B, phi) triple; the vector relations are
// applied to the deviation vectors psi1 = dA|phi>, psi2 = dB|phi>.
EvalRecord evaluate_relation(Relation r, const Observable& a, const Observable& b,
                             const State& phi, const Tolerances& tol = {});

std::vector<EvalRecord> evaluate_all(const Observable& a, const Observable& b, const State& phi,
                                     const Tolerances& tol = {});

}  // namespace revbound
