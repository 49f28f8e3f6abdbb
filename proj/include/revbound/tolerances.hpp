#pragma once

namespace revbound {

// Central tolerance record. Every numeric check in the library reads its
// threshold from one of these fields; call sites never hard-code epsilons.
struct Tolerances {
  // structural validation: Hermiticity defect, state normalization,
  // eigen-decomposition residuals, imaginary residue of real expectations
  double structural = 1e-10;
  // exact arithmetic identities (conjugate symmetry, norm homogeneity, ...)
  double arithmetic = 1e-12;
  // an inequality "holds" when gap >= -holds * max(1, |lhs|, |rhs|)
  double holds = 1e-10;
  // definedness guard for the Dunkl-Williams route: applied to the product
  // of standard deviations after rescaling each operator to unit Frobenius
  // norm, and to the bound's denominator (which is already scale-free)
  double undefined = 1e-9;
  // |gap| below this counts as a saturated (equality) instance in sweeps
  double equality = 1e-8;
};

}  // namespace revbound
