#pragma once

// Deterministic, seedable generators for random and structured (A, B, phi)
// instances. The generator algorithm and its constants are part of the
// external reproducibility contract: instances regenerate bit-for-bit from
// (provenance, dim, seed).

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "revbound/observables.hpp"

namespace revbound {

// splitmix64 step (Steele, Lea, Flood; constants fixed by the algorithm).
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic sub-seed stream: salt 0, 1, 2, ... of a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

// xoshiro256** 1.0 (Blackman & Vigna), state seeded via splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // uniform in [0, 1) with 53 random mantissa bits
  double next_double();
  // standard normal via the Marsaglia polar method (one spare cached)
  double next_normal();

 private:
  std::array<std::uint64_t, 4> state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class Provenance { HaarGue, Eigenstate, OrthoDeviation, Explicit };

std::string provenance_name(Provenance p);
Provenance parse_provenance(const std::string& name);  // throws on unknown name

struct InstanceSpec {
  std::size_t dim = 0;
  Observable a;
  Observable b;
  State phi;
  Provenance provenance = Provenance::Explicit;
  std::optional<std::uint64_t> seed;  // absent for Explicit
};

// Pure state from the unitarily invariant measure: 2*dim standard normals
// (re, im per entry, in index order), then normalized.
State haar_state(std::size_t dim, std::uint64_t seed);

// H = (G + G^dagger)/2 with G filled row-major by complex normals whose real
// and imaginary parts each have standard deviation `scale`. Hermitian by
// construction (defect exactly zero).
Observable gue_hermitian(std::size_t dim, std::uint64_t seed, double scale = 1.0,
                         std::string label = "H");

// Haar-random unitary: complex Gaussian matrix, modified Gram-Schmidt with
// one re-orthogonalization pass; each column's first significant component
// is made real positive for cross-platform determinism.
CMatrix random_unitary(std::size_t dim, Rng& rng);

// (cos(theta/2), e^{i phi} sin(theta/2)) — the 2-level parameterization.
State bloch_state(double theta, double phi_angle);

// Random A and B, phi one eigenvector of A (index from seed); guarantees
// variance(A, phi) at rounding level.
InstanceSpec eigenstate_instance(std::size_t dim, std::uint64_t seed);

// Unitary conjugation of A0 = a(|0><1| + |1><0|), B0 = b(|0><2| + |2><0|),
// phi0 = |0>, with a, b log-uniform in [0.1, 10]: deviation vectors are
// exactly orthogonal with positive deviations a and b. Requires dim >= 3.
InstanceSpec orthogonal_deviation_instance(std::size_t dim, std::uint64_t seed);

// Independent GUE pair with a Haar state.
InstanceSpec haar_gue_instance(std::size_t dim, std::uint64_t seed);

// Dispatch on provenance; Explicit cannot be regenerated.
InstanceSpec regenerate(Provenance provenance, std::size_t dim, std::uint64_t seed);

}  // namespace revbound
