#include "revbound/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace revbound {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t s = seed;
  std::uint64_t out = 0;
  for (std::uint64_t k = 0; k <= salt; ++k) out = splitmix64(s);
  return out;
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::HaarGue: return "HAAR_GUE";
    case Provenance::Eigenstate: return "EIGENSTATE";
    case Provenance::OrthoDeviation: return "ORTHO_DEVIATION";
    case Provenance::Explicit: return "EXPLICIT";
  }
  throw std::invalid_argument("provenance_name: unknown provenance");
}

Provenance parse_provenance(const std::string& name) {
  for (Provenance p : {Provenance::HaarGue, Provenance::Eigenstate, Provenance::OrthoDeviation,
                       Provenance::Explicit}) {
    if (provenance_name(p) == name) return p;
  }
  throw std::invalid_argument("unknown provenance '" + name + "'");
}

State haar_state(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("haar_state: dim must be >= 2");
  Rng rng(seed);
  CVector v(dim);
  double n = 0.0;
  do {
    for (std::size_t k = 0; k < dim; ++k) {
      v[k] = Complex(rng.next_normal(), rng.next_normal());
    }
    n = norm(v);
  } while (n < 1e-150);
  for (std::size_t k = 0; k < dim; ++k) v[k] /= n;
  return State(std::move(v));
}

Observable gue_hermitian(std::size_t dim, std::uint64_t seed, double scale, std::string label) {
  if (dim < 2) throw std::invalid_argument("gue_hermitian: dim must be >= 2");
  if (!(scale > 0.0)) throw std::invalid_argument("gue_hermitian: scale must be positive");
  Rng rng(seed);
  CMatrix g(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      g.at(j, k) = Complex(scale * rng.next_normal(), scale * rng.next_normal());
  CMatrix h(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    h.at(j, j) = g.at(j, j).real();
    for (std::size_t k = j + 1; k < dim; ++k) {
      const Complex z = 0.5 * (g.at(j, k) + std::conj(g.at(k, j)));
      h.at(j, k) = z;
      h.at(k, j) = std::conj(z);
    }
  }
  return Observable(std::move(h), std::move(label));
}

CMatrix random_unitary(std::size_t dim, Rng& rng) {
  CMatrix q(dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k)
      q.at(j, k) = Complex(rng.next_normal(), rng.next_normal());

  // modified Gram-Schmidt on columns, two passes
  for (std::size_t col = 0; col < dim; ++col) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex proj{};
        for (std::size_t k = 0; k < dim; ++k) proj += std::conj(q.at(k, prev)) * q.at(k, col);
        for (std::size_t k = 0; k < dim; ++k) q.at(k, col) -= proj * q.at(k, prev);
      }
    }
    double n = 0.0;
    for (std::size_t k = 0; k < dim; ++k) n += std::norm(q.at(k, col));
    n = std::sqrt(n);
    if (n < 1e-150) throw std::runtime_error("random_unitary: degenerate Gaussian column");
    for (std::size_t k = 0; k < dim; ++k) q.at(k, col) /= n;
    // phase fixing: first component above threshold made real positive
    for (std::size_t k = 0; k < dim; ++k) {
      const double mag = std::abs(q.at(k, col));
      if (mag > 1e-8) {
        const Complex rot = std::conj(q.at(k, col)) / mag;
        for (std::size_t l = 0; l < dim; ++l) q.at(l, col) *= rot;
        break;
      }
    }
  }
  return q;
}

State bloch_state(double theta, double phi_angle) {
  CVector v(2);
  v[0] = std::cos(theta / 2.0);
  v[1] = std::polar(std::sin(theta / 2.0), phi_angle);
  return State(std::move(v));
}

namespace {

CMatrix conjugate_by_unitary(const CMatrix& m, const CMatrix& q) {
  // Q M Q^dagger, symmetrized exactly afterwards
  const std::size_t d = m.dim();
  CMatrix qm = matmul(q, m);
  CMatrix out(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      Complex s{};
      for (std::size_t l = 0; l < d; ++l) s += qm.at(j, l) * std::conj(q.at(k, l));
      out.at(j, k) = s;
    }
  CMatrix h(d);
  for (std::size_t j = 0; j < d; ++j) {
    h.at(j, j) = out.at(j, j).real();
    for (std::size_t k = j + 1; k < d; ++k) {
      const Complex z = 0.5 * (out.at(j, k) + std::conj(out.at(k, j)));
      h.at(j, k) = z;
      h.at(k, j) = std::conj(z);
    }
  }
  return h;
}

}  // namespace

InstanceSpec eigenstate_instance(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("eigenstate_instance: dim must be >= 2");
  Observable a = gue_hermitian(dim, derive_seed(seed, 0), 1.0, "A");
  const EigenDecomposition ed = eig_hermitian(a.matrix());
  const std::size_t index = static_cast<std::size_t>(derive_seed(seed, 1) % dim);
  State phi(ed.eigenvectors[index]);
  Observable b = gue_hermitian(dim, derive_seed(seed, 2), 1.0, "B");
  return InstanceSpec{dim, std::move(a), std::move(b), std::move(phi), Provenance::Eigenstate,
                      seed};
}

InstanceSpec orthogonal_deviation_instance(std::size_t dim, std::uint64_t seed) {
  if (dim < 3) {
    throw std::invalid_argument(
        "orthogonal_deviation_instance: dim must be >= 3 (three orthogonal directions needed)");
  }
  Rng rng(derive_seed(seed, 0));
  // amplitudes log-uniform in [0.1, 10]
  const double a_amp = std::pow(10.0, 2.0 * rng.next_double() - 1.0);
  const double b_amp = std::pow(10.0, 2.0 * rng.next_double() - 1.0);

  CMatrix a0(dim), b0(dim);
  a0.at(0, 1) = a0.at(1, 0) = a_amp;
  b0.at(0, 2) = b0.at(2, 0) = b_amp;

  const CMatrix q = random_unitary(dim, rng);
  CVector phi_vec(dim);
  for (std::size_t k = 0; k < dim; ++k) phi_vec[k] = q.at(k, 0);

  return InstanceSpec{dim,
                      Observable(conjugate_by_unitary(a0, q), "A"),
                      Observable(conjugate_by_unitary(b0, q), "B"),
                      State(std::move(phi_vec)),
                      Provenance::OrthoDeviation,
                      seed};
}

InstanceSpec haar_gue_instance(std::size_t dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("haar_gue_instance: dim must be >= 2");
  return InstanceSpec{dim,
                      gue_hermitian(dim, derive_seed(seed, 0), 1.0, "A"),
                      gue_hermitian(dim, derive_seed(seed, 1), 1.0, "B"),
                      haar_state(dim, derive_seed(seed, 2)),
                      Provenance::HaarGue,
                      seed};
}

InstanceSpec regenerate(Provenance provenance, std::size_t dim, std::uint64_t seed) {
  switch (provenance) {
    case Provenance::HaarGue: return haar_gue_instance(dim, seed);
    case Provenance::Eigenstate: return eigenstate_instance(dim, seed);
    case Provenance::OrthoDeviation: return orthogonal_deviation_instance(dim, seed);
    case Provenance::Explicit:
      throw std::invalid_argument("regenerate: EXPLICIT instances are not seed-generated");
  }
  throw std::invalid_argument("regenerate: unknown provenance");
}

}  // namespace revbound
