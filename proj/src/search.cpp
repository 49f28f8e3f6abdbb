#include "revbound/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace revbound {

State parameterize_state(std::span<const double> params) {
  if (params.size() < 2 || params.size() % 2 != 0) {
    throw std::invalid_argument("parameterize_state: expected 2*dim-2 parameters, dim >= 2");
  }
  const std::size_t dim = params.size() / 2 + 1;
  CVector v(dim);
  double running = 1.0;
  std::vector<double> mag(dim);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    mag[k] = running * std::cos(params[k] / 2.0);
    running *= std::sin(params[k] / 2.0);
  }
  mag[dim - 1] = running;
  v[0] = mag[0];
  for (std::size_t k = 1; k < dim; ++k) {
    v[k] = std::polar(mag[k], params[dim - 1 + k - 1]);
  }
  return State(std::move(v));
}

std::vector<double> state_parameters(const State& state) {
  const std::size_t dim = state.dim();
  if (dim < 2) throw std::invalid_argument("state_parameters: dim must be >= 2");
  CVector v = state.vector();
  // gauge: rotate so the first entry is real nonnegative
  const double mag0 = std::abs(v[0]);
  if (mag0 > 0.0) {
    const Complex rot = std::conj(v[0]) / mag0;
    for (std::size_t k = 0; k < dim; ++k) v[k] *= rot;
  }
  std::vector<double> params(2 * dim - 2, 0.0);
  double running = 1.0;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    double c = running > 1e-15 ? std::abs(v[k]) / running : 1.0;
    c = std::clamp(c, 0.0, 1.0);
    params[k] = 2.0 * std::acos(c);
    running *= std::sqrt(std::max(0.0, 1.0 - c * c));
  }
  for (std::size_t k = 1; k < dim; ++k) {
    const Complex z = v[k];
    params[dim - 1 + k - 1] = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
  }
  return params;
}

double gap_objective(Relation relation, const Observable& a, const Observable& b,
                     std::span<const double> params, const Tolerances& tol) {
  if (!is_upper_bound(relation)) {
    throw std::invalid_argument("gap_objective: '" + relation_name(relation) +
                                "' is not an upper-bound relation");
  }
  const State phi = parameterize_state(params);
  require_same_dim(a.dim(), phi.dim(), "gap_objective");
  const EvalRecord rec = evaluate_relation(relation, a, b, phi, tol);
  return rec.defined ? rec.gap : kUndefinedPenalty;
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

double simplex_diameter(const std::vector<Vertex>& vs) {
  double diam = 0.0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    double d2 = 0.0;
    for (std::size_t c = 0; c < vs[i].x.size(); ++c) {
      const double d = vs[i].x[c] - vs[0].x[c];
      d2 += d * d;
    }
    diam = std::max(diam, std::sqrt(d2));
  }
  return diam;
}

struct RestartOutcome {
  Vertex best;
  bool converged = false;
};

}  // namespace

SearchResult minimize_gap(const Observable& a, const Observable& b, const SearchConfig& config,
                          const Tolerances& tol) {
  require_same_dim(a.dim(), b.dim(), "minimize_gap");
  if (a.dim() < 2) throw std::invalid_argument("minimize_gap: dim must be >= 2");
  if (config.max_iterations < 1) throw std::invalid_argument("minimize_gap: max_iterations < 1");
  if (config.restarts < 1) throw std::invalid_argument("minimize_gap: restarts < 1");
  if (!(config.convergence_tol > 0.0)) {
    throw std::invalid_argument("minimize_gap: convergence_tol must be positive");
  }

  const std::size_t n = 2 * a.dim() - 2;
  const double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const double kInitialStep = 0.5;

  long evaluations = 0;
  int global_iteration = 0;
  double best_so_far = std::numeric_limits<double>::infinity();
  SearchResult result{parameterize_state(std::vector<double>(n, 0.0)),
                      std::numeric_limits<double>::infinity(), 0, false, {}};

  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return gap_objective(config.relation, a, b, x, tol);
  };

  for (int restart = 0; restart < config.restarts; ++restart) {
    const std::vector<double> x0 =
        state_parameters(haar_state(a.dim(), derive_seed(config.seed, restart)));

    std::vector<Vertex> vs(n + 1);
    vs[0] = {x0, eval(x0)};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> xi = x0;
      xi[i] += kInitialStep;
      vs[i + 1] = {xi, eval(xi)};
    }

    bool converged = false;
    for (int iter = 0; iter < config.max_iterations; ++iter) {
      std::sort(vs.begin(), vs.end(), [](const Vertex& l, const Vertex& r) { return l.f < r.f; });
      if (config.record_trace) {
        best_so_far = std::min(best_so_far, vs[0].f);
        result.trace.emplace_back(global_iteration++, best_so_far);
      }
      if (simplex_diameter(vs) < config.convergence_tol) {
        converged = true;
        break;
      }

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) centroid[c] += vs[i].x[c] / static_cast<double>(n);
      const Vertex& worst = vs[n];

      auto blend = [&](double coeff, const std::vector<double>& towards) {
        std::vector<double> x(n);
        for (std::size_t c = 0; c < n; ++c) x[c] = centroid[c] + coeff * (towards[c] - centroid[c]);
        return x;
      };

      const std::vector<double> xr = blend(-kReflect, worst.x);
      const double fr = eval(xr);
      if (fr < vs[0].f) {
        const std::vector<double> xe = blend(-kReflect * kExpand, worst.x);
        const double fe = eval(xe);
        vs[n] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      } else if (fr < vs[n - 1].f) {
        vs[n] = {xr, fr};
      } else {
        const bool outside = fr < worst.f;
        const std::vector<double> xc = outside ? blend(-kReflect * kContract, worst.x)
                                               : blend(kContract, worst.x);
        const double fc = eval(xc);
        if (fc < std::min(fr, worst.f)) {
          vs[n] = {xc, fc};
        } else {
          for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t c = 0; c < n; ++c)
              vs[i].x[c] = vs[0].x[c] + kShrink * (vs[i].x[c] - vs[0].x[c]);
            vs[i].f = eval(vs[i].x);
          }
        }
      }
    }

    std::sort(vs.begin(), vs.end(), [](const Vertex& l, const Vertex& r) { return l.f < r.f; });
    if (vs[0].f < result.best_gap) {
      result.best_gap = vs[0].f;
      result.best_state = parameterize_state(vs[0].x);
      result.converged = converged;
    }
  }

  result.evaluations = evaluations;
  return result;
}

}  // namespace revbound
