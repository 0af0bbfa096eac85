// Brute-force cross-check for small max-plus instances: scan a finite grid
// of candidate vectors, test feasibility directly against the constraints,
// and take the best objective seen. Deliberately independent of the
// closed-form solver so the two can disagree.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropt/optimizer.hpp"

namespace tropt {

struct grid_spec {
  std::vector<double> lo;  // per-coordinate lower bounds
  std::vector<double> hi;  // per-coordinate upper bounds
  double step = 1.0;

  static constexpr std::int64_t max_points = 10'000'000;

  std::size_t dim() const { return lo.size(); }

  std::int64_t axis_count(std::size_t j) const {
    return static_cast<std::int64_t>((hi[j] - lo[j]) / step + 1e-9) + 1;
  }

  // Total lattice size; throws grid_error on a malformed grid or when the
  // count exceeds the cap.
  std::int64_t point_count() const {
    if (lo.size() != hi.size()) throw grid_error("grid bound dimensions disagree");
    if (!(step > 0)) throw grid_error("grid step must be positive");
    std::int64_t total = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (!std::isfinite(lo[j]) || !std::isfinite(hi[j]))
        throw grid_error("grid bounds must be finite");
      if (lo[j] > hi[j]) throw grid_error("grid lower bound exceeds upper bound");
      std::int64_t c = axis_count(j);
      if (total > max_points / c + 1)
        throw grid_error("grid too large (cap " + std::to_string(max_points) + " points)");
      total *= c;
    }
    if (total > max_points)
      throw grid_error("grid too large (cap " + std::to_string(max_points) + " points)");
    return total;
  }

  // A box wide enough to contain the optimum for moderate instances: the
  // upper reach pads the largest bound entry by (n+1) times the largest
  // entry magnitude, because the optimum may legitimately exceed the
  // bound vector itself when the upper constraint has small entries.
  // Coordinates with a finite lower bound start there, since every
  // feasible x satisfies x >= g.
  static grid_spec default_for(const problem<max_plus>& p) {
    const std::size_t n = p.objective.rows();
    double mag = 1.0;
    auto see_matrix = [&](const matrix<max_plus>& a) {
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (!a(i, j).is_zero()) mag = std::fmax(mag, std::fabs(a(i, j).finite_value()));
    };
    see_matrix(p.objective);
    see_matrix(p.prereq);
    see_matrix(p.bound_map);
    double bound_min = HUGE_VAL, bound_max = -HUGE_VAL;
    auto see_vector = [&](const vector<max_plus>& v) {
      for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) {
          double t = v[i].finite_value();
          mag = std::fmax(mag, std::fabs(t));
          bound_min = std::fmin(bound_min, t);
          bound_max = std::fmax(bound_max, t);
        }
    };
    see_vector(p.lower);
    see_vector(p.upper);
    if (bound_min > bound_max) bound_min = bound_max = 0.0;

    double span = (static_cast<double>(n) + 1.0) * mag;
    grid_spec g;
    g.lo.assign(n, bound_min - span);
    g.hi.assign(n, bound_max + span);
    for (std::size_t j = 0; j < n; ++j)
      if (!p.lower[j].is_zero()) g.lo[j] = std::fmax(g.lo[j], p.lower[j].finite_value());
    return g;
  }
};

using mp_problem = problem<max_plus>;

// x' A x evaluated directly.
inline mp_scalar objective(const mp_matrix& a, const mp_vector& x) {
  if (!x.regular()) throw domain_error("objective requires a regular vector");
  return conj(x) * (a * x);
}

// Both constraint families checked entrywise, no algebra beyond the products.
inline bool feasible(const mp_problem& p, const mp_vector& x) {
  return leq(p.prereq * x + p.lower, x) && leq(p.bound_map * x, p.upper);
}

struct grid_minimum {
  mp_scalar value;
  mp_vector argmin;
};

// Exhaustive scan in lexicographic order; keeps the first point attaining
// the best value, so the reported argmin is the lexicographically smallest
// one regardless of later ties. Empty optional when no grid point is
// feasible.
inline std::optional<grid_minimum> brute_force_min(const mp_problem& p, const grid_spec& grid) {
  const std::size_t n = p.objective.rows();
  if (grid.dim() != n) throw grid_error("grid dimension does not match the problem");
  grid.point_count();

  std::vector<std::int64_t> counts(n), idx(n, 0);
  for (std::size_t j = 0; j < n; ++j) counts[j] = grid.axis_count(j);

  std::optional<grid_minimum> best;
  mp_vector x(n);
  for (;;) {
    for (std::size_t j = 0; j < n; ++j)
      x[j] = mp_scalar(grid.lo[j] + static_cast<double>(idx[j]) * grid.step);
    if (feasible(p, x)) {
      mp_scalar v = objective(p.objective, x);
      if (!best || v < best->value) best = grid_minimum{v, x};
    }
    std::size_t j = n;
    while (j > 0 && ++idx[j - 1] == counts[j - 1]) idx[--j] = 0;
    if (j == 0) break;
  }
  return best;
}

inline std::optional<grid_minimum> brute_force_min(const mp_problem& p) {
  return brute_force_min(p, grid_spec::default_for(p));
}

}  // namespace tropt
