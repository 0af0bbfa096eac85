// Closed-form solver for the constrained problem
//
//   minimize   conj(x) * A * x
//   subject to B*x + g <= x,  C*x <= h
//
// over regular vectors x. The minimum value comes out of a finite sum of
// trace terms over products of A and powers of B; the solutions form the
// family x = star(S)*u with S = inv(theta)*A + B and u boxed between g and
// a derived upper bound. Special cases drop the upper constraint or reduce
// it to a plain box g <= x <= h.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tropt/inequalities.hpp"
#include "tropt/matrix.hpp"

namespace tropt {

// Problem data. The objective matrix must have a nonzero spectral radius;
// the bound map must be column-regular and the upper bound regular. Both
// are checked at solve time.
template <class SF>
struct problem {
  matrix<SF> objective;   // n x n, defines conj(x)*objective*x
  matrix<SF> prereq;      // n x n recursive constraint: prereq*x + lower <= x
  matrix<SF> bound_map;   // m x n upper constraint: bound_map*x <= upper
  vector<SF> lower;       // n
  vector<SF> upper;       // m
};

// Minimum value plus the family of all minimizers.
template <class SF>
struct optimum {
  scalar<SF> value;
  solution_set<SF> solutions;
};

// Every tuple of k+1 non-negative integers with total sum between 0 and
// smax, visited exactly once.
template <class Visit>
void enumerate_compositions(int k, int smax, Visit&& visit) {
  if (k < 1) throw domain_error("composition arity must be positive");
  if (smax < 0) throw domain_error("composition budget must be non-negative");
  std::vector<int> tuple(static_cast<std::size_t>(k) + 1, 0);
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == k) {
      for (int i = 0; i <= remaining; ++i) {
        tuple[slot] = i;
        visit(std::vector<int>(tuple));
      }
      tuple[slot] = 0;
      return;
    }
    for (int i = 0; i <= remaining; ++i) {
      tuple[slot] = i;
      self(self, slot + 1, remaining - i);
    }
    tuple[slot] = 0;
  };
  rec(rec, 0, smax);
}

inline std::vector<std::vector<int>> compositions(int k, int smax) {
  std::vector<std::vector<int>> out;
  enumerate_compositions(k, smax, [&](std::vector<int> t) { out.push_back(std::move(t)); });
  return out;
}

namespace detail {

// Term enumeration grows combinatorially with the dimension; refuse sizes
// where it would stall for hours rather than start.
inline constexpr std::size_t theta_dimension_guard = 20;

template <class SF>
void check_problem(const problem<SF>& p) {
  const std::size_t n = p.objective.rows();
  if (!p.objective.square() || !p.prereq.square() || p.prereq.rows() != n ||
      p.bound_map.cols() != n || p.lower.dim() != n || p.upper.dim() != p.bound_map.rows())
    throw shape_error("non-conforming problem data");
  if (n > theta_dimension_guard)
    throw domain_error("problem dimension exceeds the term enumeration guard (20)");
  check_upper_system(p.bound_map, p.upper);
  if (spectral_radius(p.objective).is_zero())
    throw domain_error("degenerate objective: spectral radius is zero");
}

// Accumulates the k-th root of tr(product * mixer) over every product
//   B^{i0} * A * B^{i1} * ... * A * B^{ik},   0 <= i0 + ... + ik <= n - k,
// for k = 1..k_max. Left partial products are shared down the recursion;
// the B-power in the current slot grows incrementally. `with_prefix`
// controls whether the B^{i0} slot exists; `require_nonzero` restricts the
// visit to tuples with at least one positive exponent (the family whose
// pure-A terms live in the spectral radius instead).
template <class SF>
class theta_terms {
 public:
  theta_terms(const matrix<SF>& a, const matrix<SF>& b, const matrix<SF>& mixer,
              bool with_prefix, bool require_nonzero)
      : a_(a), b_(b), mixer_(mixer), with_prefix_(with_prefix), require_nonzero_(require_nonzero) {}

  scalar<SF> accumulate(int k_max, int dim) {
    acc_ = scalar<SF>();
    for (int k = 1; k <= k_max; ++k) {
      const int budget = dim - k;
      if (budget < 0) continue;
      k_ = k;
      if (with_prefix_) {
        descend_prefix(budget);
      } else {
        descend(matrix<SF>::identity(a_.rows()), 1, budget, false);
      }
    }
    return acc_;
  }

 private:
  // Slot 0 carries no leading A: left = B^{i0}.
  void descend_prefix(int budget) {
    matrix<SF> cur = matrix<SF>::identity(a_.rows());
    for (int i = 0; i <= budget; ++i) {
      if (i > 0) cur = cur * b_;
      descend(cur, 1, budget - i, i > 0);
    }
  }

  // Slots 1..k each contribute A * B^{i}.
  void descend(const matrix<SF>& left, int slot, int budget, bool used_b) {
    matrix<SF> cur = left * a_;
    for (int i = 0; i <= budget; ++i) {
      if (i > 0) cur = cur * b_;
      const bool used = used_b || i > 0;
      if (slot == k_) {
        if (!require_nonzero_ || used) {
          scalar<SF> t = trace_of_product(cur, mixer_);
          if (!t.is_zero()) acc_ += root(t, k_);
        }
      } else {
        descend(cur, slot + 1, budget - i, used);
      }
    }
  }

  const matrix<SF>& a_;
  const matrix<SF>& b_;
  const matrix<SF>& mixer_;
  bool with_prefix_;
  bool require_nonzero_;
  scalar<SF> acc_;
  int k_ = 1;
};

}  // namespace detail

// The minimum of the objective over the feasible set, by the closed-form
// trace expansion. Throws no_solution_error when the constraints admit no
// regular vector and domain_error for a degenerate objective.
template <class SF>
scalar<SF> compute_theta(const problem<SF>& p) {
  detail::check_problem(p);
  const int n = static_cast<int>(p.objective.rows());

  scalar<SF> feas = system_delta(p.prereq, p.lower, p.bound_map, p.upper);
  if (!(feas <= scalar<SF>::one()))
    throw no_solution_error("infeasible problem: constraint indicator " + format_scalar(feas) +
                            " exceeds the identity");

  matrix<SF> mixer = matrix<SF>::identity(p.objective.rows()) +
                     p.lower * (conj(p.upper) * p.bound_map);  // I + g*conj(h)*C
  detail::theta_terms<SF> terms(p.objective, p.prereq, mixer, /*with_prefix=*/true,
                                /*require_nonzero=*/false);
  return terms.accumulate(n, n);
}

// Full solution: the optimal value and every minimizer.
template <class SF>
optimum<SF> solve(const problem<SF>& p) {
  scalar<SF> theta = compute_theta(p);
  matrix<SF> s = inv(theta) * p.objective + p.prereq;
  matrix<SF> sstar = star(s);
  vector<SF> u_hi = conj(conj(p.upper) * p.bound_map * sstar);
  return {theta, {std::move(sstar), p.lower, std::move(u_hi)}};
}

// Same problem without the upper constraint (bound map dropped). The value
// reduces to the spectral radius joined with trace terms over products
// that mix at least one positive power of the recursive matrix.
template <class SF>
optimum<SF> solve_without_upper(const matrix<SF>& objective, const matrix<SF>& prereq,
                                const vector<SF>& lower) {
  const std::size_t n = objective.rows();
  if (!objective.square() || !prereq.square() || prereq.rows() != n || lower.dim() != n)
    throw shape_error("non-conforming problem data");
  if (n > detail::theta_dimension_guard)
    throw domain_error("problem dimension exceeds the term enumeration guard (20)");
  scalar<SF> lambda = spectral_radius(objective);
  if (lambda.is_zero()) throw domain_error("degenerate objective: spectral radius is zero");
  scalar<SF> t = tr_series(prereq);
  if (!(t <= scalar<SF>::one()))
    throw no_solution_error("infeasible problem: trace series " + format_scalar(t) +
                            " exceeds the identity");

  matrix<SF> eye = matrix<SF>::identity(n);
  detail::theta_terms<SF> terms(objective, prereq, eye, /*with_prefix=*/false,
                                /*require_nonzero=*/true);
  scalar<SF> theta = lambda + terms.accumulate(static_cast<int>(n) - 1, static_cast<int>(n));

  matrix<SF> s = inv(theta) * objective + prereq;
  return {theta, {star(s), lower, std::nullopt}};
}

// Box-constrained special case: minimize conj(x)*objective*x over
// lower <= x <= upper.
template <class SF>
optimum<SF> solve_box(const matrix<SF>& objective, const vector<SF>& lower,
                      const vector<SF>& upper) {
  const std::size_t n = objective.rows();
  if (!objective.square() || lower.dim() != n || upper.dim() != n)
    throw shape_error("non-conforming problem data");
  if (!upper.regular()) throw domain_error("upper bound vector is not regular");
  scalar<SF> lambda = spectral_radius(objective);
  if (lambda.is_zero()) throw domain_error("degenerate objective: spectral radius is zero");
  scalar<SF> gap = conj(upper) * lower;
  if (!(gap <= scalar<SF>::one()))
    throw no_solution_error("infeasible problem: box is empty (conj(upper)*lower = " +
                            format_scalar(gap) + ")");

  scalar<SF> theta = lambda;
  row_vector<SF> hconj = conj(upper);
  matrix<SF> p = objective;
  for (std::size_t k = 1; k <= n; ++k) {
    scalar<SF> reach = hconj * (p * lower);
    if (!reach.is_zero()) theta += root(reach, static_cast<int>(k));
    if (k < n) p = p * objective;
  }

  matrix<SF> sstar = star(inv(theta) * objective);
  vector<SF> u_hi = conj(conj(upper) * sstar);
  return {theta, {std::move(sstar), lower, std::move(u_hi)}};
}

}  // namespace tropt
