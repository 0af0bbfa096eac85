// Complete solvers for linear inequalities over an idempotent semifield:
//
//   A*x + b <= x            (recursive lower bound; all regular solutions
//                            are star(A)*u for regular u >= b, and exist
//                            iff Tr(A) <= one)
//   C*x <= d                (upper bound; solutions are exactly x <= conj(conj(d)*C))
//   both at once            (solutions are star(A)*u with u boxed between b
//                            and conj(conj(d)*C*star(A)); exist iff
//                            delta = Tr(A) + conj(d)*C*star(A)*b <= one)
//
// Solvers return the full parametric solution set, never a single point.
#pragma once

#include <optional>
#include <string>

#include "tropt/format.hpp"
#include "tropt/matrix.hpp"

namespace tropt {

// The family x = generator * u for regular u with lower <= u (<= upper,
// when the upper bound is present). A parametrization of every regular
// solution of the originating system, not a one-to-one coordinate system.
template <class SF>
struct solution_set {
  matrix<SF> generator;              // a star matrix, >= I
  vector<SF> lower;                  // bound on the parameter u
  std::optional<vector<SF>> upper;   // absent = unbounded above

  vector<SF> member(const vector<SF>& u) const { return generator * u; }
  // The least member; coincides with member(lower) by isotonicity.
  vector<SF> least() const { return generator * lower; }
};

namespace detail {
template <class SF>
void check_upper_system(const matrix<SF>& c, const vector<SF>& d) {
  if (c.rows() != d.dim())
    throw shape_error("bound vector dimension does not match the constraint rows");
  if (!is_column_regular(c))
    throw domain_error("constraint matrix has an all-zero column");
  if (!d.regular())
    throw domain_error("bound vector is not regular");
}
}  // namespace detail

// All regular solutions of  a*x + b <= x.
template <class SF>
solution_set<SF> solve_recursive_bound(const matrix<SF>& a, const vector<SF>& b) {
  if (!a.square()) throw shape_error("recursive inequality needs a square matrix");
  if (a.rows() != b.dim()) throw shape_error("vector dimension does not match the matrix");
  scalar<SF> t = tr_series(a);
  if (!(t <= scalar<SF>::one()))
    throw no_solution_error("no regular solution: trace series " + format_scalar(t) +
                            " exceeds the identity");
  return {star(a), b, std::nullopt};
}

// The maximal solution of  c*x <= d;  x solves the inequality iff x <= result.
template <class SF>
vector<SF> solve_upper_bound(const matrix<SF>& c, const vector<SF>& d) {
  detail::check_upper_system(c, d);
  return conj(conj(d) * c);
}

// Feasibility indicator of the combined system.
template <class SF>
scalar<SF> system_delta(const matrix<SF>& a, const vector<SF>& b, const matrix<SF>& c,
                        const vector<SF>& d) {
  if (!a.square() || a.rows() != b.dim() || c.cols() != a.rows())
    throw shape_error("non-conforming system");
  detail::check_upper_system(c, d);
  return tr_series(a) + conj(d) * c * star(a) * b;
}

// All regular solutions of the combined system  a*x + b <= x,  c*x <= d.
template <class SF>
solution_set<SF> solve_system(const matrix<SF>& a, const vector<SF>& b, const matrix<SF>& c,
                              const vector<SF>& d) {
  if (!a.square() || a.rows() != b.dim() || c.cols() != a.rows())
    throw shape_error("non-conforming system");
  detail::check_upper_system(c, d);

  scalar<SF> t = tr_series(a);
  matrix<SF> astar = star(a);
  vector<SF> u_hi = conj(conj(d) * c * astar);
  scalar<SF> delta = t + conj(d) * c * astar * b;
  if (!(delta <= scalar<SF>::one())) {
    // One folded condition, two causes; name the one that fired.
    std::string why = !(t <= scalar<SF>::one())
                          ? "trace series " + format_scalar(t) + " exceeds the identity"
                          : "lower bound exceeds the derived upper bound (empty parameter box)";
    throw no_solution_error("no regular solution: delta = " + format_scalar(delta) + "; " + why);
  }
  return {std::move(astar), b, std::move(u_hi)};
}

// The right-hand side of the trace identity for delta: equals system_delta
// whenever that value is at most one. Terms: conj(d)*c*b plus the traces of
// a^m * (I + b*conj(d)*c) for m = 1..n.
template <class SF>
scalar<SF> delta_alternative_form(const matrix<SF>& a, const vector<SF>& b, const matrix<SF>& c,
                                  const vector<SF>& d) {
  if (!a.square() || a.rows() != b.dim() || c.cols() != a.rows())
    throw shape_error("non-conforming system");
  detail::check_upper_system(c, d);

  row_vector<SF> dc = conj(d) * c;
  scalar<SF> acc = dc * b;
  matrix<SF> mixer = matrix<SF>::identity(a.rows()) + b * dc;
  matrix<SF> p = matrix<SF>::identity(a.rows());
  for (std::size_t m = 1; m <= a.rows(); ++m) {
    p = p * a;
    acc += trace_of_product(p, mixer);
  }
  return acc;
}

}  // namespace tropt
