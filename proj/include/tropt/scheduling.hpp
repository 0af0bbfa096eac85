// Project scheduling under start-start, start-finish, early-start and
// late-finish constraints, minimizing the maximum flow time (the interval
// between an activity's initiation and completion).
//
// The model lives in the max-plus semifield: initiation times x satisfy
// start_start*x + early_start <= x, completions are y = start_finish*x
// (each completion as early as the lags allow), and y <= late_finish.
// Minimizing the largest y_i - x_i is the constrained optimization problem
// with the start-finish matrix in both the objective and the upper
// constraint, so the solver delegates there.
#pragma once

#include <string>
#include <vector>

#include "tropt/optimizer.hpp"

namespace tropt {

// Lag tables are sparse in practice: unset lags are the semifield zero,
// which is the no-constraint element. Adding a lag joins it with whatever
// is already set, so the tighter bound wins and a zero lag is a no-op.
class project {
 public:
  explicit project(std::vector<std::string> labels)
      : labels_(std::move(labels)),
        start_start_(labels_.size(), labels_.size()),
        start_finish_(labels_.size(), labels_.size()),
        early_start_(labels_.size()),
        late_finish_(labels_.size()) {}

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Initiation of `to` at least `lag` after initiation of `from`.
  void add_start_start(std::size_t from, std::size_t to, mp_scalar lag) {
    start_start_(to, from) += lag;
  }
  // Completion of `to` at least `lag` after initiation of `from`.
  void add_start_finish(std::size_t from, std::size_t to, mp_scalar lag) {
    start_finish_(to, from) += lag;
  }
  void set_early_start(std::size_t i, mp_scalar t) { early_start_[i] = t; }
  void set_late_finish(std::size_t i, mp_scalar t) { late_finish_[i] = t; }

  const mp_matrix& start_start() const { return start_start_; }
  const mp_matrix& start_finish() const { return start_finish_; }
  const mp_vector& early_start() const { return early_start_; }
  const mp_vector& late_finish() const { return late_finish_; }

 private:
  std::vector<std::string> labels_;
  mp_matrix start_start_;
  mp_matrix start_finish_;
  mp_vector early_start_;
  mp_vector late_finish_;
};

struct schedule {
  mp_vector initiation;           // x
  mp_vector completion;           // y = start_finish * x
  mp_scalar max_flow_time;        // the minimized objective
  solution_set<max_plus> family;  // every optimal initiation vector
};

enum class representative { earliest, latest };

// Checks the solvability hypotheses; an empty list means the project is
// well-posed. Diagnostics name the violated condition and the activity.
inline std::vector<std::string> validate_project(const project& p) {
  std::vector<std::string> issues;
  const auto& a = p.start_finish();
  for (std::size_t j = 0; j < p.size(); ++j) {
    bool driven = false;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!a(i, j).is_zero()) {
        driven = true;
        break;
      }
    if (!driven)
      issues.push_back("activity '" + p.labels()[j] +
                       "' drives no completion (start-finish column " + std::to_string(j + 1) +
                       " not regular)");
  }
  if (is_column_regular(a) && spectral_radius(a).is_zero())
    issues.push_back("start-finish lags have zero spectral radius (no activity has a positive "
                     "self-supporting lag cycle)");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.late_finish()[i].is_zero())
      issues.push_back("late-finish bound not regular: activity '" + p.labels()[i] +
                       "' has no finite bound");
  return issues;
}

// Feasibility indicator of the precedence/bound constraints:
// Tr(B) + h' A B* g where B is start-start, A start-finish.
inline mp_scalar schedule_delta(const project& p) {
  return system_delta(p.start_start(), p.early_start(), p.start_finish(), p.late_finish());
}

// The optimal schedule: minimizes the maximum flow time and returns the
// chosen representative (earliest by default) together with the whole
// optimal family. Throws domain_error on validation issues and
// no_solution_error when no schedule satisfies the constraints.
inline schedule solve_schedule(const project& p, representative rep = representative::earliest) {
  auto issues = validate_project(p);
  if (!issues.empty()) {
    std::string msg = "project fails validation:";
    for (const auto& s : issues) msg += "\n  " + s;
    throw domain_error(msg);
  }
  mp_scalar delta = schedule_delta(p);
  if (!(delta <= mp_scalar::one()))
    throw no_solution_error("no feasible schedule: constraint indicator " + format_scalar(delta) +
                            " exceeds the identity");

  problem<max_plus> prob{p.start_finish(), p.start_start(), p.start_finish(), p.early_start(),
                         p.late_finish()};
  optimum<max_plus> opt = solve(prob);
  const mp_vector& u =
      rep == representative::earliest ? opt.solutions.lower : *opt.solutions.upper;
  mp_vector x = opt.solutions.member(u);
  // With an early-start bound absent the family is open below and has no
  // least member; only the latest representative names a schedule then.
  if (!x.regular())
    throw domain_error(
        "no earliest schedule: some activities have no early-start bound, so initiations are "
        "unbounded below; use the latest representative");
  mp_vector y = p.start_finish() * x;
  return {std::move(x), std::move(y), opt.value, std::move(opt.solutions)};
}

// Per-activity flow times y_i - x_i; their maximum is the schedule's value.
inline mp_vector flow_times(const schedule& s) {
  mp_vector f(s.initiation.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) f[i] = s.completion[i] * inv(s.initiation[i]);
  return f;
}

}  // namespace tropt
