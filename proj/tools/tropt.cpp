// Batch front end: read a project (or raw problem) document, solve, report.
// Exit codes: 0 optimal, 2 infeasible, 3 invalid input, 4 verification
// mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropt/tropt.hpp"

namespace {

constexpr int exit_optimal = 0;
constexpr int exit_infeasible = 2;
constexpr int exit_invalid = 3;
constexpr int exit_mismatch = 4;

struct options {
  std::string input;
  std::string output;
  std::string representative = "earliest";
  bool verify = false;
  double grid_step = 1.0;
  bool raw = false;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tropt::parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_document(const options& opt, const tropt::json& doc) {
  if (opt.format == "structured") std::cout << doc.dump(2) << "\n";
  if (opt.output.empty()) return;
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw tropt::parse_error("cannot open output file '" + opt.output + "'");
  out << doc.dump(2) << "\n";
}

tropt::json status_document(const std::string& status, const std::vector<std::string>& diags) {
  tropt::json doc;
  doc["schema"] = 1;
  doc["status"] = status;
  doc["diagnostics"] = diags;
  return doc;
}

int report_invalid(const options& opt, const std::vector<std::string>& diags) {
  std::cout << "status: invalid\n";
  for (const auto& d : diags) std::cout << "  " << d << "\n";
  try {
    write_document(opt, status_document("invalid", diags));
  } catch (const tropt::error& e) {
    std::cerr << e.what() << "\n";
  }
  return exit_invalid;
}

int report_infeasible(const options& opt, const std::string& why) {
  std::cout << "status: infeasible\n  " << why << "\n";
  try {
    write_document(opt, status_document("infeasible", {why}));
  } catch (const tropt::error& e) {
    std::cerr << e.what() << "\n";
  }
  return exit_infeasible;
}

// Oracle cross-check of a solved or infeasible classification. Returns an
// empty optional on agreement, otherwise the mismatch description.
std::optional<std::string> oracle_mismatch(const tropt::mp_problem& prob,
                                           const std::optional<tropt::mp_scalar>& theta,
                                           double step) {
  tropt::grid_spec grid = tropt::grid_spec::default_for(prob);
  grid.step = step;
  auto got = tropt::brute_force_min(prob, grid);
  if (theta) {
    if (!got)
      return "solver found " + tropt::format_scalar(*theta) + " but the oracle grid has no "
             "feasible point";
    if (!tropt::approx_eq(got->value, *theta))
      return "solver found " + tropt::format_scalar(*theta) + " but the oracle minimum is " +
             tropt::format_scalar(got->value) + " at " + tropt::format_vector(got->argmin);
    std::cout << "oracle agrees: " << tropt::format_scalar(*theta) << "\n";
  } else {
    if (got)
      return "solver reports infeasible but the oracle found " +
             tropt::format_scalar(got->value) + " at " + tropt::format_vector(got->argmin);
    std::cout << "oracle agrees: no feasible point\n";
  }
  return std::nullopt;
}

int run_project(const options& opt, const std::string& text) {
  tropt::project p = tropt::parse_project(text);
  auto issues = tropt::validate_project(p);
  if (!issues.empty()) return report_invalid(opt, issues);

  tropt::mp_problem prob{p.start_finish(), p.start_start(), p.start_finish(), p.early_start(),
                         p.late_finish()};
  tropt::representative rep = opt.representative == "latest" ? tropt::representative::latest
                                                             : tropt::representative::earliest;
  std::optional<tropt::schedule> sched;
  try {
    sched = tropt::solve_schedule(p, rep);
  } catch (const tropt::no_solution_error& e) {
    int code = report_infeasible(opt, e.what());
    if (opt.verify) {
      if (auto bad = oracle_mismatch(prob, std::nullopt, opt.grid_step)) {
        std::cout << *bad << "\n";
        return exit_mismatch;
      }
    }
    return code;
  }

  const tropt::schedule& s = *sched;
  tropt::mp_vector flows = tropt::flow_times(s);
  if (opt.format == "text") {
    std::cout << "status: optimal\n";
    std::cout << "theta: " << tropt::format_scalar(s.max_flow_time) << "\n";
    std::cout << "schedule (" << opt.representative << "):\n";
    std::cout << "  label  initiation  completion  flow_time\n";
    for (std::size_t i = 0; i < p.size(); ++i)
      std::printf("  %-6s %-11s %-11s %s\n", p.labels()[i].c_str(),
                  tropt::format_scalar(s.initiation[i]).c_str(),
                  tropt::format_scalar(s.completion[i]).c_str(),
                  tropt::format_scalar(flows[i]).c_str());
    std::cout << "family: u in [" << tropt::format_vector(s.family.lower) << "] .. ["
              << tropt::format_vector(*s.family.upper) << "]\n";
    std::cout << "generator: " << tropt::format_matrix(s.family.generator) << "\n";
  }
  write_document(opt, tropt::schedule_to_json(p, s));

  if (opt.verify) {
    if (auto bad = oracle_mismatch(prob, s.max_flow_time, opt.grid_step)) {
      std::cout << *bad << "\n";
      return exit_mismatch;
    }
  }
  return exit_optimal;
}

int run_raw(const options& opt, const std::string& text) {
  tropt::raw_problem rp = tropt::parse_raw_problem(text);

  std::optional<tropt::optimum<tropt::max_plus>> opt_result;
  tropt::mp_problem prob{rp.objective, rp.prereq,
                         rp.bound_map ? *rp.bound_map : tropt::mp_matrix(1, rp.objective.cols()),
                         rp.lower,
                         rp.upper ? *rp.upper : tropt::mp_vector(1)};
  if (!rp.upper) prob.upper[0] = tropt::mp_scalar(0.0);  // vacuous bound for the oracle

  try {
    if (rp.bound_map)
      opt_result = tropt::solve(prob);
    else
      opt_result = tropt::solve_without_upper(rp.objective, rp.prereq, rp.lower);
  } catch (const tropt::no_solution_error& e) {
    int code = report_infeasible(opt, e.what());
    if (opt.verify) {
      if (auto bad = oracle_mismatch(prob, std::nullopt, opt.grid_step)) {
        std::cout << *bad << "\n";
        return exit_mismatch;
      }
    }
    return code;
  }

  const tropt::optimum<tropt::max_plus>& o = *opt_result;
  if (opt.representative == "latest" && !o.solutions.upper)
    return report_invalid(opt, {"no latest representative: the problem has no upper constraint"});
  tropt::mp_vector x = opt.representative == "latest" ? o.solutions.member(*o.solutions.upper)
                                                      : o.solutions.least();
  if (opt.format == "text") {
    std::cout << "status: optimal\n";
    std::cout << "theta: " << tropt::format_scalar(o.value) << "\n";
    std::cout << "x (" << opt.representative << "): " << tropt::format_vector(x) << "\n";
    std::cout << "family: u in [" << tropt::format_vector(o.solutions.lower) << "] .. ["
              << (o.solutions.upper ? tropt::format_vector(*o.solutions.upper) : "unbounded")
              << "]\n";
    std::cout << "generator: " << tropt::format_matrix(o.solutions.generator) << "\n";
  }
  write_document(opt, tropt::optimum_to_json(o, x));

  if (opt.verify) {
    if (auto bad = oracle_mismatch(prob, o.value, opt.grid_step)) {
      std::cout << *bad << "\n";
      return exit_mismatch;
    }
  }
  return exit_optimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical optimization and project scheduling"};
  app.require_subcommand(1);

  options opt;
  CLI::App* cmd = app.add_subcommand("solve", "Solve a project or raw problem document");
  cmd->add_option("--input", opt.input, "Input document path")->required();
  cmd->add_option("--output", opt.output, "Write the result document to this path");
  cmd->add_option("--representative", opt.representative,
                  "Which member of the optimal family to report")
      ->check(CLI::IsMember({"earliest", "latest"}));
  cmd->add_flag("--verify", opt.verify, "Cross-check the result with the brute-force oracle");
  cmd->add_option("--grid-step", opt.grid_step, "Oracle grid pitch")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--raw", opt.raw, "Treat the input as a raw problem (matrices A, B, C, g, h)");
  cmd->add_option("--format", opt.format, "Report style on standard output")
      ->check(CLI::IsMember({"text", "structured"}));
  CLI11_PARSE(app, argc, argv);

  try {
    std::string text = read_file(opt.input);
    return opt.raw ? run_raw(opt, text) : run_project(opt, text);
  } catch (const tropt::parse_error& e) {
    return report_invalid(opt, {e.what()});
  } catch (const tropt::error& e) {
    return report_invalid(opt, {e.what()});
  }
}
