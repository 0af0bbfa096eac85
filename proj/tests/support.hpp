// Shared helpers for the test binaries: seeded random instance generation
// over the max-plus carrier (integer entries so ⊕/⊗ stay exact) and
// fixture loading.
#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "tropt/tropt.hpp"

namespace ts {

using tropt::mp_matrix;
using tropt::mp_scalar;
using tropt::mp_vector;

inline mp_scalar random_entry(std::mt19937& rng, int lo, int hi, double zero_p) {
  if (zero_p > 0 && std::uniform_real_distribution<double>(0, 1)(rng) < zero_p)
    return mp_scalar::zero();
  return mp_scalar(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline mp_matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi,
                               double zero_p) {
  mp_matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_entry(rng, lo, hi, zero_p);
  return m;
}

// Forces one finite entry into each all-zero column.
inline mp_matrix random_column_regular(std::mt19937& rng, std::size_t r, std::size_t c, int lo,
                                       int hi, double zero_p) {
  mp_matrix m = random_matrix(rng, r, c, lo, hi, zero_p);
  for (std::size_t j = 0; j < c; ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < r; ++i) hit = hit || !m(i, j).is_zero();
    if (!hit)
      m(std::uniform_int_distribution<std::size_t>(0, r - 1)(rng), j) =
          random_entry(rng, lo, hi, 0.0);
  }
  return m;
}

inline mp_vector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi, double zero_p) {
  mp_vector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_entry(rng, lo, hi, zero_p);
  return v;
}

inline mp_vector random_regular_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  return random_vector(rng, n, lo, hi, 0.0);
}

// Rejection-samples an integer matrix with Tr(A) <= 1 so downstream checks
// stay exact (no root-based normalization).
inline mp_matrix random_contraction(std::mt19937& rng, std::size_t n, int lo, int hi,
                                    double zero_p) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    mp_matrix m = random_matrix(rng, n, n, lo, hi, zero_p);
    if (tr_series(m) <= mp_scalar::one()) return m;
  }
  throw std::runtime_error("rejection sampling for Tr(A) <= 1 stalled");
}

// A random problem of the acceptance shape: n,m <= 3, entries in [-5,5]
// with zero probability 0.3, C column-regular, h regular, objective with a
// nonzero spectral radius.
struct random_problem_config {
  int lo = -5, hi = 5;
  double zero_p = 0.3;
};

inline tropt::problem<tropt::max_plus> random_problem(std::mt19937& rng, std::size_t n,
                                                      std::size_t m,
                                                      random_problem_config cfg = {}) {
  mp_matrix a = random_column_regular(rng, n, n, cfg.lo, cfg.hi, cfg.zero_p);
  mp_matrix b = random_matrix(rng, n, n, cfg.lo, cfg.hi, cfg.zero_p);
  mp_matrix c = random_column_regular(rng, m, n, cfg.lo, cfg.hi, cfg.zero_p);
  mp_vector g = random_vector(rng, n, cfg.lo, cfg.hi, cfg.zero_p);
  mp_vector h = random_regular_vector(rng, m, cfg.lo, cfg.hi);
  return {std::move(a), std::move(b), std::move(c), std::move(g), std::move(h)};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

#ifdef TROPT_FIXTURE_DIR
inline std::string fixture(const std::string& name) {
  return read_file(std::string(TROPT_FIXTURE_DIR) + "/" + name);
}
#endif

// The worked example used throughout the golden tests.
struct worked_example {
  mp_matrix a = tropt::parse_matrix<tropt::max_plus>("4 0 -inf; 2 3 1; 1 1 3");
  mp_matrix b = tropt::parse_matrix<tropt::max_plus>("-inf -2 1; 0 -inf 2; -1 -inf -inf");
  mp_vector g = tropt::parse_vector<tropt::max_plus>("0 0 0");
  mp_vector h = tropt::parse_vector<tropt::max_plus>("5 5 5");

  tropt::problem<tropt::max_plus> as_problem() const { return {a, b, a, g, h}; }
};

}  // namespace ts
