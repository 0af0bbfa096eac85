#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace tropt;

namespace {
mp_matrix mp_m(const std::string& s) { return parse_matrix<max_plus>(s); }
mp_vector mp_v(const std::string& s) { return parse_vector<max_plus>(s); }
}  // namespace

TEST_CASE("matrix addition") {
  ts::worked_example d;
  mp_matrix zero(3, 3);
  CHECK(d.a + zero == d.a);
  CHECK(d.a + d.a == d.a);
  // B joined with theta^-1 A at theta = 4
  mp_matrix s = inv(mp_scalar(4)) * d.a + d.b;
  CHECK(s == mp_m("0 -2 1; 0 -1 2; -1 -3 -1"));
}

TEST_CASE("matrix product") {
  ts::worked_example d;
  CHECK(d.a * mp_matrix::identity(3) == d.a);
  mp_matrix a2 = d.a * d.a;
  CHECK(a2 == mp_m("8 4 1; 6 6 4; 5 4 6"));
  CHECK(a2 * d.a == mp_m("12 8 5; 10 9 7; 9 7 9"));
  CHECK(d.b * d.a == mp_m("2 2 4; 4 3 5; 3 -1 -inf"));
}

TEST_CASE("scalar times matrix") {
  ts::worked_example d;
  CHECK(mp_scalar::one() * d.a == d.a);
  mp_matrix za = mp_scalar::zero() * d.a;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(za(i, j).is_zero());
  CHECK((inv(mp_scalar(4)) * d.a)(0, 0) == mp_scalar(0));
}

TEST_CASE("trace") {
  ts::worked_example d;
  CHECK(trace(mp_matrix::identity(4)) == mp_scalar::one());
  // D = I + g h' C with C := A collapses to I + g h' A
  mp_matrix dd = mp_matrix::identity(3) + d.g * (conj(d.h) * d.a);
  CHECK(dd == mp_m("0 -2 -2; -1 0 -2; -1 -2 0"));
  // degree-k aggregates of the trace expansion
  mp_matrix b2 = pow(d.b, 2);
  mp_matrix c1 = d.a + d.b * d.a + d.a * d.b + b2 * d.a + d.b * d.a * d.b + d.a * b2;
  mp_matrix c2 = pow(d.a, 2) + d.b * pow(d.a, 2) + d.a * d.b * d.a + pow(d.a, 2) * d.b;
  CHECK(c1 == mp_m("4 2 5; 5 3 5; 3 1 4"));
  CHECK(c2 == mp_m("8 6 9; 8 6 8; 7 4 6"));
  CHECK(trace(c1 * dd) == mp_scalar(4));
  CHECK(trace(c2 * dd) == mp_scalar(8));
  CHECK(trace(pow(d.a, 3) * dd) == mp_scalar(12));
  CHECK_THROWS_AS(trace(mp_matrix(2, 3)), shape_error);
}

TEST_CASE("matrix powers") {
  ts::worked_example d;
  CHECK(pow(d.a, 0) == mp_matrix::identity(3));
  mp_matrix b2 = pow(d.b, 2);
  CHECK(b2 == mp_m("0 -inf 0; 1 -2 1; -inf -3 0"));
  CHECK(pow(d.b, 3) == mp_m("-1 -2 1; 0 -1 2; -1 -inf -1"));
  CHECK(pow(d.a, 3)(0, 1) == mp_scalar(8));
}

TEST_CASE("conjugate transpose") {
  CHECK(conj(mp_v("0 0 0")) * mp_v("0 0 0") == mp_scalar::one());
  ts::worked_example d;
  row_vector<max_plus> hc = conj(d.h);
  for (std::size_t i = 0; i < 3; ++i) CHECK(hc[i] == mp_scalar(-5));
  mp_vector with_zero(2);
  with_zero[0] = mp_scalar(2);
  row_vector<max_plus> wc = conj(with_zero);
  CHECK(wc[0] == mp_scalar(-2));
  CHECK(wc[1].is_zero());
  mp_vector all_zero(2);
  CHECK_THROWS_AS(conj(all_zero), domain_error);
}

TEST_CASE("trace series") {
  ts::worked_example d;
  CHECK(tr_series(mp_matrix(3, 3)).is_zero());
  CHECK(tr_series(d.b) == mp_scalar(0));
  CHECK(tr_series(mp_matrix::identity(3)) == mp_scalar::one());
}

TEST_CASE("kleene star") {
  ts::worked_example d;
  CHECK(star(mp_matrix(3, 3)) == mp_matrix::identity(3));
  mp_matrix bs = star(d.b);
  CHECK(bs == mp_m("0 -2 1; 1 0 2; -1 -3 0"));
  mp_matrix s = inv(mp_scalar(4)) * d.a + d.b;
  CHECK(pow(s, 2) == mp_m("0 -2 1; 1 -1 1; -1 -3 0"));
  CHECK(star(s) == mp_m("0 -2 1; 1 0 2; -1 -3 0"));
  CHECK(d.a * bs == mp_m("4 2 5; 4 3 5; 2 1 3"));
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(mp_m("1 -inf -inf; -inf 3 -inf; -inf -inf 2")) == mp_scalar(3));
  ts::worked_example d;
  CHECK(spectral_radius(d.a) == mp_scalar(4));
  CHECK(spectral_radius(mp_matrix(3, 3)).is_zero());
}

TEST_CASE("column regularity") {
  CHECK(is_column_regular(mp_matrix::identity(3)));
  CHECK_FALSE(is_column_regular(mp_matrix(3, 3)));
  ts::worked_example d;
  CHECK(is_column_regular(d.a));
}

TEST_CASE("shape checks") {
  CHECK_THROWS_AS(mp_matrix(2, 2) + mp_matrix(2, 3), shape_error);
  CHECK_THROWS_AS(mp_matrix(2, 3) * mp_matrix(2, 3), shape_error);
  CHECK_THROWS_AS(pow(mp_matrix(2, 3), 2), shape_error);
  CHECK_THROWS_AS(star(mp_matrix(2, 3)), shape_error);
  CHECK_THROWS_AS(mp_matrix(0, 2), shape_error);
}

TEST_CASE("isotonicity of sums and products") {
  std::mt19937 rng(17);
  for (int t = 0; t < 250; ++t) {
    mp_matrix a = ts::random_matrix(rng, 3, 3, -9, 9, 0.25);
    mp_matrix b = ts::random_matrix(rng, 3, 3, -9, 9, 0.25);
    mp_matrix bump = ts::random_matrix(rng, 3, 3, 0, 4, 0.5);
    mp_matrix a2 = a + bump, b2 = b + bump;
    REQUIRE(leq(a, a2));
    CHECK(leq(a + b, a2 + b2));
    CHECK(leq(a * b, a2 * b2));
  }
}

TEST_CASE("trace laws") {
  std::mt19937 rng(19);
  for (int t = 0; t < 250; ++t) {
    mp_matrix a = ts::random_matrix(rng, 3, 3, -9, 9, 0.25);
    mp_matrix b = ts::random_matrix(rng, 3, 3, -9, 9, 0.25);
    mp_scalar x = ts::random_entry(rng, -9, 9, 0.1);
    CHECK(trace(a + b) == trace(a) + trace(b));
    CHECK(trace(a * b) == trace(b * a));
    CHECK(trace(x * a) == x * trace(a));
    CHECK(trace_of_product(a, b) == trace(a * b));
  }
}

TEST_CASE("conjugate laws") {
  std::mt19937 rng(23);
  for (int t = 0; t < 250; ++t) {
    mp_vector x = ts::random_regular_vector(rng, 3, -9, 9);
    mp_vector y = x;
    for (std::size_t i = 0; i < 3; ++i) y[i] += ts::random_entry(rng, 0, 5, 0.0);
    CHECK(conj(x) * x == mp_scalar::one());
    CHECK(leq(mp_matrix::identity(3), x * conj(x)));
    // antitone: x <= y implies conj(x) >= conj(y)
    for (std::size_t i = 0; i < 3; ++i) CHECK(conj(y)[i] <= conj(x)[i]);
  }
}

TEST_CASE("carre inequality") {
  std::mt19937 rng(29);
  for (int t = 0; t < 250; ++t) {
    mp_matrix a = ts::random_contraction(rng, 3, -5, 5, 0.3);
    mp_matrix s = star(a);
    mp_matrix p = mp_matrix::identity(3);
    for (int k = 0; k <= 6; ++k) {
      CHECK(leq(p, s));
      p = p * a;
    }
  }
}

TEST_CASE("extremal property of the spectral radius") {
  std::mt19937 rng(31);
  for (int t = 0; t < 250; ++t) {
    mp_matrix a = ts::random_matrix(rng, 3, 3, -9, 9, 0.3);
    mp_vector x = ts::random_regular_vector(rng, 3, -9, 9);
    CHECK(spectral_radius(a) <= conj(x) * (a * x));
  }
  // attained on the worked example
  ts::worked_example d;
  CHECK(conj(mp_v("1 2 0")) * (d.a * mp_v("1 2 0")) == spectral_radius(d.a));
}
