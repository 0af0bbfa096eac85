// Scalar algebra of a linearly ordered, radicable, commutative idempotent
// semifield. Two instances ship: max_plus (max, +, zero = -inf, one = 0)
// and min_times (min, *, zero = +inf, one = 1, order reversed against the
// natural order on the reals).
//
// The semifield zero is a distinguished state of `scalar`, not an IEEE
// infinity: every operation branches on it explicitly, so products and
// sums involving zero never go through float arithmetic that could
// produce NaN. Finite payloads are plain doubles.
//
// Comparison operators on `scalar` implement the semifield order (the
// order induced by idempotent addition: a <= b iff a + b == b). For
// min_times this is the reverse of the natural order on the reals.
#pragma once

#include <cmath>
#include <string_view>

#include "tropt/errors.hpp"

namespace tropt {

// Operation table of the (max, +) semifield over R u {-inf}.
struct max_plus {
  static constexpr std::string_view name = "max-plus";
  static constexpr std::string_view zero_token = "-inf";
  static constexpr double one = 0.0;
  static double add(double a, double b) { return a > b ? a : b; }
  static double mul(double a, double b) { return a + b; }
  static double invert(double a) { return -a; }
  static double root(double a, int k) { return a / k; }
  // Strict order on finite values; coincides with the natural order.
  static bool before(double a, double b) { return a < b; }
  static bool valid(double a) { return std::isfinite(a); }
};

// Operation table of the (min, *) semifield over positive reals u {+inf}.
struct min_times {
  static constexpr std::string_view name = "min-times";
  static constexpr std::string_view zero_token = "inf";
  static constexpr double one = 1.0;
  static double add(double a, double b) { return a < b ? a : b; }
  static double mul(double a, double b) { return a * b; }
  static double invert(double a) { return 1.0 / a; }
  static double root(double a, int k) { return std::pow(a, 1.0 / k); }
  // The idempotent order runs against the natural one: a <= b iff min(a,b) = b.
  static bool before(double a, double b) { return a > b; }
  static bool valid(double a) { return std::isfinite(a) && a > 0.0; }
};

template <class SF>
class scalar {
 public:
  using semifield = SF;

  // Default-constructed scalars are the semifield zero.
  constexpr scalar() : value_(0.0), zero_(true) {}

  // A finite element. Throws domain_error for values outside the carrier
  // set (non-finite doubles, and non-positive values in min_times).
  explicit scalar(double value) : value_(value), zero_(false) {
    if (!SF::valid(value)) throw domain_error("value outside semifield carrier set");
  }

  static constexpr scalar zero() { return scalar(); }
  static scalar one() { return scalar(SF::one); }

  bool is_zero() const { return zero_; }
  bool is_one() const { return !zero_ && value_ == SF::one; }

  // The finite payload; calling on the zero element is an error.
  double finite_value() const {
    if (zero_) throw domain_error("semifield zero has no finite value");
    return value_;
  }

  friend scalar operator+(scalar a, scalar b) {  // idempotent sum
    if (a.zero_) return b;
    if (b.zero_) return a;
    return scalar(SF::add(a.value_, b.value_), tag{});
  }
  friend scalar operator*(scalar a, scalar b) {  // product; zero absorbs
    if (a.zero_ || b.zero_) return zero();
    return scalar(SF::mul(a.value_, b.value_), tag{});
  }
  scalar& operator+=(scalar b) { return *this = *this + b; }
  scalar& operator*=(scalar b) { return *this = *this * b; }

  friend bool operator==(scalar a, scalar b) {
    if (a.zero_ != b.zero_) return false;
    return a.zero_ || a.value_ == b.value_;
  }
  friend bool operator!=(scalar a, scalar b) { return !(a == b); }

  // Semifield order: total, with zero at the bottom.
  friend bool operator<(scalar a, scalar b) {
    if (b.zero_) return false;
    if (a.zero_) return true;
    return SF::before(a.value_, b.value_);
  }
  friend bool operator<=(scalar a, scalar b) { return !(b < a); }
  friend bool operator>(scalar a, scalar b) { return b < a; }
  friend bool operator>=(scalar a, scalar b) { return !(a < b); }

 private:
  struct tag {};
  scalar(double v, tag) : value_(v), zero_(false) {}

  double value_;
  bool zero_;
};

// Multiplicative inverse; the zero element has none.
template <class SF>
scalar<SF> inv(scalar<SF> a) {
  if (a.is_zero()) throw domain_error("inverse of the semifield zero");
  return scalar<SF>(SF::invert(a.finite_value()));
}

// k-th root (radicability); the root of zero is zero.
template <class SF>
scalar<SF> root(scalar<SF> a, int k) {
  if (k < 1) throw domain_error("root index must be positive");
  if (a.is_zero()) return scalar<SF>::zero();
  return scalar<SF>(SF::root(a.finite_value(), k));
}

// Tolerant equality for values produced through roots or divisions.
// The zero element matches only itself.
template <class SF>
bool approx_eq(scalar<SF> a, scalar<SF> b, double tol = 1e-9) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  double x = a.finite_value(), y = b.finite_value();
  double scale = std::fmax(1.0, std::fmax(std::fabs(x), std::fabs(y)));
  return std::fabs(x - y) <= tol * scale;
}

}  // namespace tropt
