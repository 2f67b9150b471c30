#pragma once

// Exact arithmetic in Q and in a real quadratic field Q(sqrt(d)), plus
// rational-endpoint interval enclosures for values that are only known
// through a convergent approximation process.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "cantor/errors.hpp"

namespace cantor {

using Rational = mpq_class;
using Integer = mpz_class;

// Number of refinement steps a decider performs before giving up with
// NeedsMorePrecision.
inline constexpr unsigned kDefaultRefinementCap = 64;

// An element a + b*sqrt(d) of Q(sqrt(d)), or a rational when b == 0.
//
// Invariants: d is 0 exactly when b == 0; otherwise d >= 2 is squarefree.
// The representation is canonical, so operator== is structural.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactReal(Rational value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT
  ExactReal(long num, long den);

  // a + b*sqrt(d). d may carry square factors (they are extracted) and may
  // be a perfect square (the result is then rational). d < 0 is rejected.
  static ExactReal quadratic(Rational a, Rational b, long d);

  bool is_rational() const { return radicand_ == 0; }
  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  // 0 for rationals.
  long radicand() const { return radicand_; }

  int sign() const;
  bool is_zero() const { return radicand_ == 0 && sgn(a_) == 0; }
  bool is_integer() const { return radicand_ == 0 && a_.get_den() == 1; }

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& rhs);
  ExactReal& operator-=(const ExactReal& rhs);
  ExactReal& operator*=(const ExactReal& rhs);
  ExactReal& operator/=(const ExactReal& rhs);

  friend ExactReal operator+(ExactReal lhs, const ExactReal& rhs) { return lhs += rhs; }
  friend ExactReal operator-(ExactReal lhs, const ExactReal& rhs) { return lhs -= rhs; }
  friend ExactReal operator*(ExactReal lhs, const ExactReal& rhs) { return lhs *= rhs; }
  friend ExactReal operator/(ExactReal lhs, const ExactReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactReal& lhs, const ExactReal& rhs) {
    return lhs.radicand_ == rhs.radicand_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  // Exact order. Throws MixedFieldsError when both sides are irrational in
  // different fields.
  friend std::strong_ordering operator<=>(const ExactReal& lhs, const ExactReal& rhs);

  // Lossy, for display and random test data only.
  double to_double() const;

 private:
  void normalize();

  Rational a_;
  Rational b_;
  long radicand_ = 0;
};

// Field of the pair, or throws MixedFieldsError. Returns 0 when both are
// rational.
long common_field(const ExactReal& x, const ExactReal& y);

std::strong_ordering compare(const ExactReal& x, const ExactReal& y);

Integer floor_exact(const ExactReal& x);
Integer ceil_exact(const ExactReal& x);

// Text form: `p`, `p/q`, `(a+b*sqrt(d))/c`. The parser accepts any
// expression built from integers, sqrt(d), + - * / and parentheses, e.g.
// `3+sqrt(5)`. Parsing is exact and format_real(parse_real(s)) is canonical.
ExactReal parse_real(std::string_view text);
std::string format_real(const ExactReal& x);
std::ostream& operator<<(std::ostream& os, const ExactReal& x);

// Closed interval [lo, hi] with rational endpoints.
struct RealInterval {
  Rational lo;
  Rational hi;

  RealInterval() = default;
  RealInterval(Rational lo_, Rational hi_);
  static RealInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const ExactReal& x) const;
  bool contains(const RealInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool intersects(const RealInterval& other) const { return lo <= other.hi && other.lo <= hi; }

  // Widens to dyadic endpoints with denominator 2^bits. Keeps operand sizes
  // bounded across long products.
  RealInterval rounded_outward(unsigned bits) const;

  friend RealInterval operator+(const RealInterval& x, const RealInterval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
  }
  friend RealInterval operator-(const RealInterval& x, const RealInterval& y) {
    return {x.lo - y.hi, x.hi - y.lo};
  }
  friend RealInterval operator-(const RealInterval& x) { return {-x.hi, -x.lo}; }
  friend RealInterval operator*(const RealInterval& x, const RealInterval& y);
  friend RealInterval operator/(const RealInterval& x, const RealInterval& y);
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

std::optional<RealInterval> intersect(const RealInterval& x, const RealInterval& y);

// Enclosure of x with width <= 2^-bits (a point when x is rational).
RealInterval enclose(const ExactReal& x, unsigned bits);

// Decimal rendering of an interval midpoint with `digits` fractional digits.
std::string format_decimal(const Rational& q, unsigned digits);
std::string format_interval(const RealInterval& iv, unsigned digits);

// A real number known either exactly or through enclosures of increasing
// precision. Level L asks for width at most 2^-(32*(L+1)); generators may
// return tighter intervals but never wider ones.
class ComputableReal {
 public:
  using Generator = std::function<RealInterval(unsigned level)>;

  ComputableReal(ExactReal exact);  // NOLINT(google-explicit-constructor)
  explicit ComputableReal(Generator generator);

  const std::optional<ExactReal>& exact() const { return exact_; }
  RealInterval enclosure(unsigned level) const;

  static unsigned bits_for_level(unsigned level) { return 32 * (level + 1); }

 private:
  std::optional<ExactReal> exact_;
  std::shared_ptr<const Generator> generator_;
};

// An enclosure together with the source that can tighten it.
class RefinableInterval {
 public:
  explicit RefinableInterval(ComputableReal source, unsigned level = 0);

  const RealInterval& interval() const { return current_; }
  unsigned level() const { return level_; }

  // Advances `budget` levels; the result is a subset of the current
  // interval.
  RefinableInterval refined(unsigned budget) const;

 private:
  ComputableReal source_;
  unsigned level_;
  RealInterval current_;
};

RealInterval refine(const RefinableInterval& iv, unsigned budget);

}  // namespace cantor
