#include "cantor/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace cantor {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

// Sign of p + q*sqrt(d), d >= 2 not a square. Integer arithmetic only.
int sign_of(const Rational& p, const Rational& q, long d) {
  const int sp = sign_of(p);
  const int sq = sign_of(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger square wins. Equality is impossible since d is
  // not a rational square.
  const Rational p2 = p * p;
  const Rational q2d = q * q * d;
  return p2 > q2d ? sp : sq;
}

Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_rational(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

ExactReal::ExactReal(long num, long den) {
  if (den == 0) throw DivisionByZero();
  a_ = Rational(num, den);
  a_.canonicalize();
}

ExactReal ExactReal::quadratic(Rational a, Rational b, long d) {
  if (d < 0) throw OutOfDomain("square root of a negative radicand");
  ExactReal x;
  x.a_ = std::move(a);
  x.b_ = std::move(b);
  x.a_.canonicalize();
  x.b_.canonicalize();
  if (d == 0) x.b_ = 0;
  // Pull square factors out of the radicand.
  long rest = d;
  long outside = 1;
  for (long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
  }
  x.b_ *= outside;
  x.radicand_ = rest;
  if (rest == 1) {
    x.a_ += x.b_;
    x.b_ = 0;
  }
  x.normalize();
  return x;
}

void ExactReal::normalize() {
  if (radicand_ <= 1 || sgn(b_) == 0) {
    radicand_ = 0;
    b_ = 0;
  }
}

int ExactReal::sign() const {
  if (radicand_ == 0) return sign_of(a_);
  return sign_of(a_, b_, radicand_);
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

long common_field(const ExactReal& x, const ExactReal& y) {
  if (x.radicand() == 0) return y.radicand();
  if (y.radicand() == 0 || y.radicand() == x.radicand()) return x.radicand();
  throw MixedFieldsError(x.radicand(), y.radicand());
}

ExactReal& ExactReal::operator+=(const ExactReal& rhs) {
  radicand_ = common_field(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& rhs) {
  radicand_ = common_field(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& rhs) {
  const long d = common_field(*this, rhs);
  // (a + b r)(c + e r) = (ac + be d) + (ae + bc) r
  Rational a = a_ * rhs.a_;
  Rational b = a_ * rhs.b_;
  if (d != 0) {
    a += b_ * rhs.b_ * d;
    b += b_ * rhs.a_;
  }
  a_ = std::move(a);
  b_ = std::move(b);
  radicand_ = d;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  const long d = common_field(*this, rhs);
  if (rhs.radicand_ == 0) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    radicand_ = d;
    normalize();
    return *this;
  }
  // Multiply by the conjugate: 1/(c + e r) = (c - e r) / (c^2 - e^2 d).
  const Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * d;
  ExactReal conj = rhs;
  conj.b_ = -conj.b_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactReal& lhs, const ExactReal& rhs) {
  const long d = common_field(lhs, rhs);
  Rational p = lhs.a_ - rhs.a_;
  Rational q = lhs.b_ - rhs.b_;
  const int s = d == 0 ? sign_of(p) : sign_of(p, q, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) { return x <=> y; }

double ExactReal::to_double() const {
  double v = a_.get_d();
  if (radicand_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

Integer floor_exact(const ExactReal& x) {
  if (x.is_rational()) return floor_rational(x.rational_part());
  // Candidate from a 64-bit enclosure, then settle exactly.
  Integer n = floor_rational(enclose(x, 64).lo);
  while (ExactReal(Rational(n)) > x) --n;
  while (ExactReal(Rational(n + 1)) <= x) ++n;
  return n;
}

Integer ceil_exact(const ExactReal& x) {
  if (x.is_rational()) return ceil_rational(x.rational_part());
  return -floor_exact(-x);
}

// --- text format -----------------------------------------------------------

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  Integer unsigned_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse real '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := ('+' | '-') factor | integer | 'sqrt' '(' integer ')' | '(' expr ')'
ExactReal parse_expr(Cursor& cur);

ExactReal parse_factor(Cursor& cur) {
  if (cur.eat('-')) return -parse_factor(cur);
  if (cur.eat('+')) return parse_factor(cur);
  if (cur.eat("sqrt")) {
    cur.expect('(');
    Integer d = cur.unsigned_integer();
    cur.expect(')');
    if (!d.fits_slong_p()) cur.fail("radicand too large");
    return ExactReal::quadratic(0, 1, d.get_si());
  }
  if (cur.eat('(')) {
    ExactReal v = parse_expr(cur);
    cur.expect(')');
    return v;
  }
  return ExactReal(Rational(cur.unsigned_integer()));
}

ExactReal parse_term(Cursor& cur) {
  ExactReal v = parse_factor(cur);
  while (true) {
    if (cur.eat('*')) {
      v *= parse_factor(cur);
    } else if (cur.eat('/')) {
      ExactReal d = parse_factor(cur);
      if (d.is_zero()) throw ParseError("zero denominator");
      v /= d;
    } else {
      return v;
    }
  }
}

ExactReal parse_expr(Cursor& cur) {
  ExactReal v = parse_term(cur);
  while (true) {
    if (cur.eat('+')) v += parse_term(cur);
    else if (cur.eat('-')) v -= parse_term(cur);
    else return v;
  }
}

}  // namespace

ExactReal parse_real(std::string_view text) {
  Cursor cur(text);
  ExactReal value = parse_expr(cur);
  if (!cur.at_end()) cur.fail("trailing characters");
  return value;
}

std::string format_real(const ExactReal& x) {
  if (x.is_rational()) {
    const Rational& q = x.rational_part();
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
  }
  const Rational& a = x.rational_part();
  const Rational& b = x.irrational_part();
  Integer c;
  mpz_lcm(c.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Integer big_a = a.get_num() * (c / a.get_den());
  Integer big_b = b.get_num() * (c / b.get_den());
  std::ostringstream os;
  os << '(' << big_a.get_str() << (sgn(big_b) < 0 ? '-' : '+') << Integer(abs(big_b)).get_str() << "*sqrt("
     << x.radicand() << "))";
  if (c != 1) os << '/' << c.get_str();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << format_real(x); }

// --- intervals ---------------------------------------------------------------

RealInterval::RealInterval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (lo > hi) throw std::invalid_argument("RealInterval with lo > hi");
}

bool RealInterval::contains(const ExactReal& x) const {
  return ExactReal(lo) <= x && x <= ExactReal(hi);
}

RealInterval RealInterval::rounded_outward(unsigned bits) const {
  Integer scale = 1;
  scale <<= bits;
  Integer l, h;
  Rational sl = lo * scale;
  Rational sh = hi * scale;
  mpz_fdiv_q(l.get_mpz_t(), sl.get_num_mpz_t(), sl.get_den_mpz_t());
  mpz_cdiv_q(h.get_mpz_t(), sh.get_num_mpz_t(), sh.get_den_mpz_t());
  Rational nl(l, scale);
  Rational nh(h, scale);
  nl.canonicalize();
  nh.canonicalize();
  return {nl, nh};
}

RealInterval operator*(const RealInterval& x, const RealInterval& y) {
  if (sgn(x.lo) >= 0 && sgn(y.lo) >= 0) return {x.lo * y.lo, x.hi * y.hi};
  Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  Rational lo = c[0], hi = c[0];
  for (const auto& v : c) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

RealInterval operator/(const RealInterval& x, const RealInterval& y) {
  if (sgn(y.lo) <= 0 && sgn(y.hi) >= 0) throw DivisionByZero();
  Rational inv_lo = 1 / y.hi;
  Rational inv_hi = 1 / y.lo;
  return x * RealInterval(inv_lo, inv_hi);
}

std::optional<RealInterval> intersect(const RealInterval& x, const RealInterval& y) {
  Rational lo = x.lo > y.lo ? x.lo : y.lo;
  Rational hi = x.hi < y.hi ? x.hi : y.hi;
  if (lo > hi) return std::nullopt;
  return RealInterval(lo, hi);
}

RealInterval enclose(const ExactReal& x, unsigned bits) {
  if (x.is_rational()) return RealInterval::point(x.rational_part());
  // sqrt(d) in [s, s+1] / 2^k with s = isqrt(d * 4^k); pick k so that the
  // scaled width |b| / 2^k stays below 2^-bits.
  const Rational& b = x.irrational_part();
  const Rational abs_b = abs(b);
  std::size_t extra = mpz_sizeinbase(abs_b.get_num_mpz_t(), 2) + 1;
  const unsigned k = bits + static_cast<unsigned>(extra);
  Integer scaled = x.radicand();
  scaled <<= 2 * k;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  Integer denom = 1;
  denom <<= k;
  Rational root_lo(s, denom);
  Rational root_hi(s + 1, denom);
  root_lo.canonicalize();
  root_hi.canonicalize();
  if (sgn(b) > 0) return {x.rational_part() + b * root_lo, x.rational_part() + b * root_hi};
  return {x.rational_part() + b * root_hi, x.rational_part() + b * root_lo};
}

std::string format_decimal(const Rational& q, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  Rational scaled = abs(q) * scale + Rational(1, 2);
  Integer n = floor_rational(scaled);
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (sgn(q) < 0 && n != 0) s.insert(0, "-");
  return s;
}

std::string format_interval(const RealInterval& iv, unsigned digits) {
  return "[" + format_decimal(iv.lo, digits) + ", " + format_decimal(iv.hi, digits) + "]";
}

ComputableReal::ComputableReal(ExactReal exact) : exact_(std::move(exact)) {}

ComputableReal::ComputableReal(Generator generator)
    : generator_(std::make_shared<const Generator>(std::move(generator))) {}

RealInterval ComputableReal::enclosure(unsigned level) const {
  if (exact_) return enclose(*exact_, bits_for_level(level));
  return (*generator_)(level);
}

RefinableInterval::RefinableInterval(ComputableReal source, unsigned level)
    : source_(std::move(source)), level_(level), current_(source_.enclosure(level)) {}

RefinableInterval RefinableInterval::refined(unsigned budget) const {
  RefinableInterval next = *this;
  if (budget == 0 || current_.is_point()) return next;
  next.level_ = level_ + budget;
  auto tighter = intersect(current_, source_.enclosure(next.level_));
  // Generators return valid enclosures, so the intersection is never empty.
  if (!tighter) throw std::logic_error("refinement produced a disjoint enclosure");
  next.current_ = *tighter;
  return next;
}

RealInterval refine(const RefinableInterval& iv, unsigned budget) { return iv.refined(budget).interval(); }

}  // namespace cantor
