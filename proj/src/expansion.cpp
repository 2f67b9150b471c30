#include "cantor/expansion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cantor {

namespace {

Integer ceil_rational(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

digit_t to_digit(const Integer& v, std::size_t n, digit_t max) {
  if (sgn(v) < 0 || v > Integer(max)) {
    // Only reachable through a broken invariant, the domain checks rule it out.
    throw OutOfDomain("digit " + v.get_str() + " at position " + std::to_string(n) + " outside [0, " +
                      std::to_string(max) + "]");
  }
  return static_cast<digit_t>(v.get_ui());
}

// Structural order on exact values, used as a map key. Not numeric order.
struct StructuralLess {
  bool operator()(const std::pair<std::size_t, ExactReal>& x, const std::pair<std::size_t, ExactReal>& y) const {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.radicand() != y.second.radicand()) return x.second.radicand() < y.second.radicand();
    if (int c = cmp(x.second.rational_part(), y.second.rational_part()); c != 0) return c < 0;
    return cmp(x.second.irrational_part(), y.second.irrational_part()) < 0;
  }
};

// Runs a digit map until the state (phase, remainder) repeats.
template <class Step>
DigitWord run_until_cycle(const CantorBase& base, ExactReal state, std::size_t max_steps, std::size_t shift,
                          Step step) {
  std::map<std::pair<std::size_t, ExactReal>, std::size_t, StructuralLess> seen;
  FiniteWord digits;
  for (std::size_t n = 0; n <= max_steps; ++n) {
    auto [it, fresh] = seen.emplace(std::make_pair(base.phase(n), state), n);
    if (!fresh) {
      const std::size_t start = it->second;
      return DigitWord(FiniteWord(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start)),
                       FiniteWord(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end()));
    }
    if (n == max_steps) break;
    digits.push_back(step(n, state));
  }
  throw PeriodNotFound(max_steps, shift);
}

void check_lazy_domain_exact(const ExactReal& x, const ExactReal& xb) {
  if (!(x > xb - ExactReal(1)) || x > xb) {
    throw OutOfDomain("lazy expansion needs x_beta - 1 < x <= x_beta, got x = " + format_real(x) +
                      ", x_beta = " + format_real(xb));
  }
}

// Decides x_beta - 1 < x <= x_beta from enclosures.
void check_lazy_domain(const ComputableReal& x, const ComputableReal& xb, unsigned cap) {
  if (x.exact() && xb.exact()) return check_lazy_domain_exact(*x.exact(), *xb.exact());
  bool lower_ok = false, upper_ok = false;
  for (unsigned level = 0; level <= cap; ++level) {
    const RealInterval xi = x.enclosure(level);
    const RealInterval bi = xb.enclosure(level);
    if (xi.hi <= bi.lo - 1 || xi.lo > bi.hi) throw OutOfDomain("lazy expansion needs x_beta - 1 < x <= x_beta");
    lower_ok = lower_ok || xi.lo > bi.hi - 1;
    upper_ok = upper_ok || xi.hi <= bi.lo;
    if (lower_ok && upper_ok) return;
  }
  throw NeedsMorePrecision("x against the lazy domain (x_beta - 1, x_beta]");
}

unsigned magnitude_bits(const ExactReal& v) {
  const RealInterval iv = enclose(v, 8);
  const Rational m = std::max(abs(iv.lo), abs(iv.hi)) + 1;
  Integer c = ceil_rational(m);
  return static_cast<unsigned>(mpz_sizeinbase(c.get_mpz_t(), 2));
}

}  // namespace

ExactReal base_product(const CantorBase& base, std::size_t n) {
  ExactReal p(1);
  for (std::size_t k = 0; k < n; ++k) p *= base.at(k);
  return p;
}

ExpansionTrace greedy_expand(const CantorBase& base, const ExactReal& x, std::size_t len) {
  if (x.sign() < 0 || x >= ExactReal(1)) {
    throw OutOfDomain("greedy expansion needs 0 <= x < 1, got " + format_real(x));
  }
  ExpansionTrace t;
  ExactReal r = x;
  for (std::size_t n = 0; n < len; ++n) {
    const ExactReal y = base.at(n) * r;
    const Integer e = floor_exact(y);
    const digit_t d = to_digit(e, n, base.max_digit(n));
    r = y - ExactReal(static_cast<long>(d));
    t.digits.push_back(d);
    t.remainders.emplace_back(r);
  }
  return t;
}

ExpansionTrace lazy_expand(const CantorBase& base, const ExactReal& x, std::size_t len, unsigned cap) {
  if (base.is_eventually_periodic()) {
    const std::vector<ExactReal> profile = x_beta_profile(base);
    check_lazy_domain_exact(x, profile[base.phase(0)]);
    ExpansionTrace t;
    ExactReal s = x;
    for (std::size_t n = 0; n < len; ++n) {
      const ExactReal y = base.at(n) * s;
      const digit_t d = to_digit(ceil_exact(y - profile[base.phase(n + 1)]), n, base.max_digit(n));
      s = y - ExactReal(static_cast<long>(d));
      t.digits.push_back(d);
      t.remainders.emplace_back(s);
    }
    return t;
  }
  return lazy_expand(base, ComputableReal(x), len, cap);
}

ExpansionTrace lazy_expand(const CantorBase& base, const ComputableReal& x, std::size_t len, unsigned cap) {
  if (base.is_eventually_periodic() && x.exact()) return lazy_expand(base, *x.exact(), len, cap);
  check_lazy_domain(x, x_beta_computable(base, 0), cap);

  // s_{n-1} = product * x - offset with exact product and offset.
  ExactReal product(1);
  ExactReal offset;
  ExpansionTrace t;
  t.exact = x.exact().has_value();
  for (std::size_t n = 0; n < len; ++n) {
    const ExactReal& b = base.at(n);
    product *= b;
    offset *= b;
    const ComputableReal next = x_beta_computable(base, n + 1);
    const unsigned extra = (magnitude_bits(product) + 31) / 32;
    std::optional<Integer> digit;
    RealInterval s_iv;
    for (unsigned level = 0; level <= cap && !digit; ++level) {
      const unsigned bits = ComputableReal::bits_for_level(level);
      RealInterval y;
      if (x.exact()) {
        y = enclose(product * *x.exact() - offset, bits + 2);
      } else {
        y = enclose(product, bits + 32 * extra + 2) * x.enclosure(level + extra) - enclose(offset, bits + 2);
      }
      const RealInterval v = y - next.enclosure(level);
      const Integer lo = ceil_rational(v.lo);
      if (lo == ceil_rational(v.hi)) {
        digit = lo;
        s_iv = y - RealInterval::point(Rational(lo));
      }
    }
    if (!digit) throw NeedsMorePrecision("lazy digit at position " + std::to_string(n));
    const digit_t d = to_digit(*digit, n, base.max_digit(n));
    offset += ExactReal(static_cast<long>(d));
    t.digits.push_back(d);
    if (x.exact()) t.remainders.emplace_back(product * *x.exact() - offset);
    else t.remainders.emplace_back(s_iv);
  }
  return t;
}

DigitWord greedy_word(const CantorBase& base, const ExactReal& x, std::size_t max_steps) {
  if (x.sign() < 0 || x >= ExactReal(1)) {
    throw OutOfDomain("greedy expansion needs 0 <= x < 1, got " + format_real(x));
  }
  return run_until_cycle(base, x, max_steps, 0, [&](std::size_t n, ExactReal& r) {
    const ExactReal y = base.at(n) * r;
    const digit_t d = to_digit(floor_exact(y), n, base.max_digit(n));
    r = y - ExactReal(static_cast<long>(d));
    return d;
  });
}

DigitWord lazy_word(const CantorBase& base, const ExactReal& x, std::size_t max_steps) {
  const std::vector<ExactReal> profile = x_beta_profile(base);
  check_lazy_domain_exact(x, profile[base.phase(0)]);
  return run_until_cycle(base, x, max_steps, 0, [&](std::size_t n, ExactReal& s) {
    const ExactReal y = base.at(n) * s;
    const digit_t d = to_digit(ceil_exact(y - profile[base.phase(n + 1)]), n, base.max_digit(n));
    s = y - ExactReal(static_cast<long>(d));
    return d;
  });
}

DigitWord quasi_greedy_one(const CantorBase& base, std::size_t max_steps) {
  base.periodic_form();
  return run_until_cycle(base, ExactReal(1), max_steps, 0, [&](std::size_t n, ExactReal& r) {
    const ExactReal y = base.at(n) * r;
    const digit_t d = to_digit(ceil_exact(y) - 1, n, base.max_digit(n));
    r = y - ExactReal(static_cast<long>(d));
    return d;
  });
}

namespace {

// A finite quasi-lazy word ends where the tail bases are integers.
DigitWord checked_quasi_lazy(const CantorBase& base, const DigitWord& quasi_greedy) {
  DigitWord w = theta_flip(base, quasi_greedy);
  if (w.is_finite() && x_beta_exact(shift_base(base, w.preperiod().size())) != ExactReal(1)) {
    throw std::logic_error("finite quasi-lazy word over a base with x_beta != 1 in its tail");
  }
  return w;
}

}  // namespace

DigitWord quasi_lazy(const CantorBase& base, std::size_t max_steps) {
  return checked_quasi_lazy(base, quasi_greedy_one(base, max_steps));
}

std::vector<DigitWord> quasi_greedy_table(const CantorBase& base, std::size_t max_steps) {
  std::vector<DigitWord> out;
  for (std::size_t i = 0; i < base.phase_count(); ++i) {
    try {
      out.push_back(quasi_greedy_one(shift_base(base, i), max_steps));
    } catch (const PeriodNotFound&) {
      throw PeriodNotFound(max_steps, i);
    }
  }
  return out;
}

std::vector<DigitWord> quasi_lazy_table(const CantorBase& base, std::size_t max_steps) {
  std::vector<DigitWord> greedy = quasi_greedy_table(base, max_steps);
  std::vector<DigitWord> out;
  for (std::size_t i = 0; i < greedy.size(); ++i) out.push_back(checked_quasi_lazy(shift_base(base, i), greedy[i]));
  return out;
}

FiniteWord theta_flip(const CantorBase& base, std::span<const digit_t> w, std::size_t offset) {
  FiniteWord out(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    const digit_t m = base.max_digit(offset + n);
    if (w[n] > m) throw AlphabetViolation(n, w[n], m);
    out[n] = m - w[n];
  }
  return out;
}

DigitWord theta_flip(const CantorBase& base, const DigitWord& w) {
  if (base.is_thue_morse()) {
    throw UnsupportedBase("the flip of an infinite word is not ultimately periodic over a Thue-Morse base");
  }
  const std::size_t pre = std::max(w.preperiod().size(), base.preperiod_length());
  const std::size_t cycle = std::lcm(w.cycle_length(), base.period_length());
  const FiniteWord flipped = theta_flip(base, w.prefix(pre + cycle));
  return DigitWord(FiniteWord(flipped.begin(), flipped.begin() + static_cast<std::ptrdiff_t>(pre)),
                   FiniteWord(flipped.begin() + static_cast<std::ptrdiff_t>(pre), flipped.end()));
}

ExactReal value_of_prefix(const CantorBase& base, std::span<const digit_t> w) {
  ExactReal sum;
  ExactReal product(1);
  for (std::size_t n = 0; n < w.size(); ++n) {
    product *= base.at(n);
    if (w[n]) sum += ExactReal(static_cast<long>(w[n])) / product;
  }
  return sum;
}

ExactReal value_of(const CantorBase& base, const DigitWord& w) {
  base.periodic_form();
  const std::size_t pre = std::max(w.preperiod().size(), base.preperiod_length());
  ExactReal head = value_of_prefix(base, w.prefix(pre));
  if (w.is_finite()) return head;
  // Tail after `pre`: V = S + V / Q over one joint cycle.
  const std::size_t cycle = std::lcm(w.cycle_length(), base.period_length());
  const CantorBase tail_base = shift_base(base, pre);
  const ExactReal s = value_of_prefix(tail_base, shift_word(w, pre).prefix(cycle));
  const ExactReal q = base_product(tail_base, cycle);
  const ExactReal v = s * q / (q - ExactReal(1));
  return head + v / base_product(base, pre);
}

RealInterval value_enclosure(const CantorBase& base, const DigitWord& w, std::size_t terms) {
  if (terms == 0) throw OutOfDomain("value enclosure needs at least one term");
  const FiniteWord head = w.prefix(terms);
  const RealInterval sum = enclose(value_of_prefix(base, head), 128);
  digit_t wmax = 0;
  for (digit_t d : w.preperiod()) wmax = std::max(wmax, d);
  for (digit_t d : w.period()) wmax = std::max(wmax, d);
  if (w.is_finite() && w.preperiod().size() <= terms) return sum;
  // Remaining terms: at most wmax / (prod_{k<terms} beta_k) * sum_{j>=1} m^-j
  // with m a rational lower bound of every entry.
  Rational m = enclose(base.min_entry(), 64).lo;
  for (unsigned bits = 128; m <= 1; bits *= 2) m = enclose(base.min_entry(), bits).lo;
  const Rational inv_product = enclose(ExactReal(1) / base_product(base, terms), 64).hi;
  const Rational tail = Rational(wmax) * inv_product / (m - 1);
  return {sum.lo, sum.hi + tail};
}

}  // namespace cantor
