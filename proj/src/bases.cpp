#include "cantor/bases.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace cantor {

namespace {

digit_t max_digit_of(const ExactReal& b) {
  Integer c = ceil_exact(b) - 1;
  if (!c.fits_ulong_p() || c > Integer(std::numeric_limits<digit_t>::max())) {
    throw OutOfDomain("base entry too large for the digit type");
  }
  return static_cast<digit_t>(c.get_ui());
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<ExactReal> parse_list(std::string_view text) {
  std::vector<ExactReal> out;
  std::string body = trim(text);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    std::string item = trim(std::string_view(body).substr(start, comma - start));
    if (item.empty()) throw ParseError("empty entry in base list '" + body + "'");
    out.push_back(parse_real(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_list(const std::vector<ExactReal>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += format_real(xs[i]);
  }
  return s;
}

// Text between `[` and `]` following `key=`.
std::string_view bracketed(std::string_view text, std::string_view key) {
  std::size_t k = text.find(key);
  if (k == std::string_view::npos) throw ParseError("missing '" + std::string(key) + "' in base");
  std::size_t open = text.find('[', k);
  std::size_t close = text.find(']', open);
  if (open == std::string_view::npos || close == std::string_view::npos) {
    throw ParseError("expected [..] after '" + std::string(key) + "'");
  }
  return text.substr(open + 1, close - open - 1);
}

Rational lower_bound_above_one(const ExactReal& x) {
  for (unsigned bits = 32;; bits *= 2) {
    Rational lo = enclose(x, bits).lo;
    if (lo > 1) return lo;
  }
}

// Tail bound M * L^-T / (L - 1) for sum_{m >= T} M / prod_{k<=m} beta_k when
// every beta_k >= L > 1.
Rational geometric_tail(digit_t max_digit, const Rational& lower, std::size_t terms) {
  Rational inv = 1 / lower;
  Rational power = 1;
  mpz_pow_ui(power.get_num_mpz_t(), inv.get_num_mpz_t(), terms);
  mpz_pow_ui(power.get_den_mpz_t(), inv.get_den_mpz_t(), terms);
  power.canonicalize();
  return Rational(max_digit) * power / (lower - 1);
}

// Lower bound for the smallest entry, coarsened to a short dyadic so tail
// bounds stay small numbers.
Rational coarse_lower_bound(const CantorBase& base) {
  Rational lo = lower_bound_above_one(base.min_entry());
  for (unsigned bits = 8;; bits += 8) {
    Rational coarse = RealInterval(lo, lo).rounded_outward(bits).lo;
    if (coarse > 1) return coarse;
  }
}

}  // namespace

CantorBase CantorBase::eventually_periodic(std::vector<ExactReal> preperiod,
                                           std::vector<ExactReal> period) {
  if (period.empty()) throw OutOfDomain("base period must be non-empty");
  CantorBase b;
  b.repr_ = EventuallyPeriodic{std::move(preperiod), std::move(period)};
  const auto& form = std::get<EventuallyPeriodic>(b.repr_);
  std::vector<const ExactReal*> entries;
  for (const auto& x : form.preperiod) entries.push_back(&x);
  for (const auto& x : form.period) entries.push_back(&x);
  b.validate_and_cache(entries);
  return b;
}

CantorBase CantorBase::thue_morse(ExactReal alpha, ExactReal beta, std::uint64_t offset) {
  CantorBase b;
  b.repr_ = ThueMorse{std::move(alpha), std::move(beta), offset};
  const auto& form = std::get<ThueMorse>(b.repr_);
  b.validate_and_cache({&form.alpha, &form.beta});
  return b;
}

void CantorBase::validate_and_cache(const std::vector<const ExactReal*>& entries) {
  field_ = 0;
  for (const ExactReal* e : entries) {
    if (e->radicand() == 0) continue;
    if (field_ == 0) field_ = e->radicand();
    else if (field_ != e->radicand()) throw MixedFieldsError(field_, e->radicand());
  }
  const ExactReal one(1);
  maxima_.clear();
  for (const ExactReal* e : entries) {
    if (*e <= one) throw OutOfDomain("base entry " + format_real(*e) + " must exceed 1");
    maxima_.push_back(max_digit_of(*e));
  }
}

const EventuallyPeriodic& CantorBase::periodic_form() const {
  if (!is_eventually_periodic()) throw UnsupportedBase("operation requires an eventually periodic base");
  return std::get<EventuallyPeriodic>(repr_);
}

const ThueMorse& CantorBase::thue_morse_form() const {
  if (!is_thue_morse()) throw UnsupportedBase("operation requires a Thue-Morse base");
  return std::get<ThueMorse>(repr_);
}

std::size_t CantorBase::preperiod_length() const { return periodic_form().preperiod.size(); }
std::size_t CantorBase::period_length() const { return periodic_form().period.size(); }

std::size_t CantorBase::phase(std::size_t n) const {
  const auto& f = periodic_form();
  const std::size_t pre = f.preperiod.size();
  return n < pre ? n : pre + (n - pre) % f.period.size();
}

const ExactReal& CantorBase::at(std::size_t n) const {
  if (const auto* tm = std::get_if<ThueMorse>(&repr_)) {
    return std::popcount(static_cast<std::uint64_t>(n) + tm->offset) % 2 == 0 ? tm->alpha : tm->beta;
  }
  const auto& f = std::get<EventuallyPeriodic>(repr_);
  const std::size_t k = phase(n);
  return k < f.preperiod.size() ? f.preperiod[k] : f.period[k - f.preperiod.size()];
}

digit_t CantorBase::max_digit(std::size_t n) const {
  if (const auto* tm = std::get_if<ThueMorse>(&repr_)) {
    return std::popcount(static_cast<std::uint64_t>(n) + tm->offset) % 2 == 0 ? maxima_[0] : maxima_[1];
  }
  return maxima_[phase(n)];
}

digit_t CantorBase::alphabet_bound() const { return *std::max_element(maxima_.begin(), maxima_.end()); }

const ExactReal& CantorBase::min_entry() const {
  if (const auto* tm = std::get_if<ThueMorse>(&repr_)) return tm->alpha < tm->beta ? tm->alpha : tm->beta;
  const auto& f = std::get<EventuallyPeriodic>(repr_);
  const ExactReal* best = &f.period.front();
  for (const auto& x : f.preperiod) if (x < *best) best = &x;
  for (const auto& x : f.period) if (x < *best) best = &x;
  return *best;
}

const ExactReal& base_at(const CantorBase& base, std::size_t n) { return base.at(n); }

digit_t alphabet_max(const CantorBase& base, std::size_t n) { return base.max_digit(n); }

CantorBase shift_base(const CantorBase& base, std::size_t n) {
  if (base.is_thue_morse()) {
    const auto& tm = base.thue_morse_form();
    return CantorBase::thue_morse(tm.alpha, tm.beta, tm.offset + n);
  }
  const auto& f = base.periodic_form();
  if (n <= f.preperiod.size()) {
    return CantorBase::eventually_periodic({f.preperiod.begin() + static_cast<std::ptrdiff_t>(n), f.preperiod.end()},
                                           f.period);
  }
  const std::size_t k = (n - f.preperiod.size()) % f.period.size();
  std::vector<ExactReal> period = f.period;
  std::rotate(period.begin(), period.begin() + static_cast<std::ptrdiff_t>(k), period.end());
  return CantorBase::alternate(std::move(period));
}

std::vector<ExactReal> x_beta_profile(const CantorBase& base) {
  const auto& f = base.periodic_form();
  const std::size_t pre = f.preperiod.size();
  const std::size_t p = f.period.size();
  std::vector<ExactReal> x(pre + p);

  // Over one period: x(pre) = S + x(pre) / P, with S the partial series and
  // P the period product (> 1, so P - 1 != 0).
  ExactReal sum;
  ExactReal product(1);
  for (std::size_t k = 0; k < p; ++k) {
    product *= f.period[k];
    sum += ExactReal(static_cast<long>(base.max_digit(pre + k))) / product;
  }
  x[pre] = sum * product / (product - ExactReal(1));
  // Unwind the recursion backwards through the period, then the preperiod.
  ExactReal next = x[pre];
  for (std::size_t k = p; k-- > 1;) {
    x[pre + k] = (next + ExactReal(static_cast<long>(base.max_digit(pre + k)))) / f.period[k];
    next = x[pre + k];
  }
  next = x[pre];
  for (std::size_t i = pre; i-- > 0;) {
    x[i] = (next + ExactReal(static_cast<long>(base.max_digit(i)))) / f.preperiod[i];
    next = x[i];
  }
  return x;
}

ExactReal x_beta_exact(const CantorBase& base) { return x_beta_profile(base).front(); }

RealInterval x_beta_series(const CantorBase& base, std::size_t terms) {
  if (terms == 0) throw OutOfDomain("series needs at least one term");
  ExactReal sum;
  ExactReal product(1);
  for (std::size_t m = 0; m < terms; ++m) {
    product *= base.at(m);
    sum += ExactReal(static_cast<long>(base.max_digit(m))) / product;
  }
  const Rational tail = geometric_tail(base.alphabet_bound(), coarse_lower_bound(base), terms);
  RealInterval s = enclose(sum, 128);
  return {s.lo, s.hi + tail};
}

RealInterval x_beta_enclosure(const CantorBase& base, std::size_t n, unsigned bits) {
  if (base.is_eventually_periodic()) {
    return enclose(x_beta_profile(base)[base.phase(n)], bits);
  }
  const Rational lower = coarse_lower_bound(base);
  const digit_t mmax = base.alphabet_bound();
  // Terms so that the tail is below 2^-(bits+1).
  const double log_l = std::log2(lower.get_d());
  const double need = bits + 1 + std::log2(static_cast<double>(mmax) / Rational(lower - 1).get_d());
  std::size_t terms = static_cast<std::size_t>(std::ceil(std::max(need, 1.0) / log_l)) + 2;
  Rational bound = 1;
  bound /= Integer(1) << (bits + 1);
  Rational tail = geometric_tail(mmax, lower, terms);
  while (tail > bound) {
    terms += 8;
    tail = geometric_tail(mmax, lower, terms);
  }

  const ThueMorse& tm = base.thue_morse_form();
  for (unsigned work = bits + 16 + static_cast<unsigned>(std::bit_width(terms));; work += 32) {
    const RealInterval inv_alpha = enclose(ExactReal(1) / tm.alpha, work + 8).rounded_outward(work);
    const RealInterval inv_beta = enclose(ExactReal(1) / tm.beta, work + 8).rounded_outward(work);
    RealInterval inv_product = RealInterval::point(1);
    RealInterval sum = RealInterval::point(0);
    for (std::size_t m = 0; m < terms; ++m) {
      const std::uint64_t idx = static_cast<std::uint64_t>(n + m) + tm.offset;
      inv_product = (inv_product * (std::popcount(idx) % 2 == 0 ? inv_alpha : inv_beta)).rounded_outward(work);
      sum = sum + inv_product * RealInterval::point(base.max_digit(n + m));
    }
    RealInterval result(sum.lo, sum.hi + tail);
    Rational limit = 1;
    limit /= Integer(1) << bits;
    if (result.width() <= limit) return result;
  }
}

ComputableReal x_beta_computable(const CantorBase& base, std::size_t n) {
  if (base.is_eventually_periodic()) return ComputableReal(x_beta_profile(base)[base.phase(n)]);
  return ComputableReal([base, n](unsigned level) {
    return x_beta_enclosure(base, n, ComputableReal::bits_for_level(level));
  });
}

RealInterval thue_morse_product(const RealInterval& z, const Rational& tolerance) {
  if (sgn(tolerance) <= 0) throw InvalidTolerance();
  if (sgn(z.lo) <= 0 || z.hi >= 1) throw OutOfDomain("Thue-Morse product needs 0 < z < 1");
  const double want = -std::log2(tolerance.get_d());
  const unsigned work = static_cast<unsigned>(std::max(want, 0.0)) + 24;
  const RealInterval one = RealInterval::point(1);
  RealInterval product = one;
  RealInterval power = z;  // z^(2^(k-1))
  for (unsigned k = 1; k <= 64; ++k) {
    product = (product * (one - power)).rounded_outward(work);
    power = (power * power).rounded_outward(work);
    // Remaining factors lie in [1 - t, 1] with t <= z^(2^k) / (1 - z).
    const Rational t = power.hi / (1 - z.hi);
    if (t >= 1) continue;
    RealInterval result(product.lo * (1 - t), product.hi);
    if (result.width() <= tolerance) return result;
  }
  throw NeedsMorePrecision("Thue-Morse product enclosure did not reach the tolerance; tighten z");
}

ThueMorseXBeta x_beta_thue_morse(const ExactReal& alpha, const ExactReal& beta, const Rational& tolerance) {
  if (sgn(tolerance) <= 0) throw InvalidTolerance();
  // Validates alpha, beta > 1 and a common field.
  const CantorBase base = CantorBase::thue_morse(alpha, beta);
  const ExactReal ma(static_cast<long>(base.max_digit(0)));
  const ExactReal mb(static_cast<long>(base.max_digit(1)));
  const ExactReal ab = alpha * beta;
  const ExactReal x1 = ma / alpha + mb / ab;
  const ExactReal y1 = mb / beta + ma / ab;
  const ExactReal half_sum = (x1 + y1) / ExactReal(2);
  const ExactReal half_diff = (x1 - y1) / ExactReal(2);
  const ExactReal z = ExactReal(1) / ab;
  const ExactReal geometric = ExactReal(1) / (ExactReal(1) - z);

  // Width of the result is about |half_diff| * width(product).
  const Rational scale = abs(enclose(half_diff, 32).hi) + 1;
  Rational product_tol = tolerance / (4 * scale);
  for (unsigned bits = 64;; bits *= 2) {
    const RealInterval z_iv = enclose(z, bits);
    const RealInterval product = thue_morse_product(z_iv, product_tol);
    const RealInterval x =
        enclose(half_sum * geometric, bits) + enclose(half_diff, bits) * product;
    if (x.width() <= tolerance) return {x, product};
    product_tol /= 4;
    if (bits > (1u << 16)) throw NeedsMorePrecision("Thue-Morse x_beta enclosure");
  }
}

CantorBase parse_base(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("base must start with 'alt:', 'evp:' or 'tm:'");
  const std::string kind = trim(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "alt") return CantorBase::alternate(parse_list(rest));
  if (kind == "evp") {
    return CantorBase::eventually_periodic(parse_list(bracketed(rest, "pre=")),
                                           parse_list(bracketed(rest, "per=")));
  }
  if (kind == "tm") {
    const std::size_t a = rest.find("alpha=");
    const std::size_t b = rest.find("beta=", a == std::string_view::npos ? 0 : a + 6);
    if (a == std::string_view::npos || b == std::string_view::npos) {
      throw ParseError("tm base needs alpha= and beta=");
    }
    const std::size_t o = rest.find("offset=", b);
    const std::string alpha = trim(rest.substr(a + 6, b - a - 6));
    const std::string beta = trim(rest.substr(b + 5, o == std::string_view::npos ? std::string_view::npos : o - b - 5));
    std::uint64_t offset = 0;
    if (o != std::string_view::npos) {
      const std::string digits = trim(rest.substr(o + 7));
      try {
        std::size_t used = 0;
        offset = std::stoull(digits, &used);
        if (used != digits.size()) throw ParseError("bad offset");
      } catch (const std::logic_error&) {
        throw ParseError("bad tm offset '" + digits + "'");
      }
    }
    return CantorBase::thue_morse(parse_real(alpha), parse_real(beta), offset);
  }
  throw ParseError("unknown base kind '" + kind + "'");
}

std::string format_base(const CantorBase& base) {
  if (base.is_thue_morse()) {
    const auto& tm = base.thue_morse_form();
    std::string s = "tm: alpha=" + format_real(tm.alpha) + " beta=" + format_real(tm.beta);
    if (tm.offset) s += " offset=" + std::to_string(tm.offset);
    return s;
  }
  const auto& f = base.periodic_form();
  if (f.preperiod.empty()) return "alt: " + format_list(f.period);
  return "evp: pre=[" + format_list(f.preperiod) + "] per=[" + format_list(f.period) + "]";
}

}  // namespace cantor
