#include "cantor/admissibility.hpp"

#include <algorithm>
#include <numeric>

namespace cantor {

namespace {

std::size_t window_length(const CantorBase& base, const DigitWord& w) {
  return std::max(base.preperiod_length(), w.preperiod().size()) +
         std::lcm(base.period_length(), w.cycle_length());
}

}  // namespace

std::string format_verdict(const AdmissibilityVerdict& v) {
  switch (v.verdict) {
    case Verdict::InLazy:
      return "in-lazy";
    case Verdict::InClosureOnly:
      return "in-closure";
    case Verdict::NotAdmissible:
      return "not-admissible";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive:" + v.reason;
}

AdmissibilityVerdict is_lazy_admissible(const CantorBase& base, const DigitWord& w, std::size_t cap) {
  base.periodic_form();
  if (!is_alphabet_valid(base, w)) return {Verdict::NotAdmissible, "digit outside the alphabet"};
  std::vector<DigitWord> table;
  try {
    table = quasi_lazy_table(base, cap);
  } catch (const PeriodNotFound& e) {
    return {Verdict::Inconclusive, "period-not-found(shift=" + std::to_string(e.shift()) + ")"};
  }
  bool strict = true;
  const std::size_t window = window_length(base, w);
  for (std::size_t n = 0; n < window; ++n) {
    const auto c = lex_compare(shift_word(w, n), table[base.phase(n)]);
    if (c < 0) return {Verdict::NotAdmissible, "shift " + std::to_string(n) + " below the quasi-lazy word"};
    if (c == 0) strict = false;
  }
  return {strict ? Verdict::InLazy : Verdict::InClosureOnly, {}};
}

bool is_greedy_admissible(const CantorBase& base, const DigitWord& w, std::size_t cap) {
  base.periodic_form();
  if (!is_alphabet_valid(base, w)) return false;
  const std::vector<DigitWord> table = quasi_greedy_table(base, cap);
  const std::size_t window = window_length(base, w);
  for (std::size_t n = 0; n < window; ++n) {
    if (lex_compare(shift_word(w, n), table[base.phase(n)]) >= 0) return false;
  }
  return true;
}

std::vector<FiniteWord> x_prime_set(const CantorBase& base, std::size_t n, std::size_t cap) {
  if (n == 0) throw OutOfDomain("X' is indexed from n = 1");
  const DigitWord ell = quasi_lazy(base, cap);
  std::vector<FiniteWord> out;
  FiniteWord head = ell.prefix(n);
  const digit_t last = head.back();
  for (digit_t s = last + 1; s <= base.max_digit(n - 1); ++s) {
    head.back() = s;
    out.push_back(head);
  }
  return out;
}

std::vector<FiniteWord> y_prime_set(const CantorBase& base, std::size_t h, std::size_t length_bound,
                                    std::size_t cap) {
  if (!base.is_alternate()) throw UnsupportedBase("Y' sets are defined for alternate bases");
  const std::size_t p = base.period_length();
  if (h >= p) throw OutOfDomain("residue h must lie in [0, p-1]");
  std::vector<FiniteWord> out;
  for (std::size_t n = 1; n <= length_bound; ++n) {
    if (n % p != h) continue;
    for (auto& w : x_prime_set(base, n, cap)) out.push_back(std::move(w));
  }
  return out;
}

bool factorization_check(const CantorBase& base, std::span<const digit_t> w, std::size_t offset, std::size_t cap) {
  const std::vector<DigitWord> table = quasi_lazy_table(base, cap);
  std::size_t pos = 0;
  while (pos < w.size()) {
    const std::size_t shift = offset + pos;
    const DigitWord& ell = table[base.phase(shift)];
    std::size_t k = 0;
    while (pos + k < w.size() && w[pos + k] == ell.at(k)) ++k;
    if (pos + k == w.size()) return true;
    const digit_t s = w[pos + k];
    // A block l_0 ... l_{k-1} s of X'_{beta^(shift), k+1}.
    if (s < ell.at(k) || s > base.max_digit(shift + k)) return false;
    pos += k + 1;
  }
  return true;
}

}  // namespace cantor
