#include "cantor/factor_oracle.hpp"

#include <algorithm>

namespace cantor {

LazyFactorOracle::LazyFactorOracle(CantorBase base) : base_(std::move(base)), xs_(x_beta_profile(base_)) {}

HalfOpenInterval LazyFactorOracle::remainders(std::span<const digit_t> w, std::size_t offset) const {
  const auto x_at = [&](std::size_t n) -> const ExactReal& { return xs_[base_.phase(n)]; };
  HalfOpenInterval j{x_at(offset) - ExactReal(1), x_at(offset)};
  for (std::size_t n = 0; n < w.size(); ++n) {
    const std::size_t pos = offset + n;
    const ExactReal& b = base_.at(pos);
    const ExactReal d(static_cast<long>(w[n]));
    // Digit d is the lazy choice iff the new remainder lands in
    // (x_{n+1} - 1, x_{n+1}].
    ExactReal lo = b * j.lo - d;
    ExactReal hi = b * j.hi - d;
    const ExactReal& next = x_at(pos + 1);
    if (lo < next - ExactReal(1)) lo = next - ExactReal(1);
    if (hi > next) hi = next;
    j = {std::move(lo), std::move(hi)};
    if (j.empty()) return j;
  }
  return j;
}

bool LazyFactorOracle::is_factor(std::span<const digit_t> w) const {
  for (std::size_t i = 0; i < base_.phase_count(); ++i) {
    if (is_prefix(w, i)) return true;
  }
  return false;
}

HalfOpenInterval lazy_prefix_remainders(const CantorBase& base, std::span<const digit_t> w, std::size_t offset) {
  return LazyFactorOracle(base).remainders(w, offset);
}

bool is_lazy_prefix(const CantorBase& base, std::span<const digit_t> w, std::size_t offset) {
  return LazyFactorOracle(base).is_prefix(w, offset);
}

bool is_lazy_factor(const CantorBase& base, std::span<const digit_t> w) {
  return LazyFactorOracle(base).is_factor(w);
}

std::vector<FiniteWord> enumerate_words(const CantorBase& base, std::size_t len, std::size_t offset) {
  std::vector<FiniteWord> out{FiniteWord{}};
  for (std::size_t n = 0; n < len; ++n) {
    std::vector<FiniteWord> next;
    const digit_t m = base.max_digit(offset + n);
    next.reserve(out.size() * (m + 1));
    for (const auto& w : out) {
      for (digit_t d = 0; d <= m; ++d) {
        next.push_back(w);
        next.back().push_back(d);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<FiniteWord> enumerate_all_words(const CantorBase& base, std::size_t len) {
  std::vector<FiniteWord> out{FiniteWord{}};
  const digit_t m = base.alphabet_bound();
  for (std::size_t n = 0; n < len; ++n) {
    std::vector<FiniteWord> next;
    next.reserve(out.size() * (m + 1));
    for (const auto& w : out) {
      for (digit_t d = 0; d <= m; ++d) {
        next.push_back(w);
        next.back().push_back(d);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace cantor
