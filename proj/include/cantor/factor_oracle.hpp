#pragma once

// Brute-force membership tests for prefixes and factors of lazy expansions,
// computed directly from the lazy digit rule and exact x_beta values. They
// do not use quasi-lazy words, so they serve as an independent check of the
// admissibility criterion and of the automata.

#include <cstddef>
#include <span>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/digit_word.hpp"

namespace cantor {

// Set of remainders s compatible with a lazy prefix: (lo, hi].
struct HalfOpenInterval {
  ExactReal lo;
  ExactReal hi;
  bool empty() const { return !(lo < hi); }
};

// Exact set of x in (x_{beta^(offset)} - 1, x_{beta^(offset)}] whose lazy
// expansion in beta^(offset) starts with w, pushed forward to the remainder
// after the last digit. Empty when w is not such a prefix.
HalfOpenInterval lazy_prefix_remainders(const CantorBase& base, std::span<const digit_t> w, std::size_t offset = 0);

// Caches the x_beta profile for repeated queries on one base.
class LazyFactorOracle {
 public:
  explicit LazyFactorOracle(CantorBase base);

  HalfOpenInterval remainders(std::span<const digit_t> w, std::size_t offset = 0) const;
  bool is_prefix(std::span<const digit_t> w, std::size_t offset = 0) const {
    return !remainders(w, offset).empty();
  }
  bool is_factor(std::span<const digit_t> w) const;

 private:
  CantorBase base_;
  std::vector<ExactReal> xs_;
};

// w is a prefix of some lazy expansion in beta^(offset).
bool is_lazy_prefix(const CantorBase& base, std::span<const digit_t> w, std::size_t offset = 0);
// w is a factor of the lazy shift: a prefix for some shifted base.
bool is_lazy_factor(const CantorBase& base, std::span<const digit_t> w);

// All words of length `len` with digit n at most ceil(beta_{offset+n}) - 1.
std::vector<FiniteWord> enumerate_words(const CantorBase& base, std::size_t len, std::size_t offset = 0);
// Words of length `len` over [0, alphabet_bound()].
std::vector<FiniteWord> enumerate_all_words(const CantorBase& base, std::size_t len);

}  // namespace cantor
