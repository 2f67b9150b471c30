#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bases.hpp"

namespace cantor {

// A finite word, e.g. a factor or a prefix. Trailing zeros are significant.
using FiniteWord = std::vector<digit_t>;

// An ultimately periodic infinite word u v^omega.
//
// Stored canonically: the period is primitive, the preperiod is as short as
// possible, and a word ending in 0^omega has an empty period (with no
// trailing zeros in the preperiod). Equality is therefore structural.
class DigitWord {
 public:
  DigitWord() = default;
  DigitWord(FiniteWord preperiod, FiniteWord period);
  // u 0^omega.
  static DigitWord finite(FiniteWord prefix) { return DigitWord(std::move(prefix), {}); }

  const FiniteWord& preperiod() const { return pre_; }
  const FiniteWord& period() const { return per_; }
  // True when the word ends in 0^omega.
  bool is_finite() const { return per_.empty(); }
  // Period length used for window arithmetic (1 for finite words).
  std::size_t cycle_length() const { return per_.empty() ? 1 : per_.size(); }

  digit_t at(std::size_t n) const;
  FiniteWord prefix(std::size_t len) const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;

 private:
  FiniteWord pre_;
  FiniteWord per_;
};

// `d d d (d d)^w`; a finite word prints its digits only, 0^omega as `(0)^w`.
std::string format_word(const DigitWord& w);
DigitWord parse_word(std::string_view text);
std::string format_finite(std::span<const digit_t> w);
FiniteWord parse_finite(std::string_view text);

// sigma^n
DigitWord shift_word(const DigitWord& w, std::size_t n);

// Lexicographic order on infinite words, decided within
// max(preperiods) + lcm(periods) letters.
std::strong_ordering lex_compare(const DigitWord& u, const DigitWord& v);

// Every digit at position n is at most ceil(beta_n) - 1.
bool is_alphabet_valid(const CantorBase& base, const DigitWord& w);
bool is_alphabet_valid(const CantorBase& base, std::span<const digit_t> w, std::size_t offset = 0);

}  // namespace cantor
