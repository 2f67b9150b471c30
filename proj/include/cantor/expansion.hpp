#pragma once

// Greedy, lazy, quasi-greedy and quasi-lazy digit algorithms, the flip
// theta, and valuation of digit words.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/digit_word.hpp"
#include "cantor/exactnum.hpp"

namespace cantor {

inline constexpr std::size_t kDefaultMaxSteps = 10000;

using Remainder = std::variant<ExactReal, RealInterval>;

struct ExpansionTrace {
  FiniteWord digits;
  // r_n (greedy) or s_n (lazy), one per digit.
  std::vector<Remainder> remainders;
  // False when some remainder is only known as an enclosure.
  bool exact = true;
};

// First `len` digits of d_beta(x), x in [0, 1).
ExpansionTrace greedy_expand(const CantorBase& base, const ExactReal& x, std::size_t len);

// First `len` digits of the lazy expansion of x in (x_beta - 1, x_beta].
// For Thue-Morse bases each digit is decided from enclosures of
// x_{beta^(n+1)}; a tie that survives `cap` refinement levels raises
// NeedsMorePrecision.
ExpansionTrace lazy_expand(const CantorBase& base, const ExactReal& x, std::size_t len,
                           unsigned cap = kDefaultRefinementCap);
// Same for an x that is only available as enclosures. Remainders are
// returned as enclosures unless x is exact.
ExpansionTrace lazy_expand(const CantorBase& base, const ComputableReal& x, std::size_t len,
                           unsigned cap = kDefaultRefinementCap);

// Full greedy / lazy expansion as an ultimately periodic word, found by
// exact state repetition. Eventually periodic bases only.
DigitWord greedy_word(const CantorBase& base, const ExactReal& x, std::size_t max_steps = kDefaultMaxSteps);
DigitWord lazy_word(const CantorBase& base, const ExactReal& x, std::size_t max_steps = kDefaultMaxSteps);

// d*_beta(1) from r_{-1} = 1, e_n = ceil(beta_n r_{n-1}) - 1,
// r_n = beta_n r_{n-1} - e_n, with cycle detection on (phase, r).
DigitWord quasi_greedy_one(const CantorBase& base, std::size_t max_steps = kDefaultMaxSteps);
// l*_beta(x_beta - 1) = theta(d*_beta(1)).
DigitWord quasi_lazy(const CantorBase& base, std::size_t max_steps = kDefaultMaxSteps);
// Quasi-lazy words of every shift beta^(i), i < phase_count().
std::vector<DigitWord> quasi_lazy_table(const CantorBase& base, std::size_t max_steps = kDefaultMaxSteps);
std::vector<DigitWord> quasi_greedy_table(const CantorBase& base, std::size_t max_steps = kDefaultMaxSteps);

// Positionwise complement a_n -> ceil(beta_n) - 1 - a_n.
DigitWord theta_flip(const CantorBase& base, const DigitWord& w);
// Flip of a finite word that starts at base position `offset`.
FiniteWord theta_flip(const CantorBase& base, std::span<const digit_t> w, std::size_t offset = 0);

// Exact val_beta(w) for an eventually periodic base. Digits need not be
// alphabet-valid.
ExactReal value_of(const CantorBase& base, const DigitWord& w);
// Enclosure of val_beta(w) from `terms` exact terms and a tail bound; works
// for every base family.
RealInterval value_enclosure(const CantorBase& base, const DigitWord& w, std::size_t terms);
// sum_{n < |w|} w_n / (beta_0 ... beta_n), exact.
ExactReal value_of_prefix(const CantorBase& base, std::span<const digit_t> w);
// beta_0 * ... * beta_{n-1}
ExactReal base_product(const CantorBase& base, std::size_t n);

}  // namespace cantor
