#pragma once

// Membership of ultimately periodic words in the set of lazy expansions and
// in its closure, and the X'/Y' prefix factorizations.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/digit_word.hpp"
#include "cantor/expansion.hpp"

namespace cantor {

enum class Verdict { InLazy, InClosureOnly, NotAdmissible, Inconclusive };

struct AdmissibilityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;  // set for Inconclusive and NotAdmissible

  bool in_closure() const { return verdict == Verdict::InLazy || verdict == Verdict::InClosureOnly; }
};

// `in-lazy`, `in-closure`, `not-admissible`, `inconclusive:<reason>`.
std::string format_verdict(const AdmissibilityVerdict& v);

// sigma^n(w) compared with the quasi-lazy word of beta^(n) for every n in a
// window after which both sides cycle. Eventually periodic bases only.
AdmissibilityVerdict is_lazy_admissible(const CantorBase& base, const DigitWord& w,
                                        std::size_t cap = kDefaultMaxSteps);

// sigma^n(w) <_lex d*_{beta^(n)}(1) for every n. Throws PeriodNotFound.
bool is_greedy_admissible(const CantorBase& base, const DigitWord& w, std::size_t cap = kDefaultMaxSteps);

// X'_{beta,n} = { l_0 ... l_{n-2} s : l_{n-1} < s <= ceil(beta_{n-1}) - 1 }.
std::vector<FiniteWord> x_prime_set(const CantorBase& base, std::size_t n, std::size_t cap = kDefaultMaxSteps);

// Members of Y'_{beta,h} (union of X'_{beta,n} over n = h mod p) of length
// at most `length_bound`, sorted by length then lexicographically.
std::vector<FiniteWord> y_prime_set(const CantorBase& base, std::size_t h, std::size_t length_bound,
                                    std::size_t cap = kDefaultMaxSteps);

// True iff w is a concatenation of X' blocks (each taken for the base
// shifted by what precedes it) followed by a prefix of the current
// quasi-lazy word, i.e. w is a prefix of some lazy expansion in base
// beta^(offset).
bool factorization_check(const CantorBase& base, std::span<const digit_t> w, std::size_t offset = 0,
                         std::size_t cap = kDefaultMaxSteps);

}  // namespace cantor
