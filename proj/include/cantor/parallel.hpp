#pragma once

// Batch kernels: one OpenMP version and one plain serial reference that the
// tests compare it against. Results are identical element for element.

#include <cstddef>
#include <vector>

#include "cantor/automaton.hpp"
#include "cantor/bases.hpp"
#include "cantor/digit_word.hpp"
#include "cantor/exactnum.hpp"

namespace cantor {

namespace serial {

std::vector<FiniteWord> greedy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len);
std::vector<FiniteWord> lazy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len);
// 1 where the word is a factor of the lazy shift (brute-force oracle).
std::vector<char> lazy_factor_flags(const CantorBase& base, const std::vector<FiniteWord>& words);
std::vector<char> accept_flags(const ShiftAutomaton& a, const std::vector<FiniteWord>& words);

}  // namespace serial

namespace parallel {

std::vector<FiniteWord> greedy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len);
std::vector<FiniteWord> lazy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len);
std::vector<char> lazy_factor_flags(const CantorBase& base, const std::vector<FiniteWord>& words);
std::vector<char> accept_flags(const ShiftAutomaton& a, const std::vector<FiniteWord>& words);

int max_threads();

}  // namespace parallel

}  // namespace cantor
