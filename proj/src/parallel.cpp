#include "cantor/parallel.hpp"

#include <omp.h>

#include <exception>

#include "cantor/expansion.hpp"
#include "cantor/factor_oracle.hpp"

namespace cantor {

namespace serial {

std::vector<FiniteWord> greedy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len) {
  std::vector<FiniteWord> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = greedy_expand(base, xs[i], len).digits;
  return out;
}

std::vector<FiniteWord> lazy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len) {
  std::vector<FiniteWord> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = lazy_expand(base, xs[i], len).digits;
  return out;
}

std::vector<char> lazy_factor_flags(const CantorBase& base, const std::vector<FiniteWord>& words) {
  const LazyFactorOracle oracle(base);
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = oracle.is_factor(words[i]) ? 1 : 0;
  return out;
}

std::vector<char> accept_flags(const ShiftAutomaton& a, const std::vector<FiniteWord>& words) {
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = accepts_factor(a, words[i]) ? 1 : 0;
  return out;
}

}  // namespace serial

namespace parallel {

namespace {

// Exceptions may not leave an OpenMP region; the first one is rethrown
// after the loop.
template <class Body>
void guarded_for(std::size_t count, Body body) {
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(cantor_guarded_for)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<FiniteWord> greedy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len) {
  std::vector<FiniteWord> out(xs.size());
  guarded_for(xs.size(), [&](std::size_t i) { out[i] = greedy_expand(base, xs[i], len).digits; });
  return out;
}

std::vector<FiniteWord> lazy_batch(const CantorBase& base, const std::vector<ExactReal>& xs, std::size_t len) {
  std::vector<FiniteWord> out(xs.size());
  guarded_for(xs.size(), [&](std::size_t i) { out[i] = lazy_expand(base, xs[i], len).digits; });
  return out;
}

std::vector<char> lazy_factor_flags(const CantorBase& base, const std::vector<FiniteWord>& words) {
  const LazyFactorOracle oracle(base);
  std::vector<char> out(words.size());
  guarded_for(words.size(), [&](std::size_t i) { out[i] = oracle.is_factor(words[i]) ? 1 : 0; });
  return out;
}

std::vector<char> accept_flags(const ShiftAutomaton& a, const std::vector<FiniteWord>& words) {
  std::vector<char> out(words.size());
  guarded_for(words.size(), [&](std::size_t i) { out[i] = accepts_factor(a, words[i]) ? 1 : 0; });
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace parallel

}  // namespace cantor
