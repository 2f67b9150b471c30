#include <doctest.h>

#include "cantor/factor_oracle.hpp"
#include "cantor/parallel.hpp"
#include "oracles.hpp"

using namespace cantor;

TEST_CASE("serial and OpenMP kernels agree") {
  fixtures::Rng rng(fixtures::kSeed + 60);
  CHECK(parallel::max_threads() >= 1);
  for (const CantorBase& base : fixtures::alternate_fixtures()) {
    const ExactReal xb = x_beta_exact(base);
    std::vector<ExactReal> xs, ys;
    for (int t = 0; t < 64; ++t) {
      const ExactReal u = fixtures::random_unit(rng, base.field());
      xs.push_back(u);
      if (u != ExactReal(0)) ys.push_back(xb - ExactReal(1) + u);
    }
    CHECK(serial::greedy_batch(base, xs, 24) == parallel::greedy_batch(base, xs, 24));
    CHECK(serial::lazy_batch(base, ys, 24) == parallel::lazy_batch(base, ys, 24));

    const std::vector<FiniteWord> words = enumerate_all_words(base, base.alphabet_bound() > 3 ? 4 : 6);
    const std::vector<char> flags = serial::lazy_factor_flags(base, words);
    CHECK(flags == parallel::lazy_factor_flags(base, words));
    const ShiftAutomaton a = build_lazy_automaton(base);
    CHECK(serial::accept_flags(a, words) == parallel::accept_flags(a, words));
    CHECK(parallel::accept_flags(a, words) == flags);
  }
}

TEST_CASE("batch kernels report domain errors") {
  const CantorBase alt = fixtures::alt13();
  const std::vector<ExactReal> bad{ExactReal(1, 2), ExactReal(2)};
  CHECK_THROWS_AS(serial::greedy_batch(alt, bad, 4), OutOfDomain);
  CHECK_THROWS_AS(parallel::greedy_batch(alt, bad, 4), OutOfDomain);
}
