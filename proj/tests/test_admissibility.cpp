#include <doctest.h>

#include "cantor/admissibility.hpp"
#include "cantor/factor_oracle.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

DigitWord w(std::string_view s) { return parse_word(s); }
FiniteWord f(std::string_view s) { return parse_finite(s); }

}  // namespace

TEST_CASE("verdicts on the sqrt(13) base") {
  const CantorBase alt = fixtures::alt13();
  CHECK(is_lazy_admissible(alt, w("(2 1)^w")).verdict == Verdict::InLazy);
  CHECK(is_lazy_admissible(alt, w("1 0 (2 1)^w")).verdict == Verdict::InLazy);
  CHECK(is_lazy_admissible(alt, w("0 1 2 (0 2)^w")).verdict == Verdict::InClosureOnly);
  CHECK(is_lazy_admissible(alt, w("1 1 0 1 2 (0 2)^w")).verdict == Verdict::InClosureOnly);
  const AdmissibilityVerdict bad = is_lazy_admissible(alt, w("0 0 (2 1)^w"));
  CHECK(bad.verdict == Verdict::NotAdmissible);
  CHECK_FALSE(bad.in_closure());
  CHECK(is_lazy_admissible(alt, DigitWord()).verdict == Verdict::NotAdmissible);
  CHECK(is_lazy_admissible(alt, w("0 2 (2 1)^w")).verdict == Verdict::NotAdmissible);
  CHECK(format_verdict(is_lazy_admissible(alt, w("(2 1)^w"))) == "in-lazy");
  CHECK(format_verdict(is_lazy_admissible(alt, w("0 1 2 (0 2)^w"))) == "in-closure");

  const AdmissibilityVerdict capped = is_lazy_admissible(alt, w("(2 1)^w"), 2);
  CHECK(capped.verdict == Verdict::Inconclusive);
  CHECK(format_verdict(capped).rfind("inconclusive:", 0) == 0);
  CHECK_THROWS_AS(is_lazy_admissible(fixtures::thue_morse13(), w("1")), UnsupportedBase);

  CHECK(is_greedy_admissible(alt, w("1 1")));
  CHECK(is_greedy_admissible(alt, w("(1 0)^w")));
  CHECK_FALSE(is_greedy_admissible(alt, w("2 0 0 (1 0)^w")));
}

TEST_CASE("lazy expansions are admissible") {
  fixtures::Rng rng(fixtures::kSeed + 40);
  for (const CantorBase& base : fixtures::periodic_fixtures()) {
    const ExactReal xb = x_beta_exact(base);
    for (int t = 0; t < 15; ++t) {
      const ExactReal x = xb - fixtures::random_unit(rng, base.field());
      if (x == xb - ExactReal(1)) continue;
      const DigitWord word = lazy_word(base, x, 100000);
      CHECK(is_lazy_admissible(base, word).verdict == Verdict::InLazy);
      CHECK(value_of(base, word) == x);
    }
    // The quasi-lazy word sits in the closure only.
    CHECK(is_lazy_admissible(base, quasi_lazy(base)).verdict == Verdict::InClosureOnly);
  }
}

TEST_CASE("flip duality between greedy and lazy admissibility") {
  fixtures::Rng rng(fixtures::kSeed + 41);
  int greedy_count = 0;
  for (const CantorBase& base : fixtures::periodic_fixtures()) {
    for (int t = 0; t < 60; ++t) {
      const DigitWord a = fixtures::random_word(rng, base);
      const bool g = is_greedy_admissible(base, a);
      greedy_count += g;
      CHECK(g == (is_lazy_admissible(base, theta_flip(base, a)).verdict == Verdict::InLazy));
    }
  }
  CHECK(greedy_count > 0);
}

TEST_CASE("X' and Y' sets") {
  const CantorBase alt = fixtures::alt13();
  CHECK(x_prime_set(alt, 1) == std::vector<FiniteWord>{f("1"), f("2")});
  CHECK(x_prime_set(alt, 2) == std::vector<FiniteWord>{});
  CHECK(x_prime_set(alt, 3) == std::vector<FiniteWord>{});
  CHECK(x_prime_set(alt, 4) == std::vector<FiniteWord>{f("0 1 2 1")});
  CHECK(y_prime_set(alt, 0, 5) == std::vector<FiniteWord>{f("0 1 2 1")});
  CHECK(y_prime_set(alt, 1, 5) == std::vector<FiniteWord>{f("1"), f("2")});
  CHECK_THROWS_AS(x_prime_set(alt, 0), OutOfDomain);
  CHECK_THROWS_AS(y_prime_set(alt, 2, 5), OutOfDomain);
  CHECK_THROWS_AS(y_prime_set(fixtures::four_thirds_two(), 0, 5), UnsupportedBase);

  // Each block is the quasi-lazy prefix with its last digit raised.
  for (const CantorBase& base : fixtures::alternate_fixtures()) {
    const DigitWord ell = quasi_lazy(base);
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const FiniteWord& x : x_prime_set(base, n)) {
        REQUIRE(x.size() == n);
        CHECK(FiniteWord(x.begin(), x.end() - 1) == ell.prefix(n - 1));
        CHECK(x.back() > ell.at(n - 1));
        CHECK(x.back() <= base.max_digit(n - 1));
      }
    }
  }
}

TEST_CASE("factorization agrees with the interval oracle and the prefix condition") {
  for (const CantorBase& base : fixtures::periodic_fixtures()) {
    const std::vector<DigitWord> table = quasi_lazy_table(base);
    const std::size_t len = base.alphabet_bound() > 3 ? 4 : 6;
    for (std::size_t offset = 0; offset < base.phase_count(); ++offset) {
      std::size_t accepted = 0;
      for (const FiniteWord& u : enumerate_words(base, len, offset)) {
        const bool fact = factorization_check(base, u, offset);
        const bool interval = is_lazy_prefix(base, u, offset);
        const bool prefix = fixtures::prefix_condition(base, table, u, offset);
        CHECK_MESSAGE(fact == interval, format_base(base), " offset ", offset, " word ", format_finite(u));
        CHECK(prefix == interval);
        accepted += interval;
      }
      CHECK(accepted > 0);
    }
  }
}

TEST_CASE("grid samples are lazy prefixes") {
  for (const CantorBase& base : {fixtures::alt13(), fixtures::phi2(), fixtures::golden()}) {
    const std::set<FiniteWord> grid = fixtures::grid_lazy_prefixes(base, 5, 10);
    std::set<FiniteWord> enumerated;
    for (const FiniteWord& u : enumerate_words(base, 5)) {
      if (is_lazy_prefix(base, u)) enumerated.insert(u);
    }
    for (const FiniteWord& u : grid) {
      CHECK(factorization_check(base, u));
      CHECK(enumerated.count(u) == 1);
    }
    // The grid is fine enough to hit most cylinders.
    CHECK(grid.size() * 2 > enumerated.size());
  }
}

TEST_CASE("lazy prefix remainders") {
  const CantorBase alt = fixtures::alt13();
  const ExactReal xb = x_beta_exact(alt);
  const HalfOpenInterval all = lazy_prefix_remainders(alt, FiniteWord{});
  CHECK(all.lo == xb - ExactReal(1));
  CHECK(all.hi == xb);
  CHECK(lazy_prefix_remainders(alt, f("0 0")).empty());
  CHECK_FALSE(lazy_prefix_remainders(alt, f("1 0 2 1 2")).empty());

  // The interval bookkeeping matches actual remainders of lazy expansions.
  fixtures::Rng rng(fixtures::kSeed + 42);
  const LazyFactorOracle oracle(alt);
  for (int t = 0; t < 40; ++t) {
    const ExactReal x = xb - fixtures::random_unit(rng, 13);
    if (x == xb - ExactReal(1)) continue;
    const ExpansionTrace tr = lazy_expand(alt, x, 6);
    const HalfOpenInterval iv = oracle.remainders(tr.digits);
    const ExactReal& s = std::get<ExactReal>(tr.remainders.back());
    CHECK(iv.lo < s);
    CHECK(s <= iv.hi);
  }
  CHECK(oracle.is_factor(f("0 2")));
  CHECK_FALSE(oracle.is_factor(f("0 0")));
}
