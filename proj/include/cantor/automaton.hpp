#pragma once

// Automata recognizing the factors of the greedy and lazy shifts of an
// alternate base whose quasi-expansions are ultimately periodic.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/digit_word.hpp"
#include "cantor/expansion.hpp"

namespace cantor {

struct State {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend auto operator<=>(const State&, const State&) = default;
};

struct Transition {
  State from;
  digit_t digit = 0;
  State to;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

enum class AutomatonKind { Greedy, Lazy };

// Row i holds the digits of the quasi-expansion of beta^(i) unrolled to
// m_i + n_i letters, where n_i is a multiple of p.
struct DigitRow {
  std::size_t m = 0;
  std::size_t n = 0;
  FiniteWord digits;
};

class ShiftAutomaton {
 public:
  ShiftAutomaton(AutomatonKind kind, std::size_t period, std::vector<DigitRow> rows,
                 std::vector<Transition> transitions);

  AutomatonKind kind() const { return kind_; }
  std::size_t period() const { return period_; }
  const std::vector<DigitRow>& rows() const { return rows_; }
  // Sorted.
  const std::vector<State>& states() const { return states_; }
  std::vector<State> initial_states() const;
  // Sorted by (from, digit).
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::optional<State> step(const State& q, digit_t d) const;
  bool accepts_from(const State& q, std::span<const digit_t> w) const;

 private:
  AutomatonKind kind_;
  std::size_t period_;
  std::vector<DigitRow> rows_;
  std::vector<State> states_;
  std::vector<Transition> transitions_;
  std::map<std::pair<State, digit_t>, State> delta_;
};

// Lazy automaton A'_beta. Throws PeriodNotFound naming the failed shift.
ShiftAutomaton build_lazy_automaton(const CantorBase& base, std::size_t cap = kDefaultMaxSteps);
// Greedy automaton A_beta built from the quasi-greedy words.
ShiftAutomaton build_greedy_automaton(const CantorBase& base, std::size_t cap = kDefaultMaxSteps);

// Every greedy transition on a from q_{i,j,k} matches a lazy transition on
// ceil(beta_j) - 1 - a between the same states, and conversely. Throws
// ShapeMismatch when the two automata have different rows shapes.
bool flip_transition_check(const ShiftAutomaton& greedy, const ShiftAutomaton& lazy, const CantorBase& base);

// Some initial state has a run on w.
bool accepts_factor(const ShiftAutomaton& a, std::span<const digit_t> w);

// Moore partition refinement over the accessible states. Not applied by the
// builders; state triples of the result are class representatives.
ShiftAutomaton minimize(const ShiftAutomaton& a);

std::string export_dot(const ShiftAutomaton& a);
// One `i j k digit -> i' j' k'` line per transition, sorted.
std::string export_table(const ShiftAutomaton& a);
std::vector<Transition> parse_table(std::string_view text);

enum class SoficVerdict { Sofic, NotDecidedWithinCap };

struct SoficityReport {
  SoficVerdict verdict = SoficVerdict::NotDecidedWithinCap;
  std::optional<ShiftAutomaton> automaton;
  // Shifts i whose quasi-lazy period search hit the cap.
  std::vector<std::size_t> failed_shifts;
  std::size_t cap = 0;
  // Words checked against the brute-force factor oracle, and disagreements.
  std::size_t validated_words = 0;
  std::size_t mismatches = 0;
};

SoficityReport decide_soficity(const CantorBase& base, std::size_t cap, std::size_t validation_len);

}  // namespace cantor
