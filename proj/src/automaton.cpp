#include "cantor/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "cantor/factor_oracle.hpp"
#include "cantor/parallel.hpp"

namespace cantor {

namespace {

std::vector<DigitRow> make_rows(const std::vector<DigitWord>& words, std::size_t p) {
  std::vector<DigitRow> rows;
  for (const DigitWord& w : words) {
    DigitRow r;
    r.m = w.preperiod().size();
    r.n = std::lcm(w.cycle_length(), p);
    r.digits = w.prefix(r.m + r.n);
    rows.push_back(std::move(r));
  }
  return rows;
}

ShiftAutomaton build(AutomatonKind kind, const CantorBase& base, const std::vector<DigitWord>& words) {
  const std::size_t p = base.period_length();
  std::vector<DigitRow> rows = make_rows(words, p);
  std::vector<Transition> edges;
  std::set<State> seen;
  std::deque<State> todo;
  for (std::size_t i = 0; i < p; ++i) {
    seen.insert({i, i, 0});
    todo.push_back({i, i, 0});
  }
  const auto visit = [&](const State& q) {
    if (seen.insert(q).second) todo.push_back(q);
  };
  while (!todo.empty()) {
    const State q = todo.front();
    todo.pop_front();
    if ((q.i + q.k) % p != q.j) throw std::logic_error("inaccessible state generated");
    const DigitRow& row = rows[q.i];
    const digit_t a = row.digits[q.k];
    const std::size_t next_k = q.k + 1 == row.m + row.n ? row.m : q.k + 1;
    const std::size_t j1 = (q.j + 1) % p;
    const State spine{q.i, j1, next_k};
    const State reset{j1, j1, 0};
    edges.push_back({q, a, spine});
    visit(spine);
    if (kind == AutomatonKind::Lazy) {
      for (digit_t s = a + 1; s <= base.max_digit(q.j); ++s) edges.push_back({q, s, reset});
    } else {
      for (digit_t s = 0; s < a; ++s) edges.push_back({q, s, reset});
    }
  }
  return ShiftAutomaton(kind, p, std::move(rows), std::move(edges));
}

void require_alternate(const CantorBase& base) {
  if (!base.is_alternate()) throw UnsupportedBase("shift automata are built for alternate bases");
}

std::string node_id(const State& q) {
  return "q_" + std::to_string(q.i) + "_" + std::to_string(q.j) + "_" + std::to_string(q.k);
}

}  // namespace

ShiftAutomaton::ShiftAutomaton(AutomatonKind kind, std::size_t period, std::vector<DigitRow> rows,
                               std::vector<Transition> transitions)
    : kind_(kind), period_(period), rows_(std::move(rows)), transitions_(std::move(transitions)) {
  std::sort(transitions_.begin(), transitions_.end());
  std::set<State> states;
  for (std::size_t i = 0; i < period_; ++i) states.insert({i, i, 0});
  for (const Transition& t : transitions_) {
    states.insert(t.from);
    states.insert(t.to);
    auto [it, fresh] = delta_.emplace(std::make_pair(t.from, t.digit), t.to);
    if (!fresh && !(it->second == t.to)) throw std::logic_error("automaton is not deterministic");
  }
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  states_.assign(states.begin(), states.end());
}

std::vector<State> ShiftAutomaton::initial_states() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < period_; ++i) out.push_back({i, i, 0});
  return out;
}

std::optional<State> ShiftAutomaton::step(const State& q, digit_t d) const {
  auto it = delta_.find({q, d});
  if (it == delta_.end()) return std::nullopt;
  return it->second;
}

bool ShiftAutomaton::accepts_from(const State& q, std::span<const digit_t> w) const {
  State cur = q;
  for (digit_t d : w) {
    auto next = step(cur, d);
    if (!next) return false;
    cur = *next;
  }
  return true;
}

ShiftAutomaton build_lazy_automaton(const CantorBase& base, std::size_t cap) {
  require_alternate(base);
  return build(AutomatonKind::Lazy, base, quasi_lazy_table(base, cap));
}

ShiftAutomaton build_greedy_automaton(const CantorBase& base, std::size_t cap) {
  require_alternate(base);
  return build(AutomatonKind::Greedy, base, quasi_greedy_table(base, cap));
}

bool flip_transition_check(const ShiftAutomaton& greedy, const ShiftAutomaton& lazy, const CantorBase& base) {
  if (greedy.period() != lazy.period() || greedy.rows().size() != lazy.rows().size()) {
    throw ShapeMismatch("automata have different periods");
  }
  for (std::size_t i = 0; i < greedy.rows().size(); ++i) {
    if (greedy.rows()[i].m != lazy.rows()[i].m || greedy.rows()[i].n != lazy.rows()[i].n) {
      throw ShapeMismatch("row " + std::to_string(i) + " has different (m, n)");
    }
  }
  const auto flipped = [&](const Transition& t) -> std::optional<Transition> {
    const digit_t m = base.max_digit(t.from.j);
    if (t.digit > m) return std::nullopt;
    return Transition{t.from, m - t.digit, t.to};
  };
  const auto covered = [&](const ShiftAutomaton& a, const ShiftAutomaton& b) {
    for (const Transition& t : a.transitions()) {
      auto f = flipped(t);
      if (!f) return false;
      auto target = b.step(f->from, f->digit);
      if (!target || !(*target == f->to)) return false;
    }
    return true;
  };
  return covered(greedy, lazy) && covered(lazy, greedy);
}

bool accepts_factor(const ShiftAutomaton& a, std::span<const digit_t> w) {
  for (const State& q : a.initial_states()) {
    if (a.accepts_from(q, w)) return true;
  }
  return false;
}

ShiftAutomaton minimize(const ShiftAutomaton& a) {
  const std::vector<State>& states = a.states();
  digit_t top = 0;
  for (const Transition& t : a.transitions()) top = std::max(top, t.digit);
  std::map<State, std::size_t> index;
  for (std::size_t s = 0; s < states.size(); ++s) index[states[s]] = s;

  // Every state is final; a missing transition goes to an implicit sink.
  std::vector<long> cls(states.size(), 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::vector<long>, long> signatures;
    std::vector<long> next(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      std::vector<long> sig{cls[s]};
      for (digit_t d = 0; d <= top; ++d) {
        auto to = a.step(states[s], d);
        sig.push_back(to ? cls[index[*to]] : -1);
      }
      auto [it, fresh] = signatures.emplace(std::move(sig), static_cast<long>(signatures.size()));
      next[s] = it->second;
    }
    cls = std::move(next);
    if (signatures.size() == classes) break;
    classes = signatures.size();
  }
  // Representative: an initial state when the class has one, else its
  // smallest state. Initial states merged into another class keep their own
  // outgoing edges so that initial_states() stays meaningful.
  std::map<long, State> rep;
  const std::vector<State> initial = a.initial_states();
  for (const State& q : initial) rep.emplace(cls[index[q]], q);
  for (std::size_t s = 0; s < states.size(); ++s) rep.emplace(cls[s], states[s]);
  std::vector<Transition> edges;
  for (const Transition& t : a.transitions()) {
    const bool is_rep = rep[cls[index[t.from]]] == t.from;
    const bool is_initial = std::find(initial.begin(), initial.end(), t.from) != initial.end();
    if (!is_rep && !is_initial) continue;
    edges.push_back({t.from, t.digit, rep[cls[index[t.to]]]});
  }
  return ShiftAutomaton(a.kind(), a.period(), a.rows(), std::move(edges));
}

std::string export_dot(const ShiftAutomaton& a) {
  std::ostringstream os;
  os << "digraph " << (a.kind() == AutomatonKind::Lazy ? "lazy" : "greedy") << " {\n";
  os << "  rankdir=LR;\n  node [shape=circle];\n";
  for (const State& q : a.states()) os << "  " << node_id(q) << ";\n";
  for (const State& q : a.initial_states()) {
    os << "  init_" << node_id(q) << " [shape=point];\n";
    os << "  init_" << node_id(q) << " -> " << node_id(q) << ";\n";
  }
  std::map<std::pair<State, State>, std::vector<digit_t>> grouped;
  for (const Transition& t : a.transitions()) grouped[{t.from, t.to}].push_back(t.digit);
  for (const auto& [edge, digits] : grouped) {
    std::string label;
    for (digit_t d : digits) label += (label.empty() ? "" : ",") + std::to_string(d);
    os << "  " << node_id(edge.first) << " -> " << node_id(edge.second) << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_table(const ShiftAutomaton& a) {
  std::ostringstream os;
  for (const Transition& t : a.transitions()) {
    os << t.from.i << ' ' << t.from.j << ' ' << t.from.k << ' ' << t.digit << " -> " << t.to.i << ' ' << t.to.j
       << ' ' << t.to.k << '\n';
  }
  return os.str();
}

std::vector<Transition> parse_table(std::string_view text) {
  std::vector<Transition> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    Transition t;
    std::string arrow;
    if (!(ls >> t.from.i >> t.from.j >> t.from.k >> t.digit >> arrow >> t.to.i >> t.to.j >> t.to.k) ||
        arrow != "->") {
      throw ParseError("bad transition line '" + line + "'");
    }
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SoficityReport decide_soficity(const CantorBase& base, std::size_t cap, std::size_t validation_len) {
  require_alternate(base);
  SoficityReport report;
  report.cap = cap;
  for (std::size_t i = 0; i < base.period_length(); ++i) {
    try {
      quasi_greedy_one(shift_base(base, i), cap);
    } catch (const PeriodNotFound&) {
      report.failed_shifts.push_back(i);
    }
  }
  if (!report.failed_shifts.empty()) return report;

  ShiftAutomaton a = build_lazy_automaton(base, cap);
  std::vector<FiniteWord> words;
  for (std::size_t len = 0; len <= validation_len; ++len) {
    for (auto& w : enumerate_all_words(base, len)) words.push_back(std::move(w));
  }
  const std::vector<char> oracle = parallel::lazy_factor_flags(base, words);
  const std::vector<char> accepted = parallel::accept_flags(a, words);
  report.validated_words = words.size();
  for (std::size_t n = 0; n < words.size(); ++n) report.mismatches += oracle[n] != accepted[n];
  report.verdict = SoficVerdict::Sofic;
  report.automaton = std::move(a);
  return report;
}

}  // namespace cantor
