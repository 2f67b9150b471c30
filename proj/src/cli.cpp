#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "cantor/admissibility.hpp"
#include "cantor/automaton.hpp"
#include "cantor/bases.hpp"
#include "cantor/expansion.hpp"
#include "cantor/factor_oracle.hpp"
#include "cantor/parallel.hpp"

namespace cantor::cli {

namespace {

struct Options {
  std::string base;
  std::string x;
  std::string word;
  bool greedy = false;
  bool lazy = false;
  bool exact = false;
  bool tm_formula = false;
  bool dot = false;
  bool table = false;
  bool minimize = false;
  bool full_word = false;
  bool remainders = false;
  std::size_t series = 0;
  std::string tol = "1/100000";
  std::size_t len = 16;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t shift = 0;
  std::size_t n = 0;
  std::optional<std::size_t> h;
  std::size_t bound = 8;
  std::size_t validate = 6;
  int approx = -1;
};

std::string render(const ExactReal& v, int approx) {
  if (approx < 0) return format_real(v);
  return format_decimal(enclose(v, static_cast<unsigned>(approx) * 4 + 16).midpoint(), static_cast<unsigned>(approx));
}

std::string render(const RealInterval& iv, int approx) {
  if (approx >= 0) return format_interval(iv.rounded_outward(static_cast<unsigned>(approx) * 4 + 16),
                                          static_cast<unsigned>(approx));
  return "[" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]";
}

std::string render(const Remainder& r, int approx) {
  return std::visit([&](const auto& v) { return render(v, approx); }, r);
}

// `x`, or `xbeta` / `xbeta-c` for x_beta - c.
ComputableReal parse_point(const CantorBase& base, const std::string& text) {
  std::string_view t = text;
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  if (t.rfind("xbeta", 0) != 0) return ComputableReal(parse_real(t));
  t.remove_prefix(5);
  while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
  ExactReal c;
  if (!t.empty()) {
    if (t.front() != '-') throw ParseError("expected 'xbeta-<value>', got '" + text + "'");
    t.remove_prefix(1);
    c = parse_real(t);
  }
  if (base.is_eventually_periodic()) return ComputableReal(x_beta_exact(base) - c);
  const ComputableReal xb = x_beta_computable(base, 0);
  return ComputableReal([xb, c](unsigned level) {
    return xb.enclosure(level) - enclose(c, ComputableReal::bits_for_level(level) + 2);
  });
}

ExactReal exact_point(const CantorBase& base, const std::string& text) {
  ComputableReal x = parse_point(base, text);
  if (!x.exact()) throw UnsupportedBase("this command needs an exact x");
  return *x.exact();
}

int cmd_xbeta(const Options& o, std::ostream& out) {
  const CantorBase base = shift_base(parse_base(o.base), o.shift);
  if (o.tm_formula) {
    const auto& tm = base.thue_morse_form();
    if (tm.offset != 0) throw UnsupportedBase("the product formula covers the unshifted Thue-Morse base");
    const ThueMorseXBeta r = x_beta_thue_morse(tm.alpha, tm.beta, parse_real(o.tol).rational_part());
    const int digits = o.approx >= 0 ? o.approx : 10;
    out << "x_beta " << render(r.x_beta, digits) << "\n";
    out << "product " << render(r.product, digits) << "\n";
    return kOk;
  }
  if (o.series > 0) {
    out << render(x_beta_series(base, o.series), o.approx) << "\n";
    return kOk;
  }
  if (base.is_thue_morse()) {
    if (o.exact) throw UnsupportedBase("x_beta of a Thue-Morse base has no exact form here; use --series or --tm-formula");
    const int digits = o.approx >= 0 ? o.approx : 10;
    out << render(x_beta_enclosure(base, 0, static_cast<unsigned>(digits) * 4 + 16), digits) << "\n";
    return kOk;
  }
  out << render(x_beta_exact(base), o.approx) << "\n";
  return kOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  if (o.greedy == o.lazy) throw ParseError("expand needs exactly one of --greedy, --lazy");
  const CantorBase base = parse_base(o.base);
  if (o.full_word) {
    const ExactReal x = exact_point(base, o.x);
    const DigitWord w = o.greedy ? greedy_word(base, x, o.max_steps) : lazy_word(base, x, o.max_steps);
    out << format_word(w) << "\n";
    return kOk;
  }
  const ExpansionTrace t =
      o.greedy ? greedy_expand(base, exact_point(base, o.x), o.len) : lazy_expand(base, parse_point(base, o.x), o.len);
  out << format_finite(t.digits) << "\n";
  if (o.remainders) {
    for (std::size_t n = 0; n < t.remainders.size(); ++n) out << n << " " << render(t.remainders[n], o.approx) << "\n";
  }
  return kOk;
}

int cmd_quasi(const Options& o, std::ostream& out) {
  if (o.greedy == o.lazy) throw ParseError("quasi needs exactly one of --greedy, --lazy");
  const CantorBase base = shift_base(parse_base(o.base), o.shift);
  const DigitWord w = o.greedy ? quasi_greedy_one(base, o.max_steps) : quasi_lazy(base, o.max_steps);
  out << format_word(w) << "\n";
  return kOk;
}

int cmd_flip(const Options& o, std::ostream& out) {
  out << format_word(theta_flip(parse_base(o.base), parse_word(o.word))) << "\n";
  return kOk;
}

int cmd_value(const Options& o, std::ostream& out) {
  const CantorBase base = parse_base(o.base);
  const DigitWord w = parse_word(o.word);
  if (base.is_thue_morse()) {
    const int digits = o.approx >= 0 ? o.approx : 10;
    out << render(value_enclosure(base, w, static_cast<std::size_t>(digits) * 8 + 64), digits) << "\n";
    return kOk;
  }
  out << render(value_of(base, w), o.approx) << "\n";
  return kOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
  const AdmissibilityVerdict v = is_lazy_admissible(parse_base(o.base), parse_word(o.word), o.max_steps);
  out << format_verdict(v) << "\n";
  return v.verdict == Verdict::Inconclusive ? kUndecided : kOk;
}

int cmd_xprime(const Options& o, std::ostream& out) {
  const CantorBase base = parse_base(o.base);
  const std::vector<FiniteWord> words =
      o.h ? y_prime_set(base, *o.h, o.bound, o.max_steps) : x_prime_set(base, o.n, o.max_steps);
  for (const auto& w : words) out << format_finite(w) << "\n";
  return kOk;
}

int cmd_automaton(const Options& o, std::ostream& out) {
  if (o.greedy == o.lazy) throw ParseError("automaton needs exactly one of --greedy, --lazy");
  const CantorBase base = parse_base(o.base);
  ShiftAutomaton a = o.lazy ? build_lazy_automaton(base, o.max_steps) : build_greedy_automaton(base, o.max_steps);
  if (o.minimize) a = minimize(a);
  if (o.table) out << export_table(a);
  else out << export_dot(a);
  return kOk;
}

int cmd_sofic(const Options& o, std::ostream& out) {
  const SoficityReport r = decide_soficity(parse_base(o.base), o.max_steps, o.validate);
  if (r.verdict == SoficVerdict::NotDecidedWithinCap) {
    out << "not-decided-within-cap " << r.cap << " shifts";
    for (std::size_t i : r.failed_shifts) out << " " << i;
    out << "\n";
    return kUndecided;
  }
  out << "sofic states " << r.automaton->states().size() << " validated " << r.validated_words << " mismatches "
      << r.mismatches << "\n";
  return r.mismatches == 0 ? kOk : kCheckFailed;
}

// Random exact x in [0, 1) of the form frac(u + v sqrt(13)).
std::vector<ExactReal> sample_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 97);
  std::vector<ExactReal> out;
  while (out.size() < count) {
    ExactReal v = ExactReal::quadratic(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 13);
    v -= ExactReal(Rational(floor_exact(v)));
    out.push_back(v);
  }
  return out;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const CantorBase alt13 = parse_base("alt: (1+sqrt(13))/2, (5+sqrt(13))/6");
  const CantorBase phi2 = parse_base("alt: (3+sqrt(5))/2, 3+sqrt(5)");
  const std::size_t len = std::min<std::size_t>(o.len, 7);
  int failures = 0;
  const auto report = [&](const std::string& name, std::size_t checked, std::size_t bad) {
    out << (bad == 0 ? "PASS " : "FAIL ") << name << " checked=" << checked << " mismatches=" << bad << "\n";
    failures += bad != 0;
  };

  {
    const LazyFactorOracle oracle(alt13);
    std::size_t checked = 0, bad = 0;
    for (std::size_t l = 0; l <= len; ++l) {
      for (const auto& w : enumerate_words(alt13, l)) {
        ++checked;
        bad += factorization_check(alt13, w) != oracle.is_prefix(w);
      }
    }
    report("prefix-factorization-vs-oracle", checked, bad);
  }
  for (const CantorBase* b : {&alt13, &phi2}) {
    const ShiftAutomaton a = build_lazy_automaton(*b);
    std::vector<FiniteWord> words;
    for (std::size_t l = 0; l <= len; ++l) {
      for (auto& w : enumerate_all_words(*b, l)) words.push_back(std::move(w));
    }
    const auto oracle = parallel::lazy_factor_flags(*b, words);
    const auto accepted = parallel::accept_flags(a, words);
    std::size_t bad = 0;
    for (std::size_t n = 0; n < words.size(); ++n) bad += oracle[n] != accepted[n];
    report("automaton-vs-oracle " + format_base(*b), words.size(), bad);
  }
  {
    const ExactReal xb = x_beta_exact(alt13);
    std::size_t bad = 0;
    const std::vector<ExactReal> xs = sample_points(50, 20240501);
    for (const ExactReal& x : xs) {
      const FiniteWord g = greedy_expand(alt13, x, 32).digits;
      bad += theta_flip(alt13, g) != lazy_expand(alt13, xb - x, 32).digits;
    }
    report("flip-correspondence", xs.size(), bad);
  }
  {
    const std::vector<ExactReal> xs = sample_points(64, 7);
    std::vector<ExactReal> lazy_xs;
    const ExactReal xb = x_beta_exact(alt13);
    for (const auto& x : xs) lazy_xs.push_back(xb - x);
    std::size_t bad = serial::lazy_batch(alt13, lazy_xs, 24) != parallel::lazy_batch(alt13, lazy_xs, 24);
    bad += serial::greedy_batch(alt13, xs, 24) != parallel::greedy_batch(alt13, xs, 24);
    report("serial-vs-openmp threads=" + std::to_string(parallel::max_threads()), 2, bad);
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expansions, admissibility and shift automata in Cantor real bases"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  const auto add_base = [&](CLI::App* c) { c->add_option("--base", o.base, "base spec (alt:, evp:, tm:)")->required(); };
  const auto add_steps = [&](CLI::App* c) {
    c->add_option("--max-steps,--cap", o.max_steps, "period search step cap");
  };
  const auto add_approx = [&](CLI::App* c) {
    c->add_option("--approx", o.approx, "print k decimal digits from a certified enclosure");
  };

  auto* xbeta = app.add_subcommand("xbeta", "x_beta of a base");
  add_base(xbeta);
  add_approx(xbeta);
  xbeta->add_flag("--exact", o.exact, "exact value (eventually periodic bases)");
  xbeta->add_option("--series", o.series, "series enclosure with N terms");
  xbeta->add_flag("--tm-formula", o.tm_formula, "Thue-Morse product formula");
  xbeta->add_option("--tol", o.tol, "tolerance for --tm-formula");
  xbeta->add_option("--shift", o.shift, "use the shifted base beta^(n)");
  xbeta->callback([&] { action = [&] { return cmd_xbeta(o, out); }; });

  auto* expand = app.add_subcommand("expand", "greedy or lazy digits of x");
  add_base(expand);
  add_approx(expand);
  add_steps(expand);
  expand->add_flag("--greedy", o.greedy);
  expand->add_flag("--lazy", o.lazy);
  expand->add_option("--x", o.x, "exact value, or xbeta-<value>")->required();
  expand->add_option("--len", o.len, "number of digits");
  expand->add_flag("--word", o.full_word, "whole expansion as an ultimately periodic word");
  expand->add_flag("--remainders", o.remainders, "also print the remainder trace");
  expand->callback([&] { action = [&] { return cmd_expand(o, out); }; });

  auto* quasi = app.add_subcommand("quasi", "quasi-greedy expansion of 1 or quasi-lazy expansion of x_beta - 1");
  add_base(quasi);
  add_steps(quasi);
  quasi->add_flag("--greedy", o.greedy);
  quasi->add_flag("--lazy", o.lazy);
  quasi->add_option("--shift", o.shift, "use the shifted base beta^(n)");
  quasi->callback([&] { action = [&] { return cmd_quasi(o, out); }; });

  auto* flip = app.add_subcommand("flip", "digit complement of a word");
  add_base(flip);
  flip->add_option("--word", o.word)->required();
  flip->callback([&] { action = [&] { return cmd_flip(o, out); }; });

  auto* value = app.add_subcommand("value", "value of a digit word");
  add_base(value);
  add_approx(value);
  value->add_option("--word", o.word)->required();
  value->callback([&] { action = [&] { return cmd_value(o, out); }; });

  auto* admissible = app.add_subcommand("admissible", "lazy admissibility of an ultimately periodic word");
  add_base(admissible);
  add_steps(admissible);
  admissible->add_option("--word", o.word)->required();
  admissible->callback([&] { action = [&] { return cmd_admissible(o, out); }; });

  auto* xprime = app.add_subcommand("xprime", "X' (with --n) or Y' (with --residue) prefix sets");
  add_base(xprime);
  add_steps(xprime);
  xprime->add_option("--n", o.n, "X' index");
  xprime->add_option("--residue", o.h, "Y' residue h");
  xprime->add_option("--bound", o.bound, "Y' length bound");
  xprime->callback([&] { action = [&] { return cmd_xprime(o, out); }; });

  auto* automaton = app.add_subcommand("automaton", "greedy or lazy shift automaton");
  add_base(automaton);
  add_steps(automaton);
  automaton->add_flag("--greedy", o.greedy);
  automaton->add_flag("--lazy", o.lazy);
  automaton->add_flag("--dot", o.dot, "DOT output (default)");
  automaton->add_flag("--table", o.table, "transition table output");
  automaton->add_flag("--minimize", o.minimize, "merge equivalent states");
  automaton->callback([&] { action = [&] { return cmd_automaton(o, out); }; });

  auto* sofic = app.add_subcommand("sofic", "decide soficity of the lazy shift");
  add_base(sofic);
  add_steps(sofic);
  sofic->add_option("--validate", o.validate, "oracle validation word length");
  sofic->callback([&] { action = [&] { return cmd_sofic(o, out); }; });

  auto* selftest = app.add_subcommand("selftest", "brute-force oracle comparisons on built-in bases");
  selftest->add_option("--len", o.len, "word length for oracle enumeration (at most 7)")->default_val(6);
  selftest->callback([&] { action = [&] { return cmd_selftest(o, out); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const Undecided& e) {
    err << "undecided: " << e.what() << "\n";
    return kUndecided;
  }
}

}  // namespace cantor::cli
