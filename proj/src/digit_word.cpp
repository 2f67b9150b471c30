#include "cantor/digit_word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cantor {

namespace {

// Length of the primitive root of a non-empty word.
std::size_t primitive_length(const FiniteWord& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = w[i] == w[i - len];
    if (ok) return len;
  }
  return n;
}

}  // namespace

DigitWord::DigitWord(FiniteWord preperiod, FiniteWord period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (std::all_of(per_.begin(), per_.end(), [](digit_t d) { return d == 0; })) per_.clear();
  if (per_.empty()) {
    while (!pre_.empty() && pre_.back() == 0) pre_.pop_back();
    return;
  }
  per_.resize(primitive_length(per_));
  // Absorb preperiod letters that already match the cycle.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
    pre_.pop_back();
  }
}

digit_t DigitWord::at(std::size_t n) const {
  if (n < pre_.size()) return pre_[n];
  if (per_.empty()) return 0;
  return per_[(n - pre_.size()) % per_.size()];
}

FiniteWord DigitWord::prefix(std::size_t len) const {
  FiniteWord out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = at(i);
  return out;
}

std::string format_finite(std::span<const digit_t> w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

std::string format_word(const DigitWord& w) {
  if (w.is_finite()) return w.preperiod().empty() ? "(0)^w" : format_finite(w.preperiod());
  std::string s = format_finite(w.preperiod());
  if (!s.empty()) s += ' ';
  return s + "(" + format_finite(w.period()) + ")^w";
}

FiniteWord parse_finite(std::string_view text) {
  FiniteWord out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("unexpected '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    }
    unsigned long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > std::numeric_limits<digit_t>::max()) throw ParseError("digit too large");
      ++i;
    }
    out.push_back(static_cast<digit_t>(v));
  }
  return out;
}

DigitWord parse_word(std::string_view text) {
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos) return DigitWord::finite(parse_finite(text));
  const std::size_t close = text.find(')', open);
  if (close == std::string_view::npos) throw ParseError("unclosed period in '" + std::string(text) + "'");
  std::string_view tail = text.substr(close + 1);
  std::size_t k = 0;
  while (k < tail.size() && std::isspace(static_cast<unsigned char>(tail[k]))) ++k;
  tail.remove_prefix(k);
  if (tail != "^w" && tail != "^omega") throw ParseError("period must end with ')^w' in '" + std::string(text) + "'");
  FiniteWord period = parse_finite(text.substr(open + 1, close - open - 1));
  if (period.empty()) throw ParseError("empty period in '" + std::string(text) + "'");
  return DigitWord(parse_finite(text.substr(0, open)), std::move(period));
}

DigitWord shift_word(const DigitWord& w, std::size_t n) {
  const FiniteWord& pre = w.preperiod();
  if (n <= pre.size()) return DigitWord(FiniteWord(pre.begin() + static_cast<std::ptrdiff_t>(n), pre.end()), w.period());
  if (w.is_finite()) return DigitWord();
  FiniteWord per = w.period();
  const std::size_t k = (n - pre.size()) % per.size();
  std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(k), per.end());
  return DigitWord({}, std::move(per));
}

std::strong_ordering lex_compare(const DigitWord& u, const DigitWord& v) {
  const std::size_t window = std::max(u.preperiod().size(), v.preperiod().size()) +
                             std::lcm(u.cycle_length(), v.cycle_length());
  for (std::size_t n = 0; n < window; ++n) {
    if (auto c = u.at(n) <=> v.at(n); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_alphabet_valid(const CantorBase& base, std::span<const digit_t> w, std::size_t offset) {
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (w[n] > base.max_digit(offset + n)) return false;
  }
  return true;
}

bool is_alphabet_valid(const CantorBase& base, const DigitWord& w) {
  if (base.is_thue_morse()) {
    // Both letters recur in every tail, so the periodic part must fit the
    // smaller alphabet.
    const digit_t small = std::min(base.max_digit(0), base.max_digit(1));
    if (!is_alphabet_valid(base, w.preperiod())) return false;
    return std::all_of(w.period().begin(), w.period().end(), [&](digit_t d) { return d <= small; });
  }
  const std::size_t window = std::max(base.preperiod_length(), w.preperiod().size()) +
                             std::lcm(base.period_length(), w.cycle_length());
  for (std::size_t n = 0; n < window; ++n) {
    if (w.at(n) > base.max_digit(n)) return false;
  }
  return true;
}

}  // namespace cantor
