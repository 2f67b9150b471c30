#pragma once

// Finitely described Cantor real bases and the value x_beta of the
// all-maximal-digit word.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/exactnum.hpp"

namespace cantor {

using digit_t = std::uint32_t;

// A base sequence that is eventually periodic: preperiod then period
// repeated forever. An empty preperiod makes it an alternate base whose
// length is the period length.
struct EventuallyPeriodic {
  std::vector<ExactReal> preperiod;
  std::vector<ExactReal> period;
  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

// Thue-Morse sequence over {alpha, beta}, read from index `offset`:
// entry n is alpha when popcount(n + offset) is even.
struct ThueMorse {
  ExactReal alpha;
  ExactReal beta;
  std::uint64_t offset = 0;
  friend bool operator==(const ThueMorse&, const ThueMorse&) = default;
};

class CantorBase {
 public:
  // All entries must exceed 1 and live in one field (Q or a single Q(sqrt d)).
  static CantorBase eventually_periodic(std::vector<ExactReal> preperiod,
                                        std::vector<ExactReal> period);
  static CantorBase alternate(std::vector<ExactReal> period) {
    return eventually_periodic({}, std::move(period));
  }
  static CantorBase thue_morse(ExactReal alpha, ExactReal beta, std::uint64_t offset = 0);

  bool is_eventually_periodic() const { return std::holds_alternative<EventuallyPeriodic>(repr_); }
  bool is_thue_morse() const { return std::holds_alternative<ThueMorse>(repr_); }
  bool is_alternate() const { return is_eventually_periodic() && preperiod_length() == 0; }

  const EventuallyPeriodic& periodic_form() const;
  const ThueMorse& thue_morse_form() const;

  // Eventually periodic bases only.
  std::size_t preperiod_length() const;
  std::size_t period_length() const;
  // Number of distinct positions: preperiod + period.
  std::size_t phase_count() const { return preperiod_length() + period_length(); }
  // Position of index n within preperiod + one period.
  std::size_t phase(std::size_t n) const;

  const ExactReal& at(std::size_t n) const;
  // ceil(beta_n) - 1, cached at construction.
  digit_t max_digit(std::size_t n) const;
  // Largest digit anywhere in the base (the alphabet A_beta is [0, this]).
  digit_t alphabet_bound() const;
  // Smallest base entry.
  const ExactReal& min_entry() const;
  // Radicand of the common field (0 for rational bases).
  long field() const { return field_; }

  friend bool operator==(const CantorBase&, const CantorBase&) = default;

 private:
  std::variant<EventuallyPeriodic, ThueMorse> repr_;
  std::vector<digit_t> maxima_;  // per phase, or {alpha, beta} for Thue-Morse
  long field_ = 0;

  void validate_and_cache(const std::vector<const ExactReal*>& entries);
};

const ExactReal& base_at(const CantorBase& base, std::size_t n);
CantorBase shift_base(const CantorBase& base, std::size_t n);
digit_t alphabet_max(const CantorBase& base, std::size_t n);

// Exact x_beta for an eventually periodic base, from the recursion
// x(n) = (x(n+1) + ceil(beta_n) - 1) / beta_n closed over one period.
ExactReal x_beta_exact(const CantorBase& base);
// x_{beta^(n)} for every phase n of an eventually periodic base.
std::vector<ExactReal> x_beta_profile(const CantorBase& base);

// Enclosure of x_beta from `terms` exact series terms plus a geometric tail
// bound.
RealInterval x_beta_series(const CantorBase& base, std::size_t terms);

// Enclosure of x_{beta^(n)} with width at most 2^-bits. Works for every base
// family; exact bases give a point or a tight bracket of the exact value.
RealInterval x_beta_enclosure(const CantorBase& base, std::size_t n, unsigned bits);

// x_{beta^(n)} as a refinable real.
ComputableReal x_beta_computable(const CantorBase& base, std::size_t n = 0);

struct ThueMorseXBeta {
  RealInterval x_beta;
  // Enclosure of the Thue-Morse product f(1/(alpha*beta)).
  RealInterval product;
};

// x_beta of the Thue-Morse base on {alpha, beta} through the closed form in
// terms of x_1, y_1 and f(z) = prod_{k>=1} (1 - z^(2^(k-1))), z = 1/(alpha*beta).
ThueMorseXBeta x_beta_thue_morse(const ExactReal& alpha, const ExactReal& beta,
                                 const Rational& tolerance);

// Enclosure of prod_{k>=1} (1 - z^(2^(k-1))) for z in (0, 1), width <= tolerance.
RealInterval thue_morse_product(const RealInterval& z, const Rational& tolerance);

// Text forms:
//   alt: b0 , b1 , ...
//   evp: pre=[a, b] per=[c, d]
//   tm: alpha=a beta=b
CantorBase parse_base(std::string_view text);
std::string format_base(const CantorBase& base);

}  // namespace cantor
