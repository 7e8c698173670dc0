// Copyright 2026 The cegame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact rational arithmetic used for every quantity, price and payoff.
//
// Values are GMP rationals. Text I/O accepts integers ("12"), decimals
// ("-58.125") and fractions ("137/2"); decimals are converted exactly with a
// power-of-ten denominator.

#ifndef CEGAME_RATIONAL_HPP_
#define CEGAME_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "cegame/error.hpp"

namespace cegame {

using Rational = mpq_class;

// num/den in canonical form. mpq_class(num, den) alone does not reduce.
inline Rational fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline Rational positive_part(const Rational& x) {
  return sgn(x) > 0 ? x : Rational(0);
}

inline Rational min_of(const Rational& a, const Rational& b) {
  return a < b ? a : b;
}

inline Rational max_of(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

namespace internal {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline mpz_class pow10(unsigned int exponent) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

}  // namespace internal

// Parses "123", "-4.75", "+0.5", ".5" or "137/2". Throws ParseError on
// anything else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  const std::string original(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = s.substr(slash + 1);
    if (!internal::all_digits(num) || !internal::all_digits(den)) {
      throw ParseError("malformed fraction '" + original + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else {
    const auto dot = s.find('.');
    const std::string_view whole =
        dot == std::string_view::npos ? s : s.substr(0, dot);
    const std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !internal::all_digits(whole)) ||
        (!frac.empty() && !internal::all_digits(frac)) ||
        (dot != std::string_view::npos && frac.empty())) {
      throw ParseError("malformed number '" + original + "'");
    }
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    result = Rational(digits, internal::pow10(static_cast<unsigned>(frac.size())));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

// Exact text form: a terminating decimal when the denominator only has the
// prime factors 2 and 5, otherwise "num/den". parse_rational inverts it.
inline std::string to_exact_string(const Rational& x) {
  mpz_class den = x.get_den();
  unsigned twos = 0;
  unsigned fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return x.get_str();
  const unsigned places = twos > fives ? twos : fives;
  if (places == 0) return x.get_num().get_str();
  mpz_class scaled = x.get_num() * internal::pow10(places) / x.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

// Rounds half away from zero to `digits` decimals and drops trailing zeros,
// so 406 prints as "406" and 4.4725 as "4.4725".
inline std::string to_decimal_string(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  const mpz_class scale = internal::pow10(static_cast<unsigned>(digits));
  mpz_class num = x.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  mpz_class scaled = (2 * num * scale + x.get_den()) / (2 * x.get_den());
  std::string text = scaled.get_str();
  if (digits > 0) {
    const auto places = static_cast<std::size_t>(digits);
    if (text.size() <= places) text.insert(0, places - text.size() + 1, '0');
    text.insert(text.size() - places, ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (negative && text != "0") text.insert(0, "-");
  return text;
}

inline double to_double(const Rational& x) { return x.get_d(); }

}  // namespace cegame

#endif  // CEGAME_RATIONAL_HPP_
