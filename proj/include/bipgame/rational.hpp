// Copyright 2026 The bipgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIPGAME_RATIONAL_HPP
#define BIPGAME_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "bipgame/errors.hpp"

namespace bipgame {

/// Arbitrary-precision integer and rational. Every game value and payoff in
/// the library is a `Rational`; canonical form is lowest terms with a
/// positive denominator. Expression templates are off so that values can be
/// passed to deduced templates such as `ipow` without surprises.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InputError("zero denominator");
  return Rational(Integer(num), Integer(den));
}

template <class T>
T ipow(T base, unsigned exponent) {
  T result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Canonical exact form: "17/3", "10", "-1/2".
inline std::string to_exact_string(const Rational& x) {
  const Integer den = denominator_of(x);
  if (den == 1) return numerator_of(x).str();
  return numerator_of(x).str() + "/" + den.str();
}

/// Parses `p/q`, an integer, or a finite decimal literal (`0.125`, `.5`)
/// into an exact rational. Exponents and repeating decimals are rejected.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> InputError {
    return InputError("invalid rational '" + std::string(text) + "': " + why);
  };
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw fail("empty");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto strip_zeros = [](std::string_view v) {
    std::string out(v);
    out.erase(0, std::min(out.find_first_not_of('0'), out.size() - 1));
    return out;
  };
  auto all_digits = [](std::string_view v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
  };

  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::string_view p = s.substr(0, slash);
    const std::string_view q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail("expected p/q with decimal integers");
    const Integer den{strip_zeros(q)};
    if (den == 0) throw fail("zero denominator");
    value = Rational(Integer{strip_zeros(p)}, den);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail("no digits");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw fail("expected a finite decimal");
    std::string digits = std::string(whole) + std::string(frac);
    // Leading zeros would select octal parsing.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    value = Rational(Integer{digits}, ipow(Integer(10), static_cast<unsigned>(frac.size())));
  } else {
    if (!all_digits(s)) throw fail("expected an integer, p/q or finite decimal");
    value = Rational(Integer{strip_zeros(s)});
  }
  return negative ? Rational(-value) : value;
}

namespace detail {

// Round-half-even of a nonnegative rational to an integer.
inline Integer round_half_even(const Rational& x) {
  Integer q = numerator_of(x) / denominator_of(x);
  const Rational rem = x - Rational(q);
  const Rational half(Integer(1), Integer(2));
  if (rem > half || (rem == half && (q & 1) != 0)) ++q;
  return q;
}

// e such that 10^e <= x < 10^(e+1), for x > 0.
inline int decimal_exponent(const Rational& x) {
  int e = static_cast<int>(numerator_of(x).str().size()) -
          static_cast<int>(denominator_of(x).str().size());
  auto pow10 = [](int k) {
    return k >= 0 ? Rational(ipow(Integer(10), static_cast<unsigned>(k)))
                  : Rational(Integer(1), ipow(Integer(10), static_cast<unsigned>(-k)));
  };
  while (pow10(e) > x) --e;
  while (pow10(e + 1) <= x) ++e;
  return e;
}

inline std::string place_point(std::string digits, int decimals) {
  if (decimals <= 0) return digits;
  const auto width = static_cast<std::size_t>(decimals) + 1;
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return digits;
}

}  // namespace detail

/// Fixed-point rendering with `decimals` digits after the point,
/// round-half-even: to_fixed_string(3.998046875, 3) == "3.998".
inline std::string to_fixed_string(const Rational& x, int decimals) {
  const Rational magnitude = x < 0 ? Rational(-x) : x;
  const Integer scale = ipow(Integer(10), static_cast<unsigned>(std::max(decimals, 0)));
  const Integer q = detail::round_half_even(magnitude * scale);
  std::string out = detail::place_point(q.str(), decimals);
  if (x < 0 && q != 0) out.insert(0, "-");
  return out;
}

/// Decimal view with `significant` significant digits (round-half-even),
/// trailing zeros removed: 17/3 -> "5.66667", 10 -> "10".
inline std::string to_decimal_string(const Rational& x, int significant = 6) {
  if (x == 0) return "0";
  const Rational magnitude = x < 0 ? Rational(-x) : x;
  const int decimals = significant - 1 - detail::decimal_exponent(magnitude);
  std::string out;
  if (decimals >= 0) {
    out = detail::place_point(
        detail::round_half_even(magnitude * ipow(Integer(10), static_cast<unsigned>(decimals))).str(),
        decimals);
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  } else {
    const Integer unit = ipow(Integer(10), static_cast<unsigned>(-decimals));
    out = (detail::round_half_even(magnitude / unit) * unit).str();
  }
  if (x < 0) out.insert(0, "-");
  return out;
}

}  // namespace bipgame

#endif  // BIPGAME_RATIONAL_HPP
