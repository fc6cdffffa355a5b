#ifndef RELROLE_DECIMAL_HPP_
#define RELROLE_DECIMAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace relrole {

  // Exact rational used for every weighted entry. Densities such as 2/3 are
  // not finite decimals, so binary floating point is never used for values
  // that take part in equality tests.
  using Rational = boost::multiprecision::cpp_rational;
  using BigInt   = boost::multiprecision::cpp_int;

  enum class RoundingRule { half_even, half_up };

  // Accepts "1", "0.25", ".5", "+0.5", "2/3" (optionally surrounded by
  // blanks). Returns nullopt on anything else, including negative values.
  std::optional<Rational> parse_rational(std::string_view text);

  // Exact text: a terminating decimal when the reduced denominator is
  // 2^a 5^b ("0.5", "0.0475", "1"), otherwise "p/q".
  std::string to_exact_string(Rational const& x);

  // x rounded to `digits` places under `rule`, printed with exactly
  // `digits` fractional digits.
  std::string to_fixed_string(Rational const& x,
                              unsigned          digits,
                              RoundingRule      rule = RoundingRule::half_even);

  // Round a nonnegative rational to a multiple of 10^-digits.
  Rational round_decimal(Rational const& x,
                         unsigned        digits,
                         RoundingRule    rule = RoundingRule::half_even);

  std::size_t hash_value(Rational const& x);

  Rational pow10(unsigned digits);

}  // namespace relrole

#endif  // RELROLE_DECIMAL_HPP_
