#include "relrole/decimal.hpp"

#include <cctype>
#include <functional>
#include <iterator>
#include <vector>

namespace relrole {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    bool all_digits(std::string_view s) {
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }

    BigInt parse_int(std::string_view s) {
      BigInt v = 0;
      for (char c : s) {
        v *= 10;
        v += c - '0';
      }
      return v;
    }

    BigInt pow10_int(unsigned digits) {
      BigInt v = 1;
      for (unsigned i = 0; i < digits; ++i) {
        v *= 10;
      }
      return v;
    }

    // Integer part of x * 10^digits after rounding.
    BigInt scaled_round(Rational const& x, unsigned digits, RoundingRule rule) {
      Rational y     = x * Rational(pow10_int(digits));
      BigInt   num   = boost::multiprecision::numerator(y);
      BigInt   den   = boost::multiprecision::denominator(y);
      BigInt   q     = num / den;
      BigInt   rem2  = 2 * (num % den);
      if (rem2 > den) {
        ++q;
      } else if (rem2 == den) {
        if (rule == RoundingRule::half_up || (q % 2) != 0) {
          ++q;
        }
      }
      return q;
    }

    std::string with_point(BigInt const& scaled, unsigned digits) {
      std::string s = scaled.str();
      if (digits == 0) {
        return s;
      }
      if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
      }
      s.insert(s.size() - digits, 1, '.');
      return s;
    }
  }  // namespace

  std::optional<Rational> parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return std::nullopt;
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      auto p = trim(s.substr(0, slash));
      auto q = trim(s.substr(slash + 1));
      if (p.empty() || q.empty() || !all_digits(p) || !all_digits(q)) {
        return std::nullopt;
      }
      BigInt den = parse_int(q);
      if (den == 0) {
        return std::nullopt;
      }
      return Rational(parse_int(p), den);
    }
    auto             dot  = s.find('.');
    std::string_view ipart = s.substr(0, dot);
    std::string_view fpart
        = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if ((ipart.empty() && fpart.empty()) || !all_digits(ipart)
        || !all_digits(fpart)) {
      return std::nullopt;
    }
    std::string digits(ipart);
    digits.append(fpart);
    return Rational(parse_int(digits), pow10_int(fpart.size()));
  }

  std::string to_exact_string(Rational const& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt rest = den;
    unsigned twos = 0, fives = 0;
    while (rest % 2 == 0) {
      rest /= 2;
      ++twos;
    }
    while (rest % 5 == 0) {
      rest /= 5;
      ++fives;
    }
    if (rest != 1) {
      return num.str() + "/" + den.str();
    }
    unsigned digits = std::max(twos, fives);
    BigInt   scaled = num * pow10_int(digits) / den;
    std::string s   = with_point(scaled, digits);
    if (digits > 0) {
      while (s.back() == '0') {
        s.pop_back();
      }
      if (s.back() == '.') {
        s.pop_back();
      }
    }
    return s;
  }

  std::string to_fixed_string(Rational const& x,
                              unsigned        digits,
                              RoundingRule    rule) {
    return with_point(scaled_round(x, digits, rule), digits);
  }

  Rational round_decimal(Rational const& x, unsigned digits, RoundingRule rule) {
    return Rational(scaled_round(x, digits, rule), pow10_int(digits));
  }

  Rational pow10(unsigned digits) {
    return Rational(pow10_int(digits));
  }

  std::size_t hash_value(Rational const& x) {
    std::vector<unsigned char> bytes;
    boost::multiprecision::export_bits(
        boost::multiprecision::numerator(x), std::back_inserter(bytes), 8);
    bytes.push_back(0xff);
    boost::multiprecision::export_bits(
        boost::multiprecision::denominator(x), std::back_inserter(bytes), 8);
    std::size_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace relrole
