#pragma once

// Exact scalars. Integer and Rational are GMP's mpz_class / mpq_class; every
// Rational produced by this header is canonical (reduced, positive denominator).

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polystab {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

/// Renders as "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Integer parse_unsigned(std::string_view s, std::string_view whole) {
  if (!all_digits(s))
    throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
  return Integer(std::string(s), 10);
}

}  // namespace detail

/// Parses "p", "p/q", or a decimal literal such as "-0.1" or "2.5e-3" into an
/// exact rational. Decimals are read as decimal fractions, never as binary
/// floating point.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_unsigned(s.substr(0, slash), text);
    Integer den = detail::parse_unsigned(s.substr(slash + 1), text);
    out = make_rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!detail::all_digits(exp_text) || exp_text.size() > 6)
        throw ParseError("bad exponent in \"" + std::string(text) + "\"");
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = s.substr(0, dot);
      std::string_view frac_part = s.substr(dot + 1);
      if ((int_part.empty() && frac_part.empty()) ||
          (!int_part.empty() && !detail::all_digits(int_part)) ||
          (!frac_part.empty() && !detail::all_digits(frac_part)))
        throw ParseError("not a rational number: \"" + std::string(text) + "\"");
      digits = std::string(int_part) + std::string(frac_part);
      frac_digits = static_cast<long>(frac_part.size());
    } else {
      if (!detail::all_digits(s))
        throw ParseError("not a rational number: \"" + std::string(text) + "\"");
      digits = std::string(s);
    }
    Integer num(digits, 10);
    long shift = exponent - frac_digits;
    if (shift >= 0) {
      out = Rational(num * pow_int(10, static_cast<unsigned long>(shift)));
    } else {
      out = make_rational(num, pow_int(10, static_cast<unsigned long>(-shift)));
    }
  }
  if (negative) out = -out;
  return out;
}

/// FNV-1a, 64 bit. Used for stable digests in certificates and documents.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex_digest(std::string_view data) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace polystab
