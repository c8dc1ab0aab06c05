#include "intfn/rational.hpp"

#include <charconv>
#include <limits>

#include "intfn/checked.hpp"
#include "intfn/error.hpp"

namespace intfn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("integer out of range in '" + std::string(whole) + "'");
  }
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

__int128 pow10(int n) {
  __int128 p = 1;
  for (int k = 0; k < n; ++k) p *= 10;
  return p;
}

std::string to_decimal_digits(__int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(trim(s.substr(0, slash)), s);
    const auto den = parse_int(trim(s.substr(slash + 1)), s);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (frac.empty() && int_part.empty()) throw ParseError("not a rational number: '" + std::string(s) + "'");
    if (frac.size() > 18) throw OverflowError("too many decimal places in '" + std::string(s) + "'");
    for (char c : frac) {
      if (c < '0' || c > '9') throw ParseError("not a rational number: '" + std::string(s) + "'");
    }
    const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, s);
    if (whole < 0) throw ParseError("not a rational number: '" + std::string(s) + "'");
    const std::int64_t fraction = frac.empty() ? 0 : parse_int(frac, s);
    const auto den = static_cast<std::int64_t>(pow10(static_cast<int>(frac.size())));
    auto num = checked::add(checked::mul(whole, den), fraction);
    return Rational(negative ? -num : num, den);
  }
  return Rational(parse_int(s, s));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_quotient(const Rational& a, const Rational& b) {
  if (b.numerator() <= 0) throw PreconditionError("floor_quotient needs a positive divisor");
  const __int128 n = static_cast<__int128>(a.numerator()) * b.denominator();
  const __int128 d = static_cast<__int128>(a.denominator()) * b.numerator();
  return checked::narrow(checked::floor_div(n, d));
}

int compare(const Rational& a, __int128 digits, int scale) {
  if (scale < 0 || scale > 18) throw PreconditionError("decimal scale must be in [0, 18]");
  const __int128 lhs = static_cast<__int128>(a.numerator()) * pow10(scale);
  const __int128 rhs = digits * a.denominator();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::string format_significant(const Rational& value, int significant, Rounding rounding) {
  if (significant < 1 || significant > 18) throw PreconditionError("significant digits must be in [1, 18]");
  if (value.numerator() == 0) return "0";
  if (value.numerator() < 0) {
    return "-" + format_significant(-value, significant,
                                    rounding == Rounding::Down ? Rounding::Up : Rounding::Down);
  }
  __int128 n = value.numerator();
  const __int128 d = value.denominator();

  // Decimal exponent e with 10^e <= value < 10^(e+1).
  int e = 0;
  if (n >= d) {
    e = static_cast<int>(to_decimal_digits(n / d).size()) - 1;
  } else {
    __int128 t = n;
    while (t < d) {
      t *= 10;
      --e;
    }
  }

  const int shift = significant - 1 - e;
  if (shift > 36 || shift < -36) throw OverflowError("value out of formatting range");
  __int128 num = n;
  __int128 den = d;
  if (shift >= 0) {
    num *= pow10(shift);
  } else {
    den *= pow10(-shift);
  }
  __int128 q = num / den;
  if (rounding == Rounding::Up && num % den != 0) ++q;

  std::string digits = to_decimal_digits(q);
  if (shift <= 0) return digits + std::string(static_cast<std::size_t>(-shift), '0');

  const auto frac_len = static_cast<std::size_t>(shift);
  if (digits.size() <= frac_len) digits.insert(0, frac_len - digits.size() + 1, '0');
  std::string out = digits.substr(0, digits.size() - frac_len) + "." +
                    digits.substr(digits.size() - frac_len);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace intfn
