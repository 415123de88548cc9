#include "phicert/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <tuple>
#include <utility>

#include "phicert/errors.hpp"
#include "phicert/interval.hpp"

namespace phicert {
namespace {

__extension__ using Wide = __int128;

constexpr std::int64_t kMax = INT64_MAX;

std::int64_t narrow(Wide v, const char* what) {
  if (v > kMax || v < -kMax) {
    throw RangeError(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

std::pair<std::int64_t, std::int64_t> reduce(Wide num, Wide den, const char* what) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return {narrow(num, what), narrow(den, what)};
}

Rational make(Wide num, Wide den, const char* what) {
  const auto [n, d] = reduce(num, den, what);
  return Rational(n, d);
}

std::int64_t pow10(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > kMax / 10) throw RangeError("rational overflow: too many decimal digits");
    r *= 10;
  }
  return r;
}

Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Wide mantissa = 0;
  int frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > kMax) throw RangeError("rational overflow parsing '" + original + "'");
      if (seen_point) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParameterError("not a number: '" + original + "'");
  int exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw ParameterError("not a number: '" + original + "'");
    const std::string tail(s.substr(i + 1));
    char* end = nullptr;
    const long e = std::strtol(tail.c_str(), &end, 10);
    if (tail.empty() || *end != '\0' || e < -18 || e > 18) {
      throw ParameterError("bad exponent in '" + original + "'");
    }
    exponent = static_cast<int>(e);
  }
  exponent -= frac_digits;
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  if (exponent >= 0) {
    num *= pow10(exponent);
  } else {
    den = pow10(-exponent);
  }
  return make(num, den, "parse");
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  std::tie(num_, den_) = reduce(num, den, "construction");
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational n = parse_decimal(text.substr(0, slash));
  const Rational d = parse_decimal(text.substr(slash + 1));
  if (d.num() == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  return n / d;
}

double Rational::to_double() const { return enclose().mid(); }

Interval Rational::enclose() const {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (num_ > kExact || num_ < -kExact || den_ > kExact) {
    throw RangeError("rational " + str() + " has components beyond 2^53");
  }
  return Interval(static_cast<double>(num_)) / Interval(static_cast<double>(den_));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  const Wide scale = pow10(places);
  Wide scaled = static_cast<Wide>(num_) * scale;
  Wide q = scaled / den_;
  Wide r = scaled % den_;
  if (r < 0) {
    r += den_;
    q -= 1;
  }
  const Wide twice = 2 * r;
  if (twice > den_ || (twice == den_ && (q % 2 != 0))) q += 1;
  const bool negative = q < 0;
  if (negative) q = -q;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
    q /= 10;
  } while (q > 0);
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');
  if (places > 0) digits.insert(digits.end() - places, '.');
  return negative ? "-" + digits : digits;
}

std::string Rational::exact_decimal(int min_places) const {
  for (int places = min_places; places <= 15; ++places) {
    const std::string text = to_decimal(places);
    if (parse(text) == *this) return text;
  }
  return str();
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
              static_cast<Wide>(a.den_) * b.den_, "addition");
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_,
              "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("rational division by zero");
  return make(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_, "division");
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

}  // namespace phicert
