#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace phicert {

class Interval;

// Exact rational number with 64-bit numerator and denominator.
//
// Grid steps, table abscissae and interval endpoints such as 0.77 or 1/200
// are held as rationals so coverage arguments compare exact values rather
// than their nearest doubles. Arithmetic throws RangeError on overflow.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "7", "-3/400", "0.7598" and "1e-3".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const;

  // Tight outward-rounded enclosure of the exact value.
  Interval enclose() const;

  // "n/d", or "n" for integers.
  std::string str() const;
  // Decimal rendering rounded half-even to `places` digits.
  std::string to_decimal(int places) const;
  // Exact decimal with at least min_places digits when the expansion
  // terminates within 15 places, otherwise str().
  std::string exact_decimal(int min_places = 0) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::int64_t floor() const;
  std::int64_t ceil() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace phicert
