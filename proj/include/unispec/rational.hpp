#ifndef UNISPEC_RATIONAL_HPP
#define UNISPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace unispec {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every probability and identity in the library is carried in this type;
/// `to_double` exists only for display columns.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "a/b", "a" or "-a/b". Throws InvalidArgument on malformed text or b == 0.
  static Rational parse(std::string_view text);

  /// base^exp for any integer exponent; base must be nonzero when exp < 0.
  static Rational power(long base, long exp);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  BigInt floor() const;
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

/// p^k as an arbitrary-precision integer, k >= 0.
BigInt ipow(long base, unsigned long exp);

/// Exact integer division; throws InvariantViolation when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, const char* context);

/// Display helper: value rounded to 10 significant digits.
std::string approx_string(const Rational& r);

}  // namespace unispec

#endif  // UNISPEC_RATIONAL_HPP
