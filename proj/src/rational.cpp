#include "unispec/rational.hpp"

#include <cstdio>

#include "unispec/errors.hpp"

namespace unispec {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw_invalid("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text))
    throw_invalid("malformed rational '" + std::string(text) + "', expected a/b");
  if (num_text.front() == '+') num_text.remove_prefix(1);
  if (den_text.front() == '+') den_text.remove_prefix(1);
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw_invalid("rational '" + std::string(text) + "' has zero denominator");
  return Rational(num, den);
}

Rational Rational::power(long base, long exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned long>(exp)));
  if (base == 0) throw_invalid("zero raised to a negative power");
  return Rational(BigInt(1), ipow(base, static_cast<unsigned long>(-exp)));
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw_invalid("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.q_ = -q_;
  return out;
}

BigInt ipow(long base, unsigned long exp) {
  BigInt out;
  BigInt b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

BigInt exact_div(const BigInt& a, const BigInt& b, const char* context) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw_invariant(std::string(context) + ": " + a.get_str() + " is not divisible by " + b.get_str());
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string approx_string(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", r.to_double());
  return buf;
}

}  // namespace unispec
