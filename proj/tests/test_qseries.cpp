#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "unispec/errors.hpp"
#include "unispec/qseries.hpp"

using namespace unispec;

namespace {

// Two-variable Hall-Littlewood polynomial P_(a,b) by direct coset expansion:
// x1^a x2^b (x1 - t x2)/(x1 - x2) + x2^a x1^b (x2 - t x1)/(x2 - x1), a > b.
// For a == b the result is (x1 x2)^a.
Rational hl_two(int a, int b, const Rational& x1, const Rational& x2, const Rational& t) {
  auto pw = [](const Rational& x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  if (a == b) return pw(x1 * x2, a);
  return pw(x1, a) * pw(x2, b) * (x1 - t * x2) / (x1 - x2) + pw(x2, a) * pw(x1, b) * (x2 - t * x1) / (x2 - x1);
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational::power(2, -3) == Rational(1, 8));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidArgument);
  CHECK_THROWS_AS(Rational::parse("0.5"), InvalidArgument);
  CHECK(ipow(3, 4) == 81);
  CHECK(approx_string(Rational(1, 3)) == "0.3333333333");
}

TEST_CASE("pochhammer and euler truncation") {
  CHECK(poch_inv(5, 0) == Rational(1));
  CHECK(poch_inv(2, 2) == Rational(3, 8));
  CHECK(poch_inv(3, 1) == Rational(2, 3));
  CHECK(euler_inf(2, 0).value == Rational(1));
  CHECK(euler_inf(2, 3).value == Rational(21, 64));
  CHECK(euler_inf(3, 2).value == Rational(16, 27));
  const auto e = euler_inf(2, 40);
  CHECK(e.error_bound == Rational::power(2, -40));
  CHECK(std::abs(e.value.to_double() - 0.2887880950866024) < 1e-11);
  CHECK_THROWS_AS(poch_inv(1, 2), InvalidArgument);
}

TEST_CASE("principal specialisations") {
  for (int p : {2, 3, 5, 7}) {
    CHECK(hl_principal(Partition{}, p) == Rational(1));
    CHECK(hl_principal(Partition{1}, p) == Rational(1, p - 1));
  }
  CHECK(hl_principal(Partition{2}, 2) == Rational(1, 2));
}

TEST_CASE("hall-littlewood small cases") {
  const Rational a(2, 3), b(-5, 7), t(3, 11);
  const std::vector<Rational> ab{a, b};
  CHECK(hl_evaluate(Partition{1}, ab, t) == a + b);
  CHECK(hl_evaluate(Partition{1, 1}, ab, t) == a * b);
  CHECK(hl_evaluate(Partition{2}, ab, t) == a * a + b * b + (Rational(1) - t) * a * b);
  CHECK(hl_evaluate(Partition{}, ab, t) == Rational(1));
  CHECK_THROWS_AS(hl_evaluate(Partition{1, 1, 1}, ab, t), InvalidArgument);
}

TEST_CASE("coset form agrees with two-variable expansion on random inputs") {
  std::mt19937_64 rng(11);
  auto rnd = [&] { return Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9)); };
  for (int trial = 0; trial < 200; ++trial) {
    const int a = static_cast<int>(rng() % 5);
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(a + 1));
    Rational x1 = rnd(), x2 = rnd();
    if (x1 == x2) x2 += Rational(1);
    const Rational t = rnd();
    std::vector<int> parts;
    if (a > 0) parts.push_back(a);
    if (b > 0) parts.push_back(b);
    const std::vector<Rational> xs{x1, x2};
    CHECK(hl_evaluate(Partition(parts), xs, t) == hl_two(a, b, x1, x2, t));
  }
}

TEST_CASE("coset and symmetrised forms agree, including repeated variables") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    std::vector<Rational> xs;
    for (int i = 0; i < m; ++i) xs.emplace_back(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 2));
    // t = 1 and t = -1 kill v_lambda(t) in the symmetrised form
    const Rational choices[] = {Rational(0), Rational(1, 2), Rational(-3, 2), Rational(2), Rational(5, 3)};
    const Rational t = choices[rng() % 5];
    for (int n = 0; n <= 4; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        if (lambda.length() > m) continue;
        const bool distinct = [&] {
          for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
              if (xs[static_cast<std::size_t>(i)] == xs[static_cast<std::size_t>(j)]) return false;
          return true;
        }();
        const Rational coset = hl_evaluate(lambda, xs, t);
        if (distinct) CHECK(coset == hl_evaluate_symmetrized(lambda, xs, t));
      }
  }
  // Repeated variables: P_(1,1)(x, x) = x^2 and P_(2)(x, x) = (3 - t) x^2.
  const std::vector<Rational> same{Rational(3), Rational(3)};
  CHECK(hl_evaluate(Partition{1, 1}, same, Rational(1, 2)) == Rational(9));
  CHECK(hl_evaluate(Partition{2}, same, Rational(1, 2)) == Rational(45, 2));
}

TEST_CASE("principal specialisation is the limit of truncated evaluations") {
  // x_i = p^{-i}, i = 1..8; the missing tail changes the value by O(p^{-9}).
  for (int p : {3, 5})
    for (int n = 1; n <= 4; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        std::vector<Rational> xs;
        for (int i = 1; i <= 8; ++i) xs.push_back(Rational::power(p, -i));
        const double truncated = hl_evaluate(lambda, xs, Rational(1, p)).to_double();
        const double closed = hl_principal(lambda, p).to_double();
        CHECK(truncated == doctest::Approx(closed).epsilon(1e-3));
      }
}

TEST_CASE("class weight normalization") {
  for (int p : {2, 3, 5})
    for (int n = 0; n <= 10; ++n) {
      Rational sum(0);
      for (const auto& lambda : enumerate_partitions(n)) sum += class_weight(lambda, p);
      CHECK(sum == Rational(1) / (Rational(ipow(p, static_cast<unsigned long>(n))) * poch_inv(p, n)));
    }
}

TEST_CASE("variable bound") {
  std::vector<Rational> xs(9, Rational(1));
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = Rational(static_cast<long>(i) + 2);
  CHECK_THROWS_AS(hl_evaluate(Partition{1}, xs, Rational(0)), BoundExceeded);
}
