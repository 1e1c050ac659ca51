#include <doctest.h>

#include <cmath>

#include "unispec/errors.hpp"
#include "unispec/growth.hpp"
#include "unispec/jordan.hpp"
#include "unispec/qseries.hpp"

using namespace unispec;

TEST_CASE("column laws") {
  for (int p : {2, 3, 5}) {
    CHECK(borodin_column_probs(Partition{}, p) == std::map<int, Rational>{{1, Rational(1)}});
    CHECK(borodin_column_probs(Partition{1}, p) ==
          std::map<int, Rational>{{1, Rational(1, p)}, {2, Rational(1) - Rational(1, p)}});
    CHECK(borodin_column_probs(Partition{2, 1}, p) ==
          std::map<int, Rational>{{1, Rational(1, p * p)},
                                  {2, Rational(1, p) - Rational(1, p * p)},
                                  {3, Rational(1) - Rational(1, p)}});
    for (int n = 0; n <= 6; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        CHECK(coin_column_probs(lambda, p, 0) == borodin_column_probs(lambda, p));
        for (int last = 0; last <= lambda.largest(); ++last) {
          Rational total(0);
          for (const auto& [col, pr] : coin_column_probs(lambda, p, last)) {
            CHECK(col > last);
            CHECK(pr > Rational(0));
            total += pr;
          }
          CHECK(total == Rational(1));
        }
      }
  }
}

TEST_CASE("division algorithm: forward law equals the triangular distribution") {
  // Push the exact law of the chain forward step by step.
  for (int p : {2, 3}) {
    PartitionMap<Rational> law{{Partition{}, Rational(1)}};
    for (int n = 1; n <= 7; ++n) {
      PartitionMap<Rational> next;
      for (const auto& [lambda, pr] : law)
        for (const auto& [col, step] : borodin_column_probs(lambda, p)) next[add_to_column(lambda, col)] += pr * step;
      law = std::move(next);
      CHECK(law == triangular_dist(n, p).probs);
    }
  }
}

TEST_CASE("samplers are deterministic") {
  CHECK(borodin_sample(0, 2, 1) == Partition{});
  CHECK(borodin_sample(1, 3, 99) == Partition{1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(borodin_sample(8, 2, seed) == borodin_sample(8, 2, seed));
    CHECK(borodin_sample(8, 2, seed).size() == 8);
    CHECK(coin_sample(2, seed, 64) == coin_sample(2, seed, 64));
  }
  BorodinSampler s(2, Rng(3));
  for (int i = 0; i < 5; ++i) s.step();
  CHECK(s.current().size() == 5);
  CHECK(s.step_count() == 5);
  CHECK(Rng(1, 2).next() == Rng(1, 2).next());
  CHECK(Rng(1, 2).next() != Rng(1, 3).next());
}

TEST_CASE("uniform draws below a bound") {
  Rng rng(17);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 60000; ++i) ++hist[static_cast<std::size_t>(rng.below(std::uint64_t{6}))];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
  const BigInt big = ipow(3, 70);
  for (int i = 0; i < 100; ++i) {
    const BigInt x = rng.below(big);
    CHECK(x >= 0);
    CHECK(x < big);
  }
  int hits = 0;
  for (int i = 0; i < 90000; ++i) hits += rng.hits_inverse_power(3, 2);
  CHECK(std::abs(hits - 10000) < 400);
  for (int i = 0; i < 1000; ++i) CHECK_FALSE(rng.hits_inverse_power(2, 200));
}

TEST_CASE("coin limit law") {
  for (int p : {2, 3}) {
    const Rational e = euler_inf(p, 64).value;
    CHECK(coin_limit_law(Partition{}, p) == e);
    CHECK(coin_limit_law(Partition{1}, p) == e / Rational(p - 1));
    // total over |lambda| <= 12 is close to 1
    Rational total(0);
    for (int n = 0; n <= 12; ++n)
      for (const auto& lambda : enumerate_partitions(n)) total += coin_limit_law(lambda, p);
    CHECK(total.to_double() == doctest::Approx(1.0).epsilon(p == 2 ? 1e-3 : 1e-5));
  }
  CHECK(coin_limit_law(Partition{}, 2).to_double() == doctest::Approx(0.28879).epsilon(1e-4));
}

TEST_CASE("empirical distributions") {
  const auto one = empirical_distribution(SamplerSpec::parse("borodin:n=3,p=2"), 1, 4);
  CHECK(one.counts.size() == 1);
  CHECK(one.trials == 1);

  const std::uint64_t trials = 100000;
  const auto b = empirical_distribution(SamplerSpec::parse("borodin:n=2,p=2"), trials, 1);
  const double sigma = std::sqrt(0.25 / trials);
  CHECK(std::abs(b.frequency(Partition{2}) - 0.5) < 3 * sigma);
  CHECK(std::abs(b.frequency(Partition{1, 1}) - 0.5) < 3 * sigma);

  const auto c = empirical_distribution(SamplerSpec::parse("coins:p=3,limit=64"), trials, 1);
  const double target = euler_inf(3, 64).value.to_double();
  CHECK(target == doctest::Approx(0.5601).epsilon(1e-3));
  CHECK(std::abs(c.frequency(Partition{}) - target) < 3 * std::sqrt(target * (1 - target) / trials));

  CHECK(empirical_distribution(SamplerSpec::parse("borodin:n=4,p=2"), 5000, 9).counts ==
        empirical_distribution(SamplerSpec::parse("borodin:n=4,p=2"), 5000, 9).counts);
}

TEST_CASE("total variation") {
  EmpiricalDistribution emp;
  emp.trials = 4;
  emp.counts[Partition{2}] = 3;
  emp.counts[Partition{1, 1}] = 1;
  PartitionMap<Rational> target{{Partition{2}, Rational(1, 2)}, {Partition{1, 1}, Rational(1, 2)}};
  CHECK(total_variation(emp, target) == doctest::Approx(0.25));
  target = {{Partition{3}, Rational(1)}};
  CHECK(total_variation(emp, target) == doctest::Approx(1.0));
}

TEST_CASE("sampler specs") {
  const auto b = SamplerSpec::parse("borodin:n=6,p=3");
  CHECK(b.kind == SamplerSpec::Kind::Borodin);
  CHECK(b.n == 6);
  CHECK(b.p == 3);
  CHECK(SamplerSpec::parse("borodin:n=0").p == 2);
  const auto c = SamplerSpec::parse("coins:p=2,limit=10");
  CHECK(c.kind == SamplerSpec::Kind::Coins);
  CHECK(c.limit == 10);
  CHECK(SamplerSpec::parse(c.to_string()).limit == 10);
  CHECK_THROWS_AS(SamplerSpec::parse("dice:n=2"), InvalidArgument);
  CHECK_THROWS_AS(SamplerSpec::parse("borodin:p=2"), InvalidArgument);
  CHECK_THROWS_AS(SamplerSpec::parse("coins:p=2,limit=0"), InvalidArgument);
  CHECK_THROWS_AS(SamplerSpec::parse("borodin:n=2,p=1"), InvalidArgument);
}

TEST_CASE("coin truncation bound") {
  CoinSampler s(2, 10, Rng(1));
  CHECK(s.truncation_bound() == Rational(1, 1024));
}
