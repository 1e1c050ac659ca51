#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "unispec/errors.hpp"
#include "unispec/partition.hpp"

using namespace unispec;

namespace {

// p(n) by the pentagonal number recurrence, independent of the enumerator.
std::vector<long> partition_numbers(int n_max) {
  std::vector<long> p(static_cast<std::size_t>(n_max + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

// n! / prod hooks
long hook_count(const Partition& lambda) {
  long num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  long den = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) den *= (lambda.part(i) - j) + (lambda.conj_part(j) - i) + 1;
  return num / den;
}

Partition random_partition(std::mt19937_64& rng, int n) {
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(left));
    parts.push_back(x);
    left -= x;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

TEST_CASE("partition counts follow the pentagonal recurrence") {
  const auto p = partition_numbers(25);
  for (int n = 0; n <= 25; ++n) CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("enumeration is reverse lexicographic and distinct") {
  const auto all = enumerate_partitions(9);
  CHECK(all.front() == Partition{9});
  CHECK(all.back() == Partition{1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(std::is_sorted(all.begin(), all.end(), ReverseLex{}));
  CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("conjugate, n statistic, multiplicities") {
  const Partition lambda{5, 4, 4, 1};
  CHECK(conjugate(lambda) == Partition{4, 3, 3, 3, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{4}) == Partition{1, 1, 1, 1});
  CHECK(n_stat(lambda) == 15);
  CHECK(n_stat(Partition{6}) == 0);
  CHECK(n_stat(Partition{1, 1, 1}) == 3);
  CHECK(multiplicities(lambda) == std::map<int, int>{{5, 1}, {4, 2}, {1, 1}});
  CHECK(multiplicities(Partition{}).empty());
  CHECK(multiplicities(Partition{2, 2, 2}) == std::map<int, int>{{2, 3}});
  CHECK(conj_square_sum(lambda) == 16 + 9 + 9 + 9 + 1);
  CHECK(conj_prefix_sum(lambda, 2) == 7);
  CHECK(conj_prefix_sum(lambda, 99) == 14);
}

TEST_CASE("conjugation properties on random partitions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 20);
    const Partition lambda = random_partition(rng, n);
    const Partition c = conjugate(lambda);
    CHECK(conjugate(c) == lambda);
    CHECK(c.size() == lambda.size());
    long binoms = 0;
    for (int j = 1; j <= lambda.largest(); ++j) binoms += static_cast<long>(lambda.conj_part(j)) * (lambda.conj_part(j) - 1) / 2;
    CHECK(n_stat(lambda) == binoms);
  }
}

TEST_CASE("parse and print") {
  CHECK(Partition::parse("[5,4,4,1]") == Partition{5, 4, 4, 1});
  CHECK(Partition::parse("[]") == Partition{});
  CHECK(Partition::parse(" [ 2 , 1 ] ") == Partition{2, 1});
  CHECK(Partition{3, 1}.to_string() == "[3,1]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK_THROWS_AS(Partition::parse("[1,2]"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("[0]"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("3,1"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("[a]"), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 3}), InvalidArgument);
}

TEST_CASE("standard tableau counts match the hook length formula") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto all = enumerate_syt(lambda);
      CHECK(static_cast<long>(all.size()) == hook_count(lambda));
      for (const auto& t : all) CHECK(t.shape() == lambda);
    }
  CHECK(enumerate_syt(Partition{2, 1}).size() == 2);
  CHECK(enumerate_syt(Partition{5}).size() == 1);
}

TEST_CASE("tableau positions and subshapes") {
  const StandardTableau t({{1, 2, 4, 7}, {3, 5, 8}, {6, 9}});
  CHECK(t.shape() == Partition{4, 3, 2});
  CHECK(t.position(9) == std::pair<int, int>{3, 2});
  CHECK(t.subshape(5) == Partition{3, 2});
  CHECK(t.subshape(0) == Partition{});
  CHECK_THROWS(StandardTableau({{1, 3}, {2, 4}, {5}}).subshape(6));
  CHECK_THROWS_AS(StandardTableau({{2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(StandardTableau({{1, 2}, {4, 3}}), InvalidArgument);
}

TEST_CASE("m star") {
  const StandardTableau column({{1}, {2}});
  CHECK(m_star(column, 1) == 1);
  CHECK(m_star(column, 2) == 2);
  const StandardTableau t({{1, 2, 4, 7}, {3, 5, 8}, {6, 9}});
  CHECK(m_star(t, 9) == 1);
  for (const auto& s : enumerate_syt(Partition{3, 2, 1})) CHECK(m_star(s, 1) == 1);
  CHECK(add_to_column(Partition{2, 1}, 2) == Partition{2, 2});
  CHECK(add_to_column(Partition{2, 1}, 3) == Partition{3, 1});
  CHECK_THROWS(add_to_column(Partition{2, 1}, 4));
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate_partitions(41), BoundExceeded);
  CHECK_THROWS_AS(enumerate_syt(Partition{8, 7}), BoundExceeded);
  CHECK_THROWS_AS(enumerate_partitions(-1), InvalidArgument);
}
