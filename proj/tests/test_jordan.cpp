#include <doctest.h>

#include "unispec/errors.hpp"
#include "unispec/jordan.hpp"
#include "unispec/line_action.hpp"
#include "unispec/pgroup.hpp"

using namespace unispec;

TEST_CASE("unipotent GL distribution, small cases") {
  for (int p : {2, 3, 5, 7}) {
    const auto d1 = gl_unipotent_dist(1, p);
    CHECK(d1.probs.size() == 1);
    CHECK(d1.prob(Partition{1}) == Rational(1));
    const auto d2 = gl_unipotent_dist(2, p);
    CHECK(d2.prob(Partition{1, 1}) == Rational(1, p * p));
    CHECK(d2.prob(Partition{2}) == Rational(1) - Rational(1, p * p));
  }
  CHECK(gl_unipotent_dist(2, 3).prob(Partition{2}) == Rational(8, 9));
}

TEST_CASE("triangular distribution, small cases") {
  for (int p : {2, 3, 5}) {
    CHECK(triangular_dist(1, p).prob(Partition{1}) == Rational(1));
    const auto d2 = triangular_dist(2, p);
    CHECK(d2.prob(Partition{2}) == Rational(1) - Rational(1, p));
    CHECK(d2.prob(Partition{1, 1}) == Rational(1, p));
  }
}

TEST_CASE("both laws are probability distributions") {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 9; ++n) {
      CHECK(gl_unipotent_dist(n, p).total() == Rational(1));
      CHECK(triangular_dist(n, p).total() == Rational(1));
    }
}

TEST_CASE("two forms of the class probability agree") {
  for (int p : {2, 3})
    for (int n = 1; n <= 7; ++n)
      for (const auto& [lambda, pr] : gl_unipotent_dist(n, p).probs) CHECK(gl_unipotent_prob_hl(lambda, p) == pr);
}

TEST_CASE("census oracles against both distributions") {
  const std::pair<int, int> gl_cases[] = {{2, 2}, {2, 3}, {3, 2}};
  for (const auto& [n, p] : gl_cases) {
    const auto census = type_census(Model::GlUnipotent, n, p);
    const auto dist = gl_unipotent_dist(n, p);
    const BigInt total = ipow(p, static_cast<unsigned long>(n * (n - 1)));
    for (const auto& [lambda, pr] : dist.probs) {
      const auto it = census.find(lambda);
      const std::uint64_t seen = it == census.end() ? 0 : it->second;
      CHECK(Rational(BigInt(static_cast<unsigned long>(seen)), total) == pr);
    }
  }
  const std::pair<int, int> tn_cases[] = {{2, 2}, {3, 2}, {4, 2}, {3, 3}};
  for (const auto& [n, p] : tn_cases) {
    const auto census = type_census(Model::Triangular, n, p);
    const auto dist = triangular_dist(n, p);
    const BigInt total = ipow(p, static_cast<unsigned long>(n * (n - 1) / 2));
    for (const auto& [lambda, pr] : dist.probs) {
      const auto it = census.find(lambda);
      const std::uint64_t seen = it == census.end() ? 0 : it->second;
      CHECK(Rational(BigInt(static_cast<unsigned long>(seen)), total) == pr);
    }
  }
}

TEST_CASE("chain counts") {
  for (int p : {2, 3, 5}) {
    CHECK(chain_count(Partition{4}, p) == 1);
    CHECK(chain_count(Partition{1, 1}, p) == p + 1);
    // (Z/p)^3: (p^2+p+1) lines, each in p+1 planes
    CHECK(chain_count(Partition{1, 1, 1}, p) == (p * p + p + 1) * (p + 1));
  }
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const AbelianPGroup group(lambda, 2);
      CHECK(chain_count(lambda, 2) == group.count_maximal_chains());
    }
}

TEST_CASE("chain route and tableau route agree") {
  for (int p : {2, 3})
    for (int n = 1; n <= 7; ++n)
      for (const auto& [lambda, pr] : triangular_dist(n, p).probs) CHECK(triangular_prob_chain(lambda, p) == pr);
}

TEST_CASE("flag-fix route agrees for small matrices") {
  for (int p : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      const auto dist = triangular_dist(n, p);
      for (const auto& lambda : enumerate_partitions(n))
        CHECK(triangular_prob_from_count(lambda, p, count_fixed_flags(jordan_matrix(lambda, p))) == dist.prob(lambda));
    }
}

TEST_CASE("cyclic subgroup counts") {
  for (int p : {2, 3, 5}) {
    CHECK(subgroup_count_type_r(Partition{1, 1}, p, 1) == p + 1);
    CHECK(subgroup_count_type_r(Partition{2}, p, 2) == 1);
    CHECK(subgroup_count_type_r(Partition{2}, p, 3) == 0);
  }
  CHECK(subgroup_count_type_r(Partition{2, 1}, 2, 1) == 3);
  for (int p : {2, 3})
    for (int n = 1; n <= (p == 2 ? 4 : 3); ++n)
      for (const auto& lambda : enumerate_partitions(n))
        for (int r = 1; r <= lambda.largest(); ++r)
          CHECK(subgroup_count_type_r(lambda, p, r) == subgroups_of_type_oracle(lambda, p, Partition{r}));
}

TEST_CASE("subgroup oracle") {
  for (int p : {2, 3}) {
    CHECK(subgroups_of_type_oracle(Partition{1, 1}, p, Partition{1}) == p + 1);
    CHECK(subgroups_of_type_oracle(Partition{3, 1}, p, Partition{}) == 1);
  }
  const AbelianPGroup g(Partition{2, 1}, 2);
  CHECK(g.order() == 8);
  // 1 trivial, 3 of order 2, 3 of order 4 (two cyclic, one Klein), whole group
  CHECK(g.subgroups().size() == 8);
  CHECK(subgroups_of_type_oracle(Partition{2, 1}, 2, Partition{1, 1}) == 1);
  CHECK(subgroups_of_type_oracle(Partition{2, 1}, 2, Partition{2}) == 2);
  CHECK_THROWS_AS(AbelianPGroup(Partition{1}, 4), InvalidArgument);
}

TEST_CASE("identity reports") {
  for (int p : {2, 3})
    for (int n = 0; n <= 8; ++n) CHECK(verify_sum_identity(n, p).equal);
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) CHECK(verify_likemac(n, Partition{r}, 2).equal);
  CHECK(verify_likemac(3, Partition{1, 1}, 2).equal);
  CHECK(verify_likemac(4, Partition{2, 1}, 2).equal);
  CHECK(verify_duality(Partition{2, 1}, 2, Partition{1}, Partition{2}).equal);
  CHECK(verify_duality(Partition{2, 1, 1}, 2, Partition{1, 1}, Partition{2}).equal);
  const auto r = verify_sum_identity(3, 2);
  CHECK(r.to_json()["reference"] == "class-weight normalization");
}

TEST_CASE("model names and bounds") {
  CHECK(parse_model("gl") == Model::GlUnipotent);
  CHECK(parse_model("triangular") == Model::Triangular);
  CHECK(model_name(Model::Triangular) == "triangular");
  CHECK_THROWS_AS(parse_model("sl"), InvalidArgument);
  CHECK_THROWS_AS(gl_unipotent_dist(31, 2), BoundExceeded);
  CHECK_THROWS_AS(triangular_dist(15, 2), BoundExceeded);
  CHECK_THROWS_AS(gl_unipotent_dist(3, 1), InvalidArgument);
  CHECK_THROWS(gl_unipotent_dist(0, 2));
}
