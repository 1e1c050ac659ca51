#ifndef UNISPEC_GROWTH_HPP
#define UNISPEC_GROWTH_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>

#include "unispec/jordan.hpp"
#include "unispec/partition.hpp"
#include "unispec/rational.hpp"

namespace unispec {

/// Seedable reproducible generator: std::mt19937_64 seeded with
/// splitmix64(seed ^ splitmix64(stream)). Both pieces are fully specified,
/// so streams are identical across platforms and releases.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound), bound >= 1, by masked rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [0, bound) for arbitrary-precision bounds.
  BigInt below(const BigInt& bound);
  /// True with probability exactly p^{-k}: a uniform draw below p^k is zero.
  bool hits_inverse_power(int p, long k);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Division-algorithm transition law out of lambda: column 1 with
/// probability p^{-lambda'_1}, column j > 1 with p^{-lambda'_j} - p^{-lambda'_{j-1}}.
/// Zero-probability columns are omitted; the values sum to 1.
std::map<int, Rational> borodin_column_probs(const Partition& lambda, int p);

/// Column law used by the coin algorithm after the last column j touched by
/// the current coin: column j+1 with p^{-lambda'_{j+1}}, s > j+1 with
/// p^{-lambda'_s} - p^{-lambda'_{s-1}}. With j = 0 this equals
/// borodin_column_probs.
std::map<int, Rational> coin_column_probs(const Partition& lambda, int p, int last_column);

/// Dot-at-a-time growth whose law after n steps is triangular_dist(n, p).
class BorodinSampler {
 public:
  BorodinSampler(int p, Rng rng);

  const Partition& current() const { return current_; }
  int step_count() const { return steps_; }
  void reset();
  /// Adds one dot; returns the column it went to.
  int step();
  Partition run(int n);

 private:
  int p_;
  Rng rng_;
  Partition current_;
  int steps_ = 0;
};

Partition borodin_sample(int n, int p, std::uint64_t seed);

/// Coin-flip growth targeting the n -> infinity law of the unipotent part of
/// a random element of GL(n,p). Coin N lands heads with probability p^{-N};
/// it is flipped until it shows tails, each head adding one dot strictly to
/// the right of the previous dot from the same coin. Coins beyond `limit`
/// are not flipped.
class CoinSampler {
 public:
  CoinSampler(int p, int limit, Rng rng);

  Partition run();
  /// Probability that an unflipped coin (index > limit) would have produced
  /// a head: sum_{i > limit} p^{-i} = p^{-limit} / (p - 1).
  Rational truncation_bound() const;

  const Partition& current() const { return current_; }
  int coin() const { return coin_; }
  int last_column() const { return last_column_; }

 private:
  int p_;
  int limit_;
  Rng rng_;
  Partition current_;
  int coin_ = 1;
  int last_column_ = 0;
};

Partition coin_sample(int p, std::uint64_t seed, int limit);

/// Limit law of the coin algorithm:
/// P(lambda) = (1/p)_inf / (p^{sum lambda'^2} prod (1/p)_{m_i}), with (1/p)_inf
/// truncated after `terms` factors. Summing the class-weight normalization over
/// all n with the q-binomial theorem gives sum_lambda class_weight = 1/(1/p)_inf.
Rational coin_limit_law(const Partition& lambda, int p, int terms = 64);

/// "borodin:n=<n>,p=<p>" or "coins:p=<p>,limit=<k>".
struct SamplerSpec {
  enum class Kind { Borodin, Coins };
  Kind kind = Kind::Borodin;
  int n = 0;
  int p = 2;
  int limit = 64;

  static SamplerSpec parse(std::string_view text);
  std::string to_string() const;
};

struct EmpiricalDistribution {
  std::uint64_t trials = 0;
  PartitionMap<std::uint64_t> counts;

  double frequency(const Partition& lambda) const;
  void merge(const EmpiricalDistribution& other);
};

/// Runs `trials` independent samples split across a fixed number of streams
/// (so the result does not depend on the thread count) and merges the counts.
EmpiricalDistribution empirical_distribution(const SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed);

/// Total variation 1/2 sum |f - P|; mass of P outside the observed support is
/// counted in full.
double total_variation(const EmpiricalDistribution& emp, const PartitionMap<Rational>& target);

}  // namespace unispec

#endif  // UNISPEC_GROWTH_HPP
