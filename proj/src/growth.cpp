#include "unispec/growth.hpp"

#include <charconv>
#include <exception>
#include <mutex>
#include <cmath>
#include <thread>
#include <vector>

#include "unispec/errors.hpp"
#include "unispec/qseries.hpp"

namespace unispec {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw_invalid("Rng::below needs a positive bound");
  if (bound == 1) return 0;
  std::uint64_t mask = bound - 1;
  for (unsigned shift = 1; shift < 64; shift <<= 1U) mask |= mask >> shift;
  for (;;) {
    const std::uint64_t x = next() & mask;
    if (x < bound) return x;
  }
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 0) throw_invalid("Rng::below needs a positive bound");
  if (bound.fits_ulong_p()) return BigInt(static_cast<unsigned long>(below(std::uint64_t{bound.get_ui()})));
  const BigInt top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned spare = static_cast<unsigned>(words * 64 - bits);
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = next();
      if (w == 0 && spare > 0) word >>= spare;
      BigInt part(static_cast<unsigned long>(word));
      x = (x << 64) + part;
    }
    if (x < bound) return x;
  }
}

bool Rng::hits_inverse_power(int p, long k) {
  // p^k split into chunks p^c < 2^62; the draw is zero iff every chunk digit is zero.
  int chunk = 0;
  for (std::uint64_t v = 1; v <= (std::uint64_t{1} << 62U) / static_cast<std::uint64_t>(p); v *= static_cast<std::uint64_t>(p))
    ++chunk;
  while (k > 0) {
    const long c = std::min<long>(k, chunk);
    std::uint64_t bound = 1;
    for (long i = 0; i < c; ++i) bound *= static_cast<std::uint64_t>(p);
    if (below(bound) != 0) return false;
    k -= c;
  }
  return true;
}

namespace {

// Column law starting after `last`: numerators over the common denominator p^{lambda'_{last+1}}.
std::vector<std::pair<int, BigInt>> column_numerators(const Partition& lambda, int p, int last, BigInt& denominator) {
  const int first = last + 1;
  const long top = lambda.conj_part(first);
  denominator = ipow(p, static_cast<unsigned long>(top));
  std::vector<std::pair<int, BigInt>> out;
  out.emplace_back(first, 1);
  for (int s = first + 1; s <= lambda.largest() + 1; ++s) {
    const long cur = lambda.conj_part(s);
    const long prev = lambda.conj_part(s - 1);
    BigInt num = ipow(p, static_cast<unsigned long>(top - cur)) - ipow(p, static_cast<unsigned long>(top - prev));
    if (num != 0) out.emplace_back(s, std::move(num));
  }
  return out;
}

std::map<int, Rational> column_law(const Partition& lambda, int p, int last) {
  require_modulus(p);
  if (last < 0) throw_invalid("last column must be >= 0");
  BigInt den;
  std::map<int, Rational> out;
  for (auto& [col, num] : column_numerators(lambda, p, last, den)) out.emplace(col, Rational(num, den));
  return out;
}

int draw_column(const Partition& lambda, int p, int last, Rng& rng) {
  BigInt den;
  const auto nums = column_numerators(lambda, p, last, den);
  BigInt u = rng.below(den);
  for (const auto& [col, num] : nums) {
    if (u < num) return col;
    u -= num;
  }
  throw_invariant("column probabilities do not sum to 1");
}

}  // namespace

std::map<int, Rational> borodin_column_probs(const Partition& lambda, int p) { return column_law(lambda, p, 0); }

std::map<int, Rational> coin_column_probs(const Partition& lambda, int p, int last_column) {
  return column_law(lambda, p, last_column);
}

BorodinSampler::BorodinSampler(int p, Rng rng) : p_(p), rng_(std::move(rng)) { require_modulus(p); }

void BorodinSampler::reset() {
  current_ = Partition();
  steps_ = 0;
}

int BorodinSampler::step() {
  const int col = draw_column(current_, p_, 0, rng_);
  current_ = add_to_column(current_, col);
  ++steps_;
  if (current_.size() != steps_) throw_invariant("growth state size does not match step count");
  return col;
}

Partition BorodinSampler::run(int n) {
  if (n < 0) throw_invalid("borodin sampler needs n >= 0");
  reset();
  for (int i = 0; i < n; ++i) step();
  return current_;
}

Partition borodin_sample(int n, int p, std::uint64_t seed) { return BorodinSampler(p, Rng(seed)).run(n); }

CoinSampler::CoinSampler(int p, int limit, Rng rng) : p_(p), limit_(limit), rng_(std::move(rng)) {
  require_modulus(p);
  if (limit < 1) throw_invalid("coin limit must be >= 1");
}

Partition CoinSampler::run() {
  current_ = Partition();
  for (coin_ = 1; coin_ <= limit_; ++coin_) {
    last_column_ = 0;
    while (rng_.hits_inverse_power(p_, coin_)) {
      const int col = draw_column(current_, p_, last_column_, rng_);
      if (col <= last_column_) throw_invariant("coin added a dot left of its previous column");
      current_ = add_to_column(current_, col);
      last_column_ = col;
    }
  }
  return current_;
}

Rational CoinSampler::truncation_bound() const { return Rational::power(p_, -limit_) / Rational(p_ - 1); }

Partition coin_sample(int p, std::uint64_t seed, int limit) { return CoinSampler(p, limit, Rng(seed)).run(); }

Rational coin_limit_law(const Partition& lambda, int p, int terms) {
  return euler_inf(p, terms).value * class_weight(lambda, p);
}

namespace {

int parse_int_field(std::string_view key, std::string_view value) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
    throw_invalid("sampler parameter " + std::string(key) + " must be an integer, got '" + std::string(value) + "'");
  return out;
}

}  // namespace

SamplerSpec SamplerSpec::parse(std::string_view text) {
  SamplerSpec spec;
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "borodin")
    spec.kind = Kind::Borodin;
  else if (kind == "coins")
    spec.kind = Kind::Coins;
  else
    throw_invalid("unknown sampler '" + std::string(kind) + "', expected borodin or coins");
  bool have_n = false;
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw_invalid("sampler parameter '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const int value = parse_int_field(key, item.substr(eq + 1));
    if (key == "n" && spec.kind == Kind::Borodin) {
      spec.n = value;
      have_n = true;
    } else if (key == "p") {
      spec.p = value;
    } else if (key == "limit" && spec.kind == Kind::Coins) {
      spec.limit = value;
    } else {
      throw_invalid("unexpected sampler parameter '" + std::string(key) + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (spec.kind == Kind::Borodin && !have_n) throw_invalid("borodin sampler needs n=<n>");
  if (spec.n < 0) throw_invalid("sampler n must be >= 0");
  require_modulus(spec.p);
  if (spec.limit < 1) throw_invalid("coin limit must be >= 1");
  return spec;
}

std::string SamplerSpec::to_string() const {
  if (kind == Kind::Borodin) return "borodin:n=" + std::to_string(n) + ",p=" + std::to_string(p);
  return "coins:p=" + std::to_string(p) + ",limit=" + std::to_string(limit);
}

double EmpiricalDistribution::frequency(const Partition& lambda) const {
  const auto it = counts.find(lambda);
  if (it == counts.end() || trials == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(trials);
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  trials += other.trials;
  for (const auto& [lambda, c] : other.counts) counts[lambda] += c;
}

EmpiricalDistribution empirical_distribution(const SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw_invalid("trials must be >= 1");
  constexpr std::uint64_t kStreams = 16;
  std::vector<EmpiricalDistribution> shards(kStreams);
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::uint64_t k = 0; k < kStreams; ++k) {
    const std::uint64_t share = trials / kStreams + (k < trials % kStreams ? 1 : 0);
    if (share == 0) continue;
    workers.emplace_back([&, k, share] {
      try {
        EmpiricalDistribution& out = shards[k];
        Rng rng(seed, k);
        if (spec.kind == SamplerSpec::Kind::Borodin) {
          BorodinSampler sampler(spec.p, std::move(rng));
          for (std::uint64_t t = 0; t < share; ++t) ++out.counts[sampler.run(spec.n)];
        } else {
          CoinSampler sampler(spec.p, spec.limit, std::move(rng));
          for (std::uint64_t t = 0; t < share; ++t) ++out.counts[sampler.run()];
        }
        out.trials = share;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  EmpiricalDistribution merged;
  for (const auto& shard : shards) merged.merge(shard);
  return merged;
}

double total_variation(const EmpiricalDistribution& emp, const PartitionMap<Rational>& target) {
  double sum = 0.0;
  Rational listed(0);
  for (const auto& [lambda, pr] : target) {
    listed += pr;
    sum += std::fabs(emp.frequency(lambda) - pr.to_double());
  }
  for (const auto& [lambda, c] : emp.counts)
    if (!target.contains(lambda)) sum += emp.frequency(lambda);
  const double unlisted = 1.0 - listed.to_double();
  if (unlisted > 0) sum += unlisted;
  return 0.5 * sum;
}

}  // namespace unispec
