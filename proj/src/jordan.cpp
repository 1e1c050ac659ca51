#include "unispec/jordan.hpp"

#include "unispec/errors.hpp"
#include "unispec/limits.hpp"
#include "unispec/pgroup.hpp"
#include "unispec/qseries.hpp"

namespace unispec {

std::string_view model_name(Model model) {
  return model == Model::GlUnipotent ? "gl" : "triangular";
}

Model parse_model(std::string_view text) {
  if (text == "gl" || text == "gl-unipotent") return Model::GlUnipotent;
  if (text == "triangular" || text == "tn") return Model::Triangular;
  throw_invalid("unknown model '" + std::string(text) + "', expected gl or triangular");
}

Rational JordanDistribution::prob(const Partition& lambda) const {
  const auto it = probs.find(lambda);
  return it == probs.end() ? Rational(0) : it->second;
}

Rational JordanDistribution::total() const {
  Rational sum(0);
  for (const auto& [lambda, pr] : probs) sum += pr;
  return sum;
}

namespace {

void require_size(int n, int bound, const char* what) {
  if (n < 1) throw_invalid(std::string(what) + " needs n >= 1");
  if (n > bound)
    throw_bound(std::string(what) + " with n=" + std::to_string(n) + " exceeds bound " + std::to_string(bound));
}

const Rational& weight_sum_memo(const Partition& lambda, int p, PartitionMap<Rational>& memo) {
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  Rational total(0);
  if (lambda.empty()) {
    total = Rational(1);
  } else {
    const auto parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
      const int col = parts[i];
      if (i + 1 < lambda.length() && parts[i + 1] == col) continue;  // not a corner
      std::vector<int> smaller(parts.begin(), parts.end());
      if (--smaller[i] == 0) smaller.pop_back();
      const int mstar = m_star_of_step(lambda, col);
      total += weight_sum_memo(Partition(std::move(smaller)), p, memo) *
               (Rational(1) - Rational::power(p, -mstar));
    }
  }
  return memo.emplace(lambda, std::move(total)).first->second;
}

}  // namespace

JordanDistribution gl_unipotent_dist(int n, int p) {
  require_modulus(p);
  require_size(n, limits().max_gl_dist_n, "gl_unipotent_dist");
  JordanDistribution dist{Model::GlUnipotent, n, p, {}};
  const Rational scale = Rational::power(p, n) * poch_inv(p, n);
  for (auto& lambda : enumerate_partitions(n)) dist.probs.emplace(lambda, scale * class_weight(lambda, p));
  return dist;
}

Rational gl_unipotent_prob_hl(const Partition& lambda, int p) {
  const int n = lambda.size();
  return Rational::power(p, n) * poch_inv(p, n) * hl_principal(lambda, p) / Rational::power(p, n_stat(lambda));
}

Rational tableau_weight_sum(const Partition& lambda, int p) {
  require_modulus(p);
  PartitionMap<Rational> memo;
  return weight_sum_memo(lambda, p, memo);
}

JordanDistribution triangular_dist(int n, int p) {
  require_modulus(p);
  require_size(n, limits().max_triangular_dist_n, "triangular_dist");
  JordanDistribution dist{Model::Triangular, n, p, {}};
  PartitionMap<Rational> memo;
  for (auto& lambda : enumerate_partitions(n)) {
    Rational pr = hl_principal_shifted(lambda, p) * weight_sum_memo(lambda, p, memo);
    dist.probs.emplace(lambda, std::move(pr));
  }
  return dist;
}

BigInt chain_count(const Partition& lambda, int p) {
  require_modulus(p);
  if (lambda.size() > limits().max_tableau_n)
    throw_bound("chain_count limited to |lambda| <= " + std::to_string(limits().max_tableau_n));
  const int n = lambda.size();
  const Rational one_minus = Rational(1) - Rational(1, p);
  Rational value = Rational::power(p, n_stat(lambda)) * tableau_weight_sum(lambda, p);
  for (int i = 0; i < n; ++i) value /= one_minus;
  if (!value.is_integer())
    throw_invariant("chain count for " + lambda.to_string() + " is not an integer: " + value.to_string());
  return value.num();
}

Rational triangular_prob_from_count(const Partition& lambda, int p, const BigInt& count) {
  const int n = lambda.size();
  return Rational::power(p - 1, n) * hl_principal(lambda, p) * Rational(count) /
         Rational::power(p, n_stat(lambda));
}

Rational triangular_prob_chain(const Partition& lambda, int p) {
  return triangular_prob_from_count(lambda, p, chain_count(lambda, p));
}

BigInt subgroup_count_type_r(const Partition& lambda, int p, int r) {
  require_modulus(p);
  if (r < 1) throw_invalid("subgroup_count_type_r needs r >= 1");
  if (r > lambda.largest()) return 0;
  const BigInt elements = ipow(p, conj_prefix_sum(lambda, r)) - ipow(p, conj_prefix_sum(lambda, r - 1));
  const BigInt generators = ipow(p, r) - ipow(p, r - 1);
  return exact_div(elements, generators, "subgroup_count_type_r");
}

BigInt subgroups_of_type_oracle(const Partition& lambda, int p, const Partition& mu) {
  return AbelianPGroup(lambda, p).count_subgroups_of_type(mu);
}

IdentityReport verify_sum_identity(int n, int p) {
  require_modulus(p);
  if (n < 0) throw_invalid("verify_sum_identity needs n >= 0");
  Rational lhs(0);
  for (const auto& lambda : enumerate_partitions(n)) lhs += class_weight(lambda, p);
  const Rational rhs = Rational(1) / (Rational::power(p, n) * poch_inv(p, n));
  return make_report("class-weight normalization", lhs, rhs, {{"n", n}, {"p", p}});
}

IdentityReport verify_likemac(int n, const Partition& mu, int p) {
  require_modulus(p);
  if (mu.size() > n) throw_invalid("verify_likemac needs |mu| <= n");
  const bool closed_form = mu.empty() || mu.length() == 1;
  if (!closed_form) require_prime(p);
  Rational lhs(0);
  for (const auto& lambda : enumerate_partitions(n)) {
    BigInt count;
    if (mu.empty())
      count = 1;
    else if (mu.length() == 1)
      count = subgroup_count_type_r(lambda, p, mu.part(1));
    else
      count = subgroups_of_type_oracle(lambda, p, mu);
    lhs += Rational(count) * class_weight(lambda, p);
  }
  const int rest = n - mu.size();
  const Rational rhs = class_weight(mu, p) / (Rational::power(p, rest) * poch_inv(p, rest));
  return make_report("subgroup-type sum identity", lhs, rhs,
                     {{"n", n}, {"p", p}, {"mu", mu.to_string()},
                      {"counts", closed_form ? "closed form" : "subgroup oracle"}});
}

IdentityReport verify_duality(const Partition& lambda, int p, const Partition& mu, const Partition& nu) {
  const AbelianPGroup group(lambda, p);
  const BigInt forward = group.count_subgroups_with(nu, mu);
  const BigInt backward = group.count_subgroups_with(mu, nu);
  return make_report("Hall duality", Rational(forward), Rational(backward),
                     {{"lambda", lambda.to_string()}, {"p", p}, {"mu", mu.to_string()}, {"nu", nu.to_string()}});
}

}  // namespace unispec
