#ifndef UNISPEC_JORDAN_HPP
#define UNISPEC_JORDAN_HPP

#include <string_view>

#include "unispec/partition.hpp"
#include "unispec/rational.hpp"
#include "unispec/report.hpp"

namespace unispec {

enum class Model { GlUnipotent, Triangular };

std::string_view model_name(Model model);  // "gl" | "triangular"
/// Accepts "gl", "gl-unipotent" and "triangular".
Model parse_model(std::string_view text);

/// Exact law of the Jordan type of a uniform element of the model.
struct JordanDistribution {
  Model model = Model::GlUnipotent;
  int n = 0;
  int p = 2;
  PartitionMap<Rational> probs;

  /// Probability of lambda; 0 for partitions of other sizes.
  Rational prob(const Partition& lambda) const;
  Rational total() const;
};

/// Uniform unipotent element of GL(n,p):
/// prob(lambda) = p^n (1/p)_n / (p^{sum lambda'^2} prod (1/p)_{m_i}).
JordanDistribution gl_unipotent_dist(int n, int p);

/// The same probability through the principal specialization,
/// p^n (1/p)_n P_lambda(1/p, 1/p^2, ...; 1/p) / p^{n(lambda)}.
Rational gl_unipotent_prob_hl(const Partition& lambda, int p);

/// Uniform element of the unitriangular group T(n,p), tableau-sum route:
/// prob(lambda) = P_lambda(1, 1/p, ...; 1/p) * tableau_weight_sum(lambda, p).
JordanDistribution triangular_dist(int n, int p);

/// sum over standard tableaux S of shape lambda of prod_j (1 - p^{-m*(Lambda_j)}).
/// Evaluated as a sum over growth paths by memoised recursion over subshapes.
Rational tableau_weight_sum(const Partition& lambda, int p);

/// Triangular probability through maximal subgroup chains:
/// (p-1)^n hl_principal(lambda) chain_count(lambda) / p^{n(lambda)}.
Rational triangular_prob_chain(const Partition& lambda, int p);

/// Triangular probability from any flag/chain count c:
/// (p-1)^n hl_principal(lambda) c / p^{n(lambda)}.
Rational triangular_prob_from_count(const Partition& lambda, int p, const BigInt& count);

/// Maximal chains of subgroups in the abelian p-group of type lambda,
/// p^{n(lambda)} (1 - 1/p)^{-n} tableau_weight_sum(lambda, p). Throws
/// InvariantViolation if that rational is not an integer.
BigInt chain_count(const Partition& lambda, int p);

/// Subgroups of type (r): (p^{lambda'_1+..+lambda'_r} - p^{lambda'_1+..+lambda'_{r-1}}) / (p^r - p^{r-1}).
BigInt subgroup_count_type_r(const Partition& lambda, int p, int r);

/// Brute-force count of subgroups of type mu in G_lambda.
BigInt subgroups_of_type_oracle(const Partition& lambda, int p, const Partition& mu);

/// sum_{lambda |- n} class_weight(lambda) against 1 / (p^n (1/p)_n).
IdentityReport verify_sum_identity(int n, int p);

/// sum_{lambda |- n} #{G_1 <= G_lambda of type mu} class_weight(lambda) against
/// class_weight(mu) / (p^{n-|mu|} (1/p)_{n-|mu|}). Counts come from the
/// closed form when mu = (r) and from the subgroup oracle otherwise.
IdentityReport verify_likemac(int n, const Partition& mu, int p);

/// #{G_1 : G/G_1 = mu, G_1 = nu} against #{G_1 : G/G_1 = nu, G_1 = mu}.
IdentityReport verify_duality(const Partition& lambda, int p, const Partition& mu, const Partition& nu);

}  // namespace unispec

#endif  // UNISPEC_JORDAN_HPP
