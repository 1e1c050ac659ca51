#ifndef UNISPEC_QSERIES_HPP
#define UNISPEC_QSERIES_HPP

#include <span>

#include "unispec/limits.hpp"
#include "unispec/partition.hpp"
#include "unispec/rational.hpp"

namespace unispec {

/// (1/p)_r = (1 - 1/p)(1 - 1/p^2)...(1 - 1/p^r); r = 0 gives 1.
Rational poch_inv(int p, int r);

/// Truncation of (1/p)_infinity with its error bound.
struct EulerTruncation {
  Rational value;        ///< (1/p)_terms
  Rational error_bound;  ///< p^{-terms}; strictly exceeds |(1/p)_inf - value|
};

EulerTruncation euler_inf(int p, int terms);

/// 1 / (p^{sum lambda'_i^2} prod_i (1/p)_{m_i(lambda)}): the per-class weight
/// shared by the unipotent class sizes and the p-group identities.
Rational class_weight(const Partition& lambda, int p);

/// P_lambda(1/p, 1/p^2, ...; 1/p) from the closed-form principal specialization.
Rational hl_principal(const Partition& lambda, int p);

/// P_lambda(1, 1/p, 1/p^2, ...; 1/p) = p^{|lambda|} * hl_principal.
Rational hl_principal_shifted(const Partition& lambda, int p);

/// Hall-Littlewood polynomial P_lambda(x_1..x_m; t) evaluated exactly through
/// the sum over distinct rearrangements of lambda (the S_m / S_m^lambda coset
/// form). Repeated x values are handled by exact polynomial interpolation
/// along a line through the point.
Rational hl_evaluate(const Partition& lambda, std::span<const Rational> xs, const Rational& t,
                     int max_variables = limits().max_hl_variables);

/// The full symmetrized form: (1/v_lambda(t)) sum_{w in S_m} w(x^lambda prod_{i<j}
/// (x_i - t x_j)/(x_i - x_j)). Requires pairwise distinct xs. Factorial cost;
/// used to cross-check hl_evaluate.
Rational hl_evaluate_symmetrized(const Partition& lambda, std::span<const Rational> xs, const Rational& t,
                                 int max_variables = limits().max_hl_variables);

}  // namespace unispec

#endif  // UNISPEC_QSERIES_HPP
