#ifndef UNISPEC_ARC_STATS_HPP
#define UNISPEC_ARC_STATS_HPP

#include "unispec/jordan.hpp"
#include "unispec/partition.hpp"
#include "unispec/rational.hpp"

namespace unispec {

/// X_r(lambda) = (p^{lambda'_1+..+lambda'_r} - p^{lambda'_1+..+lambda'_{r-1}}) / (p - 1).
BigInt x_r(const Partition& lambda, int p, int r);

/// Eigenvalues of the line permutation in the arc (1, e^{2 pi i theta}],
/// through the telescoped X_r decomposition.
BigInt x_theta_telescoped(const Partition& lambda, int p, const Rational& theta);

/// The same count from the orbit profile: sum_r (lines_r / p^r) floor(p^r theta).
BigInt x_theta_from_profile(const Partition& lambda, int p, const Rational& theta);

/// Both routes; throws InvariantViolation if they disagree. 0 < theta < 1.
BigInt x_theta(const Partition& lambda, int p, const Rational& theta);

/// E[X_r] by exact summation over the distribution.
Rational mean_xr_exact(const JordanDistribution& dist, int r);
Rational mean_xr_exact(Model model, int n, int p, int r);

/// p^r (1 - p^{-(n-r+1)}) ... (1 - p^{-n}) / (p - 1), 1 <= r <= n.
Rational mean_xr_gl_closed(int n, int p, int r);

/// (p - 1)^{r-1} binomial(n, r), 1 <= r <= n.
Rational mean_xr_tn_closed(int n, int p, int r);

struct ArcMean {
  Rational exact;    ///< E[X^theta] by summation
  Rational leading;  ///< theta (p^n - 1)/(p - 1); also the upper bound
  Rational lower;
  Rational upper;
  /// GL only: leading - sum_r E[lines_r]/p^r without the theta E[X_1]
  /// correction. Not a valid bound for small n; kept for reporting.
  Rational lower_uncorrected;
};

/// GL lower bound: leading - theta E[X_1] - sum_{r>=1} E[X_{p^{r-1}+1} + .. + X_{p^r}] / p^r,
/// with the expectations from mean_xr_gl_closed.
/// Triangular lower bound: leading - p sum_{r=1}^n (p-1)^{r-1} binomial(n,r) / r.
ArcMean mean_arc(Model model, int n, int p, const Rational& theta);
ArcMean mean_arc(const JordanDistribution& dist, const Rational& theta);

/// Closed form of E[X_r X_s] over unipotent GL(n,p), 1 <= r <= s <= n.
/// A product (1 - p^{-a}) ... (1 - p^{-n}) with a <= 0 contains the factor
/// 1 - p^0 and is 0.
Rational second_moment_gl_closed(int n, int p, int r, int s);

/// E[X_r X_s] by exact summation.
Rational second_moment_exact(const JordanDistribution& dist, int r, int s);

/// Validates 0 < theta < 1.
void require_theta(const Rational& theta);

}  // namespace unispec

#endif  // UNISPEC_ARC_STATS_HPP
