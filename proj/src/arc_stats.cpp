#include "unispec/arc_stats.hpp"

#include "unispec/errors.hpp"
#include "unispec/line_action.hpp"

namespace unispec {

namespace {

// (1 - p^{-lo}) ... (1 - p^{-n}); empty when lo > n, zero when lo <= 0.
Rational tail_product(int p, long lo, long n) {
  if (lo <= 0) return Rational(0);
  Rational out(1);
  for (long k = lo; k <= n; ++k) out *= Rational(1) - Rational::power(p, -k);
  return out;
}

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

JordanDistribution model_dist(Model model, int n, int p) {
  return model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
}

void require_r_range(int n, int r, const char* what) {
  if (r < 1 || r > n)
    throw_invalid(std::string(what) + " needs 1 <= r <= n (r=" + std::to_string(r) + ", n=" + std::to_string(n) + ")");
}

}  // namespace

void require_theta(const Rational& theta) {
  if (theta <= Rational(0) || theta >= Rational(1))
    throw_invalid("theta must lie strictly between 0 and 1, got " + theta.to_string());
}

BigInt x_r(const Partition& lambda, int p, int r) {
  require_modulus(p);
  if (r < 1) throw_invalid("x_r needs r >= 1");
  if (r > lambda.size()) return 0;
  const BigInt diff = ipow(p, conj_prefix_sum(lambda, r)) - ipow(p, conj_prefix_sum(lambda, r - 1));
  return exact_div(diff, BigInt(p - 1), "x_r");
}

BigInt x_theta_telescoped(const Partition& lambda, int p, const Rational& theta) {
  require_modulus(p);
  require_theta(theta);
  // X_1 floor(theta) vanishes for 0 < theta < 1, so only r >= 1 blocks contribute.
  Rational total(0);
  long lo = 1;  // p^{r-1}
  for (unsigned long r = 1; lo < lambda.largest(); ++r) {
    const long hi = lo * p;
    BigInt block = 0;
    for (long i = lo + 1; i <= hi && i <= lambda.size(); ++i) block += x_r(lambda, p, static_cast<int>(i));
    const Rational scale = Rational::power(p, static_cast<long>(r));
    total += Rational(block) / scale * Rational((scale * theta).floor());
    lo = hi;
  }
  if (!total.is_integer()) throw_invariant("telescoped X^theta is not an integer");
  return total.num();
}

BigInt x_theta_from_profile(const Partition& lambda, int p, const Rational& theta) {
  require_theta(theta);
  const LineOrbitProfile profile = orbit_profile_formula(lambda, p);
  BigInt total = 0;
  for (const auto& [r, lines] : profile.lines) {
    if (r == 0) continue;
    const Rational scaled = Rational::power(p, r) * theta;
    total += profile.orbits(r) * scaled.floor();
  }
  return total;
}

BigInt x_theta(const Partition& lambda, int p, const Rational& theta) {
  const BigInt a = x_theta_telescoped(lambda, p, theta);
  const BigInt b = x_theta_from_profile(lambda, p, theta);
  if (a != b)
    throw_invariant("X^theta routes disagree for " + lambda.to_string() + ": " + a.get_str() + " vs " + b.get_str());
  return a;
}

Rational mean_xr_exact(const JordanDistribution& dist, int r) {
  if (r < 1) throw_invalid("mean_xr_exact needs r >= 1");
  Rational sum(0);
  for (const auto& [lambda, pr] : dist.probs) sum += pr * Rational(x_r(lambda, dist.p, r));
  return sum;
}

Rational mean_xr_exact(Model model, int n, int p, int r) {
  return mean_xr_exact(model_dist(model, n, p), r);
}

Rational mean_xr_gl_closed(int n, int p, int r) {
  require_modulus(p);
  require_r_range(n, r, "mean_xr_gl_closed");
  return Rational::power(p, r) * tail_product(p, n - r + 1, n) / Rational(p - 1);
}

Rational mean_xr_tn_closed(int n, int p, int r) {
  require_modulus(p);
  require_r_range(n, r, "mean_xr_tn_closed");
  return Rational(ipow(p - 1, static_cast<unsigned long>(r - 1)) * binomial(n, r));
}

ArcMean mean_arc(const JordanDistribution& dist, const Rational& theta) {
  require_theta(theta);
  const int n = dist.n;
  const int p = dist.p;
  ArcMean out;
  for (const auto& [lambda, pr] : dist.probs) out.exact += pr * Rational(x_theta(lambda, p, theta));
  out.leading = theta * Rational(ipow(p, static_cast<unsigned long>(n)) - 1, BigInt(p - 1));
  out.upper = out.leading;

  if (dist.model == Model::GlUnipotent) {
    auto expect = [&](long i) { return i > n ? Rational(0) : mean_xr_gl_closed(n, p, static_cast<int>(i)); };
    Rational blocks(0);
    long lo = 1;
    for (long r = 1; lo + 1 <= n; ++r) {
      const long hi = lo * p;
      Rational block(0);
      for (long i = lo + 1; i <= hi && i <= n; ++i) block += expect(i);
      blocks += block / Rational::power(p, r);
      lo = hi;
    }
    out.lower_uncorrected = out.leading - blocks;
    out.lower = out.lower_uncorrected - theta * expect(1);
  } else {
    Rational slack(0);
    for (int r = 1; r <= n; ++r) slack += mean_xr_tn_closed(n, p, r) / Rational(r);
    out.lower = out.leading - Rational(p) * slack;
    out.lower_uncorrected = out.lower;
  }
  return out;
}

ArcMean mean_arc(Model model, int n, int p, const Rational& theta) {
  require_theta(theta);
  return mean_arc(model_dist(model, n, p), theta);
}

Rational second_moment_gl_closed(int n, int p, int r, int s) {
  require_modulus(p);
  if (r < 1 || r > s || s > n) throw_invalid("second_moment_gl_closed needs 1 <= r <= s <= n");
  Rational bracket = Rational(p, p - 1) * tail_product(p, n - s - r + 1, n);
  for (int a = 0; a < r; ++a) bracket += tail_product(p, n - a - s + 1, n);
  return Rational::power(p, r + s - 1) / Rational(p - 1) * bracket;
}

Rational second_moment_exact(const JordanDistribution& dist, int r, int s) {
  if (r < 1 || s < 1) throw_invalid("second_moment_exact needs r, s >= 1");
  Rational sum(0);
  for (const auto& [lambda, pr] : dist.probs)
    sum += pr * Rational(x_r(lambda, dist.p, r) * x_r(lambda, dist.p, s));
  return sum;
}

}  // namespace unispec
