#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "unispec.h"
#include "unispec/arc_stats.hpp"
#include "unispec/growth.hpp"
#include "unispec/jordan.hpp"
#include "unispec/line_action.hpp"
#include "unispec/qseries.hpp"

using namespace unispec;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

int report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %2d: %s (%.1fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              out.note.empty() ? "" : " - ", out.note.c_str());
  std::fflush(stdout);
  return out.ok ? 0 : 1;
}

Outcome census_matches(Model model, const std::pair<int, int>* cases, std::size_t count) {
  Outcome o;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [n, p] = cases[i];
    const auto census = type_census(model, n, p);
    const auto dist = model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
    const unsigned long e = static_cast<unsigned long>(model == Model::GlUnipotent ? n * (n - 1) : n * (n - 1) / 2);
    const BigInt total = ipow(p, e);
    BigInt seen_total = 0;
    for (const auto& [lambda, c] : census) seen_total += BigInt(static_cast<unsigned long>(c));
    o.require(seen_total == total, "census size n=" + std::to_string(n) + " p=" + std::to_string(p));
    for (const auto& [lambda, pr] : dist.probs) {
      const auto it = census.find(lambda);
      const BigInt seen = it == census.end() ? BigInt(0) : BigInt(static_cast<unsigned long>(it->second));
      o.require(Rational(seen) == pr * Rational(total),
                "n=" + std::to_string(n) + " p=" + std::to_string(p) + " lambda=" + lambda.to_string());
    }
    for (const auto& [lambda, c] : census)
      o.require(dist.probs.count(lambda) == 1, "census type missing from distribution " + lambda.to_string());
  }
  return o;
}

}  // namespace

int main() {
  int failed = 0;

  failed += report(1, "class-weight normalization, n <= 12, p in {2,3,5}", [] {
    Outcome o;
    for (int p : {2, 3, 5})
      for (int n = 0; n <= 12; ++n) {
        Rational sum(0);
        for (const auto& lambda : enumerate_partitions(n)) sum += class_weight(lambda, p);
        o.require(sum == Rational(1) / (Rational(ipow(p, static_cast<unsigned long>(n))) * poch_inv(p, n)),
                  "n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
    return o;
  });

  failed += report(2, "unipotent GL(n,p) census equals the exact distribution", [] {
    const std::pair<int, int> cases[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    return census_matches(Model::GlUnipotent, cases, std::size(cases));
  });

  failed += report(3, "T(n,p) census equals the exact distribution", [] {
    const std::pair<int, int> cases[] = {{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}};
    return census_matches(Model::Triangular, cases, std::size(cases));
  });

  failed += report(4, "tableau, chain and flag-fix routes agree", [] {
    Outcome o;
    for (int p : {2, 3})
      for (int n = 1; n <= 8; ++n) {
        const auto dist = triangular_dist(n, p);
        for (const auto& lambda : enumerate_partitions(n)) {
          const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " lambda=" + lambda.to_string();
          o.require(triangular_prob_chain(lambda, p) == dist.prob(lambda), "chain route " + tag);
          if (n <= 4)
            o.require(triangular_prob_from_count(lambda, p, count_fixed_flags(jordan_matrix(lambda, p))) ==
                          dist.prob(lambda),
                      "flag-fix route " + tag);
        }
      }
    return o;
  });

  failed += report(5, "line orbit profile formula equals enumeration, n <= 5, p in {2,3}", [] {
    Outcome o;
    for (int p : {2, 3})
      for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
          const std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p) + " lambda=" + lambda.to_string();
          const auto brute = brute_force_line_orbits(jordan_matrix(lambda, p));
          o.require(orbit_profile_formula(lambda, p) == brute, tag);
          o.require(brute.total_lines() == (ipow(p, static_cast<unsigned long>(n)) - 1) / (p - 1), "total " + tag);
        }
    return o;
  });

  failed += report(6, "mean X_r over unipotent GL(n,p), r <= n <= 10, p in {2,3,5}", [] {
    Outcome o;
    o.require(mean_xr_gl_closed(2, 2, 1) == Rational(3, 2), "spot value 3/2");
    for (int p : {2, 3, 5})
      for (int n = 1; n <= 10; ++n) {
        const auto dist = gl_unipotent_dist(n, p);
        for (int r = 1; r <= n; ++r)
          o.require(mean_xr_exact(dist, r) == mean_xr_gl_closed(n, p, r),
                    "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r));
      }
    return o;
  });

  failed += report(7, "mean X_r over T(n,p), r <= n <= 9, p in {2,3}", [] {
    Outcome o;
    o.require(mean_xr_tn_closed(2, 2, 1) == Rational(2), "spot value 2");
    for (int p : {2, 3})
      for (int n = 1; n <= 9; ++n) {
        const auto dist = triangular_dist(n, p);
        for (int r = 1; r <= n; ++r)
          o.require(mean_xr_exact(dist, r) == mean_xr_tn_closed(n, p, r),
                    "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r));
      }
    return o;
  });

  failed += report(8, "second moment, r <= s, r + s <= n <= 8, p in {2,3}", [] {
    Outcome o;
    o.require(second_moment_gl_closed(2, 2, 1, 1) == Rational(3), "spot value 3");
    int beyond = 0, beyond_equal = 0;
    for (int p : {2, 3})
      for (int n = 1; n <= 8; ++n) {
        const auto dist = gl_unipotent_dist(n, p);
        for (int r = 1; r <= n; ++r)
          for (int s = r; s <= n; ++s) {
            const bool eq = second_moment_exact(dist, r, s) == second_moment_gl_closed(n, p, r, s);
            if (r + s <= n)
              o.require(eq, "n=" + std::to_string(n) + " p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                " s=" + std::to_string(s));
            else {
              ++beyond;
              beyond_equal += eq;
            }
          }
      }
    o.note = o.ok ? "finding: r + s > n agrees in " + std::to_string(beyond_equal) + "/" + std::to_string(beyond) +
                        " cases"
                  : o.note;
    return o;
  });

  failed += report(9, "arc mean within bounds, n <= 8, p in {2,3}, theta in {1/3,1/2,7/10}", [] {
    Outcome o;
    int literal_violations = 0;
    for (Model model : {Model::GlUnipotent, Model::Triangular})
      for (int p : {2, 3})
        for (int n = 1; n <= 8; ++n) {
          const auto dist = model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
          for (const Rational& theta : {Rational(1, 3), Rational(1, 2), Rational(7, 10)}) {
            const ArcMean m = mean_arc(dist, theta);
            o.require(m.lower <= m.exact && m.exact <= m.upper,
                      std::string(model_name(model)) + " n=" + std::to_string(n) + " p=" + std::to_string(p) +
                          " theta=" + theta.to_string());
            if (model == Model::GlUnipotent && m.exact < m.lower_uncorrected) ++literal_violations;
          }
        }
    if (o.ok)
      o.note = "finding: GL lower bound without the fixed-line term fails in " + std::to_string(literal_violations) +
               " cases";
    return o;
  });

  failed += report(10, "division-algorithm sampler TV < 0.01, n=6, p=2, 200000 samples", [] {
    Outcome o;
    const auto emp = empirical_distribution(SamplerSpec::parse("borodin:n=6,p=2"), 200000, 1);
    const double tv = total_variation(emp, triangular_dist(6, 2).probs);
    o.require(tv < 0.01, "tv=" + std::to_string(tv));
    if (o.ok) o.note = "tv=" + std::to_string(tv);
    return o;
  });

  failed += report(11, "coin sampler within 4 sigma, p=2, limit 64, 500000 samples", [] {
    Outcome o;
    const std::uint64_t trials = 500000;
    const auto emp = empirical_distribution(SamplerSpec::parse("coins:p=2,limit=64"), trials, 1);
    for (const Partition& lambda : {Partition(), Partition{1}, Partition{2}, Partition{1, 1}}) {
      const double target = coin_limit_law(lambda, 2).to_double();
      const double sigma = std::sqrt(target * (1 - target) / static_cast<double>(trials));
      const double z = (emp.frequency(lambda) - target) / sigma;
      o.require(std::fabs(z) <= 4, lambda.to_string() + " z=" + std::to_string(z));
    }
    return o;
  });

  failed += report(12, "path products over tableaux sum to the triangular law, n <= 7, p=2", [] {
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
      const auto dist = triangular_dist(n, 2);
      for (const auto& lambda : enumerate_partitions(n)) {
        Rational sum(0);
        for (const auto& t : enumerate_syt(lambda)) {
          Rational path(1);
          for (int j = 1; j <= n; ++j) {
            const auto law = borodin_column_probs(t.subshape(j - 1), 2);
            const auto it = law.find(t.position(j).second);
            path *= it == law.end() ? Rational(0) : it->second;
          }
          sum += path;
        }
        o.require(sum == dist.prob(lambda), "lambda=" + lambda.to_string());
      }
    }
    return o;
  });

  failed += report(13, "verify all through the C API exits clean in under 600 s", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    unispec_verify_options options{};
    options.seed = UNISPEC_DEFAULT_SEED;
    unispec_report* r = nullptr;
    const unispec_status st = unispec_verify("all", &options, &r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(st == UNISPEC_OK, std::string("status ") + std::to_string(st) + ": " + unispec_last_error());
    if (r != nullptr) {
      o.require(unispec_report_passed(r) == 1, std::to_string(unispec_report_failures(r)) + " failed checks");
      if (o.ok) o.note = std::to_string(unispec_report_checks(r)) + " checks";
      unispec_report_free(r);
    }
    o.require(secs < 600, "took " + std::to_string(secs) + " s");
    return o;
  });

  std::printf("%d of 13 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
