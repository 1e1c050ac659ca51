#include "unispec/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cmath>
#include <functional>
#include <thread>

#include "unispec/arc_stats.hpp"
#include "unispec/errors.hpp"
#include "unispec/growth.hpp"
#include "unispec/jordan.hpp"
#include "unispec/line_action.hpp"
#include "unispec/pgroup.hpp"
#include "unispec/qseries.hpp"

namespace unispec {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed && !c.finding; }));
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["options"] = {{"n_max", options.n_max}, {"n", options.n}, {"primes", options.primes},
                  {"trials", options.trials}, {"seed", options.seed}};
  j["passed"] = passed();
  const auto findings = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.finding; });
  j["summary"] = {{"checks", checks.size()}, {"failures", failures()}, {"findings", findings}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["reference"] = c.reference;
    e["name"] = c.name;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["verdict"] = c.finding ? (c.passed ? "finding: holds" : "finding: fails") : (c.passed ? "pass" : "FAIL");
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

namespace {

using Checks = std::vector<CheckResult>;
using Task = std::function<Checks()>;

std::string np_name(int n, int p) { return "n=" + std::to_string(n) + " p=" + std::to_string(p); }

CheckResult exact_check(std::string reference, std::string name, const Rational& lhs, const Rational& rhs) {
  CheckResult c{std::move(reference), std::move(name), lhs.to_string(), rhs.to_string(), lhs == rhs, false, {}};
  return c;
}

struct Scope {
  const VerifyOptions& opt;

  // Sizes for closed-form checks: n_max replaces the default.
  std::vector<int> formula_sizes(int default_max, int lo = 1) const {
    if (opt.n > 0) return {opt.n};
    const int hi = opt.n_max > 0 ? opt.n_max : default_max;
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  // Sizes for brute-force checks: n_max can only shrink the default.
  std::vector<int> oracle_sizes(int default_max, int lo = 1) const {
    if (opt.n > 0) return {opt.n};
    const int hi = opt.n_max > 0 ? std::min(opt.n_max, default_max) : default_max;
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::vector<int> primes(std::vector<int> defaults) const { return opt.primes.empty() ? defaults : opt.primes; }
  std::vector<std::pair<int, int>> pairs(const std::vector<std::pair<int, int>>& defaults) const {
    std::vector<std::pair<int, int>> out;
    if (opt.n > 0) {
      for (int p : primes({2, 3})) out.emplace_back(opt.n, p);
      return out;
    }
    for (const auto& [n, p] : defaults) {
      if (opt.n_max > 0 && n > opt.n_max) continue;
      if (!opt.primes.empty() && std::find(opt.primes.begin(), opt.primes.end(), p) == opt.primes.end()) continue;
      out.emplace_back(n, p);
    }
    return out;
  }
};

Task guarded(std::string reference, std::string name, std::function<Checks()> body) {
  return [reference = std::move(reference), name = std::move(name), body = std::move(body)]() -> Checks {
    try {
      return body();
    } catch (const std::exception& e) {
      return {CheckResult{reference, name, "error", "", false, false, e.what()}};
    }
  };
}

std::string census_text(const PartitionMap<std::uint64_t>& census) {
  std::string out;
  for (const auto& [lambda, c] : census) out += (out.empty() ? "" : " ") + lambda.to_string() + ":" + std::to_string(c);
  return out;
}

void add_identity_tasks(const Scope& s, std::vector<Task>& tasks) {
  for (int p : s.primes({2, 3, 5}))
    for (int n : s.formula_sizes(12)) {
      tasks.push_back(guarded("class-weight normalization", np_name(n, p), [n, p] {
        const auto r = verify_sum_identity(n, p);
        return Checks{exact_check(r.reference, np_name(n, p), r.lhs, r.rhs)};
      }));
    }

  for (int p : s.primes({2, 3, 5}))
    for (int n : s.formula_sizes(10)) {
      tasks.push_back(guarded("unipotent class probability: two forms", np_name(n, p), [n, p] {
        const auto dist = gl_unipotent_dist(n, p);
        long mismatches = 0;
        for (const auto& [lambda, pr] : dist.probs) mismatches += (gl_unipotent_prob_hl(lambda, p) != pr);
        return Checks{exact_check("unipotent class probability: two forms", np_name(n, p), Rational(mismatches),
                                  Rational(0))};
      }));
    }

  for (int p : s.primes({2, 3, 5}))
    for (int n : s.formula_sizes(10)) {
      tasks.push_back(guarded("distribution normalization", np_name(n, p), [n, p] {
        Checks out;
        out.push_back(exact_check("distribution normalization", "gl " + np_name(n, p), gl_unipotent_dist(n, p).total(),
                                  Rational(1)));
        out.push_back(exact_check("distribution normalization", "triangular " + np_name(n, p),
                                  triangular_dist(n, p).total(), Rational(1)));
        return out;
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8)) {
      tasks.push_back(guarded("triangular probability: tableau and chain routes", np_name(n, p), [n, p] {
        const auto dist = triangular_dist(n, p);
        long mismatches = 0;
        for (const auto& [lambda, pr] : dist.probs) mismatches += (triangular_prob_chain(lambda, p) != pr);
        return Checks{exact_check("triangular probability: tableau and chain routes", np_name(n, p),
                                  Rational(mismatches), Rational(0))};
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8))
      for (int r = 1; r <= n; ++r) {
        const std::string name = np_name(n, p) + " mu=(" + std::to_string(r) + ")";
        tasks.push_back(guarded("subgroup-type sum identity", name, [n, p, r, name] {
          const auto rep = verify_likemac(n, Partition{r}, p);
          return Checks{exact_check(rep.reference, name, rep.lhs, rep.rhs)};
        }));
      }

  // General mu through the subgroup oracle.
  for (int p : s.primes({2})) {
    if (!is_prime(p)) continue;
    for (int n : s.oracle_sizes(p == 2 ? 4 : 3))
      for (int k = 2; k <= n; ++k)
        for (const auto& mu : enumerate_partitions(k)) {
          if (mu.length() < 2) continue;
          const std::string name = np_name(n, p) + " mu=" + mu.to_string();
          tasks.push_back(guarded("subgroup-type sum identity", name, [n, p, mu, name] {
            const auto rep = verify_likemac(n, mu, p);
            return Checks{exact_check(rep.reference, name, rep.lhs, rep.rhs)};
          }));
        }
  }

  for (int p : s.primes({2})) {
    if (!is_prime(p)) continue;
    for (int n : s.oracle_sizes(p == 2 ? 4 : 3))
      for (const auto& lambda : enumerate_partitions(n)) {
        const std::string name = "lambda=" + lambda.to_string() + " p=" + std::to_string(p);
        tasks.push_back(guarded("Hall duality", name, [lambda, p, n, name] {
          Checks out;
          const AbelianPGroup group(lambda, p);
          for (int k = 0; k <= n; ++k)
            for (const auto& mu : enumerate_partitions(k))
              for (const auto& nu : enumerate_partitions(n - k)) {
                if (!(mu < nu)) continue;
                const BigInt a = group.count_subgroups_with(nu, mu);
                const BigInt b = group.count_subgroups_with(mu, nu);
                out.push_back(exact_check("Hall duality", name + " mu=" + mu.to_string() + " nu=" + nu.to_string(),
                                          Rational(a), Rational(b)));
              }
          return out;
        }));
      }
  }

  for (int p : s.primes({2, 3, 5}))
    for (int n : s.formula_sizes(10)) {
      tasks.push_back(guarded("mean X_r over unipotent GL(n,p)", np_name(n, p), [n, p] {
        Checks out;
        const auto dist = gl_unipotent_dist(n, p);
        for (int r = 1; r <= n; ++r)
          out.push_back(exact_check("mean X_r over unipotent GL(n,p)", np_name(n, p) + " r=" + std::to_string(r),
                                    mean_xr_exact(dist, r), mean_xr_gl_closed(n, p, r)));
        return out;
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(9)) {
      tasks.push_back(guarded("mean X_r over T(n,p)", np_name(n, p), [n, p] {
        Checks out;
        const auto dist = triangular_dist(n, p);
        for (int r = 1; r <= n; ++r)
          out.push_back(exact_check("mean X_r over T(n,p)", np_name(n, p) + " r=" + std::to_string(r),
                                    mean_xr_exact(dist, r), mean_xr_tn_closed(n, p, r)));
        return out;
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8)) {
      tasks.push_back(guarded("expected total line count", np_name(n, p), [n, p] {
        Checks out;
        const Rational lines(ipow(p, static_cast<unsigned long>(n)) - 1, BigInt(p - 1));
        for (Model model : {Model::GlUnipotent, Model::Triangular}) {
          const auto dist = model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
          Rational sum(0);
          for (int r = 1; r <= n; ++r) sum += mean_xr_exact(dist, r);
          out.push_back(exact_check("expected total line count", std::string(model_name(model)) + " " + np_name(n, p),
                                    sum, lines));
        }
        return out;
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8)) {
      tasks.push_back(guarded("second moment E[X_r X_s] over unipotent GL(n,p)", np_name(n, p), [n, p] {
        Checks out;
        const auto dist = gl_unipotent_dist(n, p);
        for (int r = 1; r <= n; ++r)
          for (int sv = r; sv <= n; ++sv) {
            const std::string name = np_name(n, p) + " r=" + std::to_string(r) + " s=" + std::to_string(sv);
            auto c = exact_check(r + sv <= n ? "second moment E[X_r X_s] over unipotent GL(n,p)"
                                             : "second moment E[X_r X_s] with r + s > n",
                                 name, second_moment_exact(dist, r, sv), second_moment_gl_closed(n, p, r, sv));
            c.finding = r + sv > n;
            out.push_back(std::move(c));
          }
        return out;
      }));
    }

  const std::vector<Rational> thetas{Rational(1, 3), Rational(1, 2), Rational(7, 10)};
  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8)) {
      tasks.push_back(guarded("arc mean bounds", np_name(n, p), [n, p, thetas] {
        Checks out;
        for (Model model : {Model::GlUnipotent, Model::Triangular}) {
          const auto dist = model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
          for (const auto& theta : thetas) {
            const ArcMean m = mean_arc(dist, theta);
            const std::string name =
                std::string(model_name(model)) + " " + np_name(n, p) + " theta=" + theta.to_string();
            CheckResult c{"arc mean bounds", name, m.exact.to_string(),
                          "[" + m.lower.to_string() + ", " + m.upper.to_string() + "]",
                          m.lower <= m.exact && m.exact <= m.upper, false, {}};
            out.push_back(std::move(c));
            if (model == Model::GlUnipotent) {
              CheckResult f{"arc lower bound without the fixed-line term", name, m.exact.to_string(),
                            ">= " + m.lower_uncorrected.to_string(), m.lower_uncorrected <= m.exact, true, {}};
              out.push_back(std::move(f));
            }
          }
        }
        return out;
      }));
    }

  for (int p : s.primes({2, 3}))
    for (int n : s.formula_sizes(8)) {
      tasks.push_back(guarded("arc eigenvalue count: telescoped and orbit routes", np_name(n, p), [n, p] {
        Rng rng(0xa11ce + static_cast<std::uint64_t>(n) * 31 + static_cast<std::uint64_t>(p));
        long mismatches = 0;
        long evaluations = 0;
        for (int k = 0; k < 50; ++k) {
          const long den = 2 + static_cast<long>(rng.below(std::uint64_t{999}));
          const long num = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(den - 1)));
          const Rational theta(num, den);
          for (const auto& lambda : enumerate_partitions(n)) {
            mismatches += x_theta_telescoped(lambda, p, theta) != x_theta_from_profile(lambda, p, theta);
            ++evaluations;
          }
        }
        auto c = exact_check("arc eigenvalue count: telescoped and orbit routes", np_name(n, p), Rational(mismatches),
                             Rational(0));
        c.detail = std::to_string(evaluations) + " evaluations";
        return Checks{c};
      }));
    }

  for (int p : s.primes({2}))
    for (int n : s.formula_sizes(7)) {
      tasks.push_back(guarded("division-algorithm path sum", np_name(n, p), [n, p] {
        Checks out;
        const auto dist = triangular_dist(n, p);
        for (const auto& lambda : enumerate_partitions(n)) {
          Rational sum(0);
          for (const auto& tableau : enumerate_syt(lambda)) {
            Rational path(1);
            for (int j = 1; j <= n; ++j) {
              const Partition before = tableau.subshape(j - 1);
              const auto law = borodin_column_probs(before, p);
              const auto it = law.find(tableau.position(j).second);
              path *= it == law.end() ? Rational(0) : it->second;
            }
            sum += path;
          }
          out.push_back(exact_check("division-algorithm path sum", np_name(n, p) + " lambda=" + lambda.to_string(), sum,
                                    dist.prob(lambda)));
        }
        return out;
      }));
    }

  for (int p : s.primes({2, 3})) {
    tasks.push_back(guarded("division-algorithm column law", "p=" + std::to_string(p), [p, &s] {
      long bad = 0;
      for (int n : s.formula_sizes(12, 0))
        for (const auto& lambda : enumerate_partitions(n)) {
          Rational total(0);
          for (const auto& [col, pr] : borodin_column_probs(lambda, p)) {
            if (pr <= Rational(0)) ++bad;
            total += pr;
          }
          if (total != Rational(1)) ++bad;
        }
      return Checks{exact_check("division-algorithm column law", "p=" + std::to_string(p), Rational(bad), Rational(0))};
    }));
  }
}

void add_oracle_tasks(const Scope& s, std::vector<Task>& tasks) {
  for (const auto& [n, p] : s.pairs({{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
    tasks.push_back(guarded("unipotent GL(n,p) census", np_name(n, p), [n, p] {
      const auto census = type_census(Model::GlUnipotent, n, p);
      const auto dist = gl_unipotent_dist(n, p);
      const BigInt total = ipow(p, static_cast<unsigned long>(n * (n - 1)));
      PartitionMap<std::uint64_t> predicted;
      bool integral = true;
      for (const auto& [lambda, pr] : dist.probs) {
        const Rational c = pr * Rational(total);
        integral = integral && c.is_integer();
        predicted[lambda] = c.num().get_ui();
      }
      CheckResult r{"unipotent GL(n,p) census", np_name(n, p), census_text(census), census_text(predicted),
                    integral && census == predicted, false, {}};
      return Checks{r};
    }));
  }

  for (const auto& [n, p] : s.pairs({{2, 2}, {3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3}})) {
    tasks.push_back(guarded("T(n,p) census", np_name(n, p), [n, p] {
      const auto census = type_census(Model::Triangular, n, p);
      const auto dist = triangular_dist(n, p);
      const BigInt total = ipow(p, static_cast<unsigned long>(n * (n - 1) / 2));
      PartitionMap<std::uint64_t> predicted;
      bool integral = true;
      for (const auto& [lambda, pr] : dist.probs) {
        const Rational c = pr * Rational(total);
        integral = integral && c.is_integer();
        if (c != Rational(0)) predicted[lambda] = c.num().get_ui();
      }
      CheckResult r{"T(n,p) census", np_name(n, p), census_text(census), census_text(predicted),
                    integral && census == predicted, false, {}};
      return Checks{r};
    }));
  }

  for (int p : s.primes({2, 3}))
    for (int n : s.oracle_sizes(5)) {
      tasks.push_back(guarded("line orbit profile", np_name(n, p), [n, p] {
        Checks out;
        const BigInt total_lines = (ipow(p, static_cast<unsigned long>(n)) - 1) / (p - 1);
        for (const auto& lambda : enumerate_partitions(n)) {
          const auto formula = orbit_profile_formula(lambda, p);
          const auto brute = brute_force_line_orbits(jordan_matrix(lambda, p));
          auto text = [](const LineOrbitProfile& prof) {
            std::string t;
            for (const auto& [r, c] : prof.lines) t += (t.empty() ? "" : " ") + std::to_string(r) + ":" + c.get_str();
            return t;
          };
          const bool ok = formula == brute && brute.total_lines() == total_lines;
          out.push_back(CheckResult{"line orbit profile", np_name(n, p) + " lambda=" + lambda.to_string(), text(brute),
                                    text(formula), ok, false, {}});
        }
        return out;
      }));
    }

  for (int p : s.primes({2, 3})) {
    if (p > 3) continue;
    for (int n : s.oracle_sizes(4)) {
      tasks.push_back(guarded("triangular probability: flag-fix route", np_name(n, p), [n, p] {
        Checks out;
        const auto dist = triangular_dist(n, p);
        for (const auto& lambda : enumerate_partitions(n)) {
          const BigInt flags = count_fixed_flags(jordan_matrix(lambda, p));
          out.push_back(exact_check("triangular probability: flag-fix route",
                                    np_name(n, p) + " lambda=" + lambda.to_string(),
                                    triangular_prob_from_count(lambda, p, flags), dist.prob(lambda)));
        }
        return out;
      }));
    }
  }

  for (int p : s.primes({2, 3})) {
    if (!is_prime(p)) continue;
    for (int n : s.oracle_sizes(p == 2 ? 4 : 3)) {
      tasks.push_back(guarded("maximal subgroup chains", np_name(n, p), [n, p] {
        Checks out;
        for (const auto& lambda : enumerate_partitions(n)) {
          const AbelianPGroup group(lambda, p);
          out.push_back(exact_check("maximal subgroup chains", np_name(n, p) + " lambda=" + lambda.to_string(),
                                    Rational(chain_count(lambda, p)), Rational(group.count_maximal_chains())));
          for (int r = 1; r <= lambda.largest(); ++r)
            out.push_back(exact_check("subgroups of cyclic type (r)",
                                      np_name(n, p) + " lambda=" + lambda.to_string() + " r=" + std::to_string(r),
                                      Rational(subgroup_count_type_r(lambda, p, r)),
                                      Rational(group.count_subgroups_of_type(Partition{r}))));
        }
        return out;
      }));
    }
  }
}

void add_sampler_tasks(const Scope& s, std::vector<Task>& tasks) {
  const std::uint64_t seed = s.opt.seed;
  const std::uint64_t borodin_trials = s.opt.trials > 0 ? s.opt.trials : 200000;
  const std::uint64_t coin_trials = s.opt.trials > 0 ? s.opt.trials : 500000;
  tasks.push_back(guarded("division-algorithm sampler", "n=6 p=2", [seed, borodin_trials] {
    const auto emp = empirical_distribution(SamplerSpec::parse("borodin:n=6,p=2"), borodin_trials, seed);
    const double tv = total_variation(emp, triangular_dist(6, 2).probs);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", tv);
    return Checks{CheckResult{"division-algorithm sampler", "n=6 p=2 total variation", buf, "< 0.01", tv < 0.01,
                              false, std::to_string(borodin_trials) + " trials"}};
  }));
  tasks.push_back(guarded("coin sampler limit law", "p=2 limit=64", [seed, coin_trials] {
    Checks out;
    const auto emp = empirical_distribution(SamplerSpec::parse("coins:p=2,limit=64"), coin_trials, seed);
    for (const Partition& lambda : {Partition(), Partition{1}, Partition{2}, Partition{1, 1}}) {
      const double target = coin_limit_law(lambda, 2).to_double();
      const double sigma = std::sqrt(target * (1 - target) / static_cast<double>(coin_trials));
      const double freq = emp.frequency(lambda);
      char lhs[64], rhs[96];
      std::snprintf(lhs, sizeof lhs, "%.6f", freq);
      std::snprintf(rhs, sizeof rhs, "%.6f +- 4 * %.6f", target, sigma);
      out.push_back(CheckResult{"coin sampler limit law", "p=2 lambda=" + lambda.to_string(), lhs, rhs,
                                std::fabs(freq - target) <= 4 * sigma, false,
                                std::to_string(coin_trials) + " trials"});
    }
    return out;
  }));
}

}  // namespace

VerifyReport run_verification(std::string_view suite, const VerifyOptions& options) {
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "oracle" && suite != "samplers")
    throw_invalid("unknown verify suite '" + std::string(suite) + "', expected identities, oracle, samplers or all");
  for (int p : options.primes) require_modulus(p);
  if (options.n < 0 || options.n_max < 0) throw_invalid("n and n-max must be nonnegative");

  const Scope scope{options};
  std::vector<Task> tasks;
  if (all || suite == "identities") add_identity_tasks(scope, tasks);
  if (all || suite == "oracle") add_oracle_tasks(scope, tasks);
  if (all || suite == "samplers") add_sampler_tasks(scope, tasks);

  std::vector<Checks> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1U, std::min(std::thread::hardware_concurrency(), 8U));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    });
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.suite = std::string(suite);
  report.options = options;
  for (auto& r : results)
    for (auto& c : r) report.checks.push_back(std::move(c));
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.reference < b.reference; });
  return report;
}

}  // namespace unispec
