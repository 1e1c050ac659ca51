#include "unispec/commands.hpp"

#include <cstdio>

#include "unispec/arc_stats.hpp"
#include "unispec/errors.hpp"
#include "unispec/line_action.hpp"
#include "unispec/qseries.hpp"

namespace unispec {

namespace {

std::string fixed_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* verdict(bool ok, const char* yes, const char* no) { return ok ? yes : no; }

std::string model_reference(Model model) {
  return model == Model::GlUnipotent ? "Jordan type of a uniform unipotent element of GL(n,p)"
                                     : "Jordan type of a uniform element of T(n,p)";
}

Model require_model(const StatsParams& params) {
  if (!params.model) throw_invalid("--model is required");
  return *params.model;
}

void require_np(const StatsParams& params) {
  if (params.n < 1) throw_invalid("--n must be >= 1");
  require_modulus(params.p);
}

}  // namespace

Table dist_table(Model model, int n, int p) {
  const JordanDistribution dist = model == Model::GlUnipotent ? gl_unipotent_dist(n, p) : triangular_dist(n, p);
  Table t;
  t.title = "dist " + std::string(model_name(model)) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
  t.columns = {"partition", "probability", "approximate"};
  for (const auto& [lambda, pr] : dist.probs) t.add_row({lambda.to_string(), pr.to_string(), approx_string(pr)});
  const Rational total = dist.total();
  t.add_row({"total", total.to_string(), approx_string(total)});
  t.footer.push_back(std::string("exact total equals 1: ") + verdict(total == Rational(1), "yes", "NO"));
  t.footer.push_back("quantity: " + model_reference(model));
  return t;
}

Table sample_table(const SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed) {
  const EmpiricalDistribution emp = empirical_distribution(spec, trials, seed);
  Table t;
  t.title = "sample " + spec.to_string() + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);

  std::optional<PartitionMap<Rational>> target;
  std::string target_note;
  if (spec.kind == SamplerSpec::Kind::Borodin) {
    if (spec.n == 0) {
      target = PartitionMap<Rational>{{Partition(), Rational(1)}};
    } else if (spec.n <= limits().max_triangular_dist_n) {
      target = triangular_dist(spec.n, spec.p).probs;
    }
    target_note = "target: exact Jordan-type law of T(n,p)";
  } else {
    // Unobserved partitions of size <= 20 enter the distance; larger ones are the stated tail.
    constexpr int listed = 20;
    PartitionMap<Rational> law;
    Rational listed_mass(0);
    for (int n = 0; n <= listed; ++n)
      for (const auto& lambda : enumerate_partitions(n)) {
        const Rational pr = coin_limit_law(lambda, spec.p);
        listed_mass += pr;
        law.emplace(lambda, pr);
      }
    for (const auto& [lambda, c] : emp.counts)
      if (lambda.size() > listed) law.emplace(lambda, coin_limit_law(lambda, spec.p));
    target = std::move(law);
    target_note = "target: coin-algorithm limit law (1/p)_inf / (p^{sum lambda'^2} prod (1/p)_{m_i}), (1/p)_inf truncated "
                  "after 64 factors; unobserved partitions of size > " + std::to_string(listed) +
                  " carry about " + approx_string(Rational(1) - listed_mass) + " and are left out of the distance";
  }

  if (target) {
    const double tv = total_variation(emp, *target);
    // Coin targets carry 64-factor denominators, so only the float is shown.
    const bool exact_column = spec.kind == SamplerSpec::Kind::Borodin;
    t.columns = {"partition", "count", "frequency"};
    if (exact_column) t.columns.push_back("target");
    t.columns.insert(t.columns.end(), {"target_approximate", "total_variation"});
    for (const auto& [lambda, c] : emp.counts) {
      const auto it = target->find(lambda);
      const Rational pr = it == target->end() ? Rational(0) : it->second;
      std::vector<std::string> row{lambda.to_string(), std::to_string(c), fixed_double(emp.frequency(lambda))};
      if (exact_column) row.push_back(pr.to_string());
      row.insert(row.end(), {approx_string(pr), fixed_double(tv)});
      t.add_row(std::move(row));
    }
    t.footer.push_back(target_note);
  } else {
    t.columns = {"partition", "count", "frequency"};
    for (const auto& [lambda, c] : emp.counts)
      t.add_row({lambda.to_string(), std::to_string(c), fixed_double(emp.frequency(lambda))});
    t.footer.push_back("no exact target tabulated for this n");
  }
  if (spec.kind == SamplerSpec::Kind::Coins) {
    const Rational bound = Rational::power(spec.p, -spec.limit) / Rational(spec.p - 1);
    t.footer.push_back("coin truncation: coins beyond " + std::to_string(spec.limit) +
                       " not flipped; residual head probability <= " + approx_string(bound));
  }
  t.footer.push_back("rng: mt19937_64 seeded by splitmix64, 16 fixed streams");
  return t;
}

namespace {

Table mean_xr_rows(const StatsParams& params) {
  const Model model = require_model(params);
  require_np(params);
  const auto dist = model == Model::GlUnipotent ? gl_unipotent_dist(params.n, params.p) : triangular_dist(params.n, params.p);
  Table t;
  t.title = "stats mean-xr";
  t.columns = {"model", "n", "p", "r", "exact", "closed", "bound_high", "verdict", "approximate"};
  const int lo = params.r > 0 ? params.r : 1;
  const int hi = params.r > 0 ? params.r : params.n;
  for (int r = lo; r <= hi; ++r) {
    const Rational exact = mean_xr_exact(dist, r);
    const Rational closed = model == Model::GlUnipotent ? mean_xr_gl_closed(params.n, params.p, r)
                                                        : mean_xr_tn_closed(params.n, params.p, r);
    t.add_row({std::string(model_name(model)), std::to_string(params.n), std::to_string(params.p), std::to_string(r),
               exact.to_string(), closed.to_string(), "", verdict(exact == closed, "EQUAL", "DIFFER"),
               approx_string(exact)});
  }
  t.footer.push_back(model == Model::GlUnipotent
                         ? "closed form: E[X_r] = p^r (1-p^{-(n-r+1)})...(1-p^{-n}) / (p-1)"
                         : "closed form: E[X_r] = (p-1)^{r-1} binomial(n,r)");
  return t;
}

Table mean_arc_rows(const StatsParams& params) {
  const Model model = require_model(params);
  require_np(params);
  if (!params.theta) throw_invalid("--theta a/b is required");
  const ArcMean m = mean_arc(model, params.n, params.p, *params.theta);
  Table t;
  t.title = "stats mean-arc";
  t.columns = {"model", "n", "p", "theta", "exact", "bound_low", "bound_high", "verdict", "approximate"};
  const bool inside = m.lower <= m.exact && m.exact <= m.upper;
  t.add_row({std::string(model_name(model)), std::to_string(params.n), std::to_string(params.p),
             params.theta->to_string(), m.exact.to_string(), m.lower.to_string(), m.upper.to_string(),
             verdict(inside, "CONTAINED", "OUTSIDE"), approx_string(m.exact)});
  t.footer.push_back("leading term theta (p^n - 1)/(p - 1) = " + m.leading.to_string());
  if (model == Model::GlUnipotent) {
    t.footer.push_back("lower bound includes the -theta E[X_1] fixed-line term; without it: " +
                       m.lower_uncorrected.to_string() + " (" +
                       verdict(m.lower_uncorrected <= m.exact, "still below exact", "ABOVE exact") + ")");
  }
  t.footer.push_back("quantity: mean number of line-permutation eigenvalues in the arc (1, e^{2 pi i theta}]");
  return t;
}

Table second_moment_rows(const StatsParams& params) {
  require_np(params);
  if (params.model && *params.model != Model::GlUnipotent)
    throw_invalid("second-moment closed form exists only for --model gl");
  const auto dist = gl_unipotent_dist(params.n, params.p);
  Table t;
  t.title = "stats second-moment";
  t.columns = {"model", "n", "p", "r_s", "exact", "closed", "bound_high", "verdict", "approximate"};
  std::vector<std::pair<int, int>> pairs;
  if (params.r > 0 && params.s > 0) {
    pairs.emplace_back(params.r, params.s);
  } else {
    for (int r = 1; r <= params.n; ++r)
      for (int s = r; s <= params.n; ++s) pairs.emplace_back(r, s);
  }
  for (const auto& [r, s] : pairs) {
    const Rational exact = second_moment_exact(dist, r, s);
    const Rational closed = second_moment_gl_closed(params.n, params.p, r, s);
    t.add_row({"gl", std::to_string(params.n), std::to_string(params.p), std::to_string(r) + " " + std::to_string(s),
               exact.to_string(), closed.to_string(), "", verdict(exact == closed, "EQUAL", "DIFFER"),
               approx_string(exact)});
  }
  t.footer.push_back("closed form of E[X_r X_s]; products reaching the factor (1 - p^0) read as 0 when r + s > n");
  return t;
}

Table orbit_rows(const StatsParams& params) {
  if (!params.lambda) throw_invalid("--lambda [..] is required");
  require_modulus(params.p);
  const Partition& lambda = *params.lambda;
  const LineOrbitProfile formula = orbit_profile_formula(lambda, params.p);
  std::optional<LineOrbitProfile> brute;
  if (is_prime(params.p) && params.p <= MatrixFp::kMaxPrime && lambda.size() >= 1 &&
      lambda.size() <= MatrixFp::kMaxDim && projective_line_count(lambda.size(), params.p) <= limits().max_lines)
    brute = brute_force_line_orbits(jordan_matrix(lambda, params.p));
  Table t;
  t.title = "stats orbits lambda=" + lambda.to_string() + " p=" + std::to_string(params.p);
  t.columns = {"r", "orbit_size", "lines", "orbits", "brute_force_lines", "verdict"};
  int max_r = formula.lines.empty() ? 0 : formula.lines.rbegin()->first;
  if (brute && !brute->lines.empty()) max_r = std::max(max_r, brute->lines.rbegin()->first);
  for (int r = 0; r <= max_r; ++r) {
    const BigInt lines = formula.lines_at(r);
    std::string brute_text = brute ? brute->lines_at(r).get_str() : "";
    std::string v = brute ? verdict(brute->lines_at(r) == lines, "EQUAL", "DIFFER") : "";
    t.add_row({std::to_string(r), ipow(params.p, static_cast<unsigned long>(r)).get_str(), lines.get_str(),
               formula.orbits(r).get_str(), brute_text, v});
  }
  t.footer.push_back("total lines " + formula.total_lines().get_str() + " = (p^n - 1)/(p - 1)");
  t.footer.push_back("line counts per orbit size; the orbit count is lines / p^r");
  return t;
}

Table xtheta_rows(const StatsParams& params) {
  if (!params.lambda) throw_invalid("--lambda [..] is required");
  if (!params.theta) throw_invalid("--theta a/b is required");
  require_modulus(params.p);
  const Partition& lambda = *params.lambda;
  const BigInt a = x_theta_telescoped(lambda, params.p, *params.theta);
  const BigInt b = x_theta_from_profile(lambda, params.p, *params.theta);
  Table t;
  t.title = "stats xtheta";
  t.columns = {"lambda", "p", "theta", "x_theta", "from_orbit_profile", "verdict"};
  t.add_row({lambda.to_string(), std::to_string(params.p), params.theta->to_string(), a.get_str(), b.get_str(),
             verdict(a == b, "EQUAL", "DIFFER")});
  t.footer.push_back("eigenvalues of the line permutation in the arc (1, e^{2 pi i theta}]");
  return t;
}

}  // namespace

Table stats_table(std::string_view kind, const StatsParams& params) {
  if (kind == "mean-xr") return mean_xr_rows(params);
  if (kind == "mean-arc") return mean_arc_rows(params);
  if (kind == "second-moment") return second_moment_rows(params);
  if (kind == "orbits") return orbit_rows(params);
  if (kind == "xtheta") return xtheta_rows(params);
  throw_invalid("unknown stats kind '" + std::string(kind) + "'");
}

}  // namespace unispec
