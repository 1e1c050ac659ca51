#include "unispec/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "unispec/errors.hpp"

namespace unispec {

Rational poch_inv(int p, int r) {
  require_modulus(p);
  if (r < 0) throw_invalid("poch_inv needs r >= 0");
  Rational out(1);
  for (int i = 1; i <= r; ++i) out *= Rational(1) - Rational::power(p, -i);
  return out;
}

EulerTruncation euler_inf(int p, int terms) {
  return {poch_inv(p, terms), Rational::power(p, -terms)};
}

Rational class_weight(const Partition& lambda, int p) {
  require_modulus(p);
  Rational den = Rational::power(p, conj_square_sum(lambda));
  for (const auto& [part, mult] : multiplicities(lambda)) den *= poch_inv(p, mult);
  return Rational(1) / den;
}

Rational hl_principal(const Partition& lambda, int p) {
  return Rational::power(p, n_stat(lambda)) * class_weight(lambda, p);
}

Rational hl_principal_shifted(const Partition& lambda, int p) {
  return Rational::power(p, lambda.size()) * hl_principal(lambda, p);
}

namespace {

void check_hl_args(const Partition& lambda, std::span<const Rational> xs, int max_variables) {
  if (static_cast<int>(xs.size()) > max_variables)
    throw_bound("Hall-Littlewood evaluation limited to " + std::to_string(max_variables) + " variables");
  if (lambda.length() > static_cast<int>(xs.size()))
    throw_invalid("partition " + lambda.to_string() + " has more parts than variables");
}

std::vector<int> padded_parts(const Partition& lambda, std::size_t m) {
  std::vector<int> a(lambda.parts().begin(), lambda.parts().end());
  a.resize(m, 0);
  return a;
}

// Coset sum; returns false if some x_i - x_j with a_i > a_j vanishes.
bool coset_sum(const Partition& lambda, std::span<const Rational> xs, const Rational& t, Rational& out) {
  const std::size_t m = xs.size();
  std::vector<int> a = padded_parts(lambda, m);
  std::sort(a.begin(), a.end());  // ascending for next_permutation
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < m; ++i)
      for (int e = 0; e < a[i]; ++e) term *= xs[i];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (a[i] <= a[j]) continue;
        const Rational diff = xs[i] - xs[j];
        if (diff == Rational(0)) return false;
        term *= (xs[i] - t * xs[j]) / diff;
      }
    }
    total += term;
  } while (std::next_permutation(a.begin(), a.end()));
  out = total;
  return true;
}

Rational lagrange_at_zero(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  Rational out(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Rational basis(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (i == j) continue;
      basis *= (Rational(0) - nodes[j]) / (nodes[i] - nodes[j]);
    }
    out += basis * values[i];
  }
  return out;
}

}  // namespace

Rational hl_evaluate(const Partition& lambda, std::span<const Rational> xs, const Rational& t,
                     int max_variables) {
  check_hl_args(lambda, xs, max_variables);
  Rational direct;
  if (coset_sum(lambda, xs, t, direct)) return direct;

  // P_lambda(x + eps*d) is a polynomial in eps of degree <= |lambda|; sample it
  // at |lambda| + 1 admissible eps and interpolate back to eps = 0.
  const std::size_t needed = static_cast<std::size_t>(lambda.size()) + 1;
  std::vector<Rational> nodes, values;
  std::vector<Rational> shifted(xs.begin(), xs.end());
  for (long k = 1; nodes.size() < needed && k <= 64L * static_cast<long>(needed); ++k) {
    const Rational eps(1, k + 1);
    for (std::size_t i = 0; i < xs.size(); ++i) shifted[i] = xs[i] + eps * Rational(static_cast<long>(i + 1));
    Rational value;
    if (!coset_sum(lambda, shifted, t, value)) continue;
    nodes.push_back(eps);
    values.push_back(value);
  }
  if (nodes.size() < needed)
    throw DegenerateInput("could not find enough admissible interpolation points for " + lambda.to_string());
  return lagrange_at_zero(nodes, values);
}

Rational hl_evaluate_symmetrized(const Partition& lambda, std::span<const Rational> xs, const Rational& t,
                                 int max_variables) {
  check_hl_args(lambda, xs, max_variables);
  const std::size_t m = xs.size();
  const std::vector<int> a = padded_parts(lambda, m);
  std::vector<std::size_t> w(m);
  std::iota(w.begin(), w.end(), 0);
  Rational total(0);
  do {
    // w sends x_i to x_{w(i)}.
    Rational term(1);
    for (std::size_t i = 0; i < m; ++i)
      for (int e = 0; e < a[i]; ++e) term *= xs[w[i]];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Rational diff = xs[w[i]] - xs[w[j]];
        if (diff == Rational(0)) throw DegenerateInput("symmetrized form needs distinct variables");
        term *= (xs[w[i]] - t * xs[w[j]]) / diff;
      }
    }
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));

  // v_lambda(t) = prod_{i>=0} prod_{r=1}^{m_i} (1 + t + ... + t^{r-1}), zero parts included.
  auto mult = multiplicities(lambda);
  const int zeros = static_cast<int>(m) - lambda.length();
  if (zeros > 0) mult[0] = zeros;
  Rational v(1);
  for (const auto& [part, count] : mult) {
    for (int r = 1; r <= count; ++r) {
      Rational q_int(0), tp(1);
      for (int k = 0; k < r; ++k) {
        q_int += tp;
        tp *= t;
      }
      v *= q_int;
    }
  }
  if (v == Rational(0)) throw DegenerateInput("v_lambda(t) vanishes at this t");
  return total / v;
}

}  // namespace unispec
