#include "unispec/pgroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "unispec/errors.hpp"
#include "unispec/limits.hpp"

namespace unispec {

namespace {

struct BitsetHash {
  std::size_t operator()(const AbelianPGroup::Subgroup& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::size_t popcount(const AbelianPGroup::Subgroup& s) {
  std::size_t c = 0;
  for (auto w : s) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool is_subset(const AbelianPGroup::Subgroup& a, const AbelianPGroup::Subgroup& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

int exact_log(std::size_t value, int p) {
  int k = 0;
  while (value > 1) {
    if (value % static_cast<std::size_t>(p) != 0) throw_invariant("torsion count is not a power of p");
    value /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

}  // namespace

AbelianPGroup::AbelianPGroup(Partition type, int p) : type_(std::move(type)), p_(p) {
  require_prime(p);
  const auto cap = limits().max_group_elements;
  for (int part : type_.parts()) {
    std::size_t m = 1;
    for (int i = 0; i < part; ++i) {
      m *= static_cast<std::size_t>(p);
      if (m > cap) throw_bound("abelian group exceeds element bound");
    }
    moduli_.push_back(m);
    order_ *= m;
    if (order_ > cap)
      throw_bound("abelian group of type " + type_.to_string() + " exceeds " + std::to_string(cap) + " elements");
  }
  enumerate_subgroups();
}

std::size_t AbelianPGroup::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, place = 1;
  for (std::size_t m : moduli_) {
    const std::size_t da = a % m, db = b % m;
    a /= m;
    b /= m;
    out += ((da + db) % m) * place;
    place *= m;
  }
  return out;
}

std::size_t AbelianPGroup::scale(std::size_t a, long k) const {
  std::size_t out = 0, place = 1;
  for (std::size_t m : moduli_) {
    const std::size_t d = a % m;
    a /= m;
    long long prod = static_cast<long long>(d) * (k % static_cast<long long>(m));
    prod %= static_cast<long long>(m);
    if (prod < 0) prod += static_cast<long long>(m);
    out += static_cast<std::size_t>(prod) * place;
    place *= m;
  }
  return out;
}

void AbelianPGroup::enumerate_subgroups() {
  const std::size_t words = (order_ + 63) / 64;
  Subgroup trivial(words, 0);
  trivial[0] = 1;  // element 0 is the identity
  std::unordered_set<Subgroup, BitsetHash> seen{trivial};
  std::vector<Subgroup> frontier{trivial};
  subgroups_.push_back(trivial);
  const auto cap = limits().max_subgroups;

  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      std::vector<std::size_t> members;
      for (std::size_t e = 0; e < order_; ++e)
        if (contains(h, e)) members.push_back(e);
      for (std::size_t g = 1; g < order_; ++g) {
        if (contains(h, g)) continue;
        // <H, g> = union of cosets H + k g.
        Subgroup grown = h;
        std::size_t multiple = g;
        while (!contains(h, multiple)) {
          for (std::size_t e : members) {
            const std::size_t x = add(e, multiple);
            grown[x / 64] |= std::uint64_t{1} << (x % 64);
          }
          multiple = add(multiple, g);
        }
        if (seen.insert(grown).second) {
          if (seen.size() > cap)
            throw_bound("subgroup lattice of " + type_.to_string() + " exceeds " + std::to_string(cap) +
                        " subgroups");
          next.push_back(grown);
          subgroups_.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(subgroups_.begin(), subgroups_.end(),
                   [](const Subgroup& a, const Subgroup& b) { return popcount(a) < popcount(b); });
}

std::size_t AbelianPGroup::subgroup_order(const Subgroup& h) const { return popcount(h); }

Partition AbelianPGroup::type_from_torsion_counts(const std::vector<std::size_t>& counts) const {
  // counts[k] = p^{mu'_1 + ... + mu'_k}, counts[0] = 1.
  std::vector<int> conj;
  for (std::size_t k = 1; k < counts.size(); ++k) {
    const int step = exact_log(counts[k], p_) - exact_log(counts[k - 1], p_);
    if (step == 0) break;
    conj.push_back(step);
  }
  return conjugate(Partition(std::move(conj)));
}

Partition AbelianPGroup::type_of(const Subgroup& h) const {
  const int exponent = type_.largest();
  std::vector<std::size_t> counts(exponent + 1, 0);
  counts[0] = 1;
  for (std::size_t g = 0; g < order_; ++g) {
    if (!contains(h, g)) continue;
    std::size_t x = g;
    // smallest k with p^k g = 0, then g counts towards every k' >= k
    int k = 0;
    while (x != 0) {
      x = scale(x, p_);
      ++k;
    }
    for (int kk = std::max(k, 1); kk <= exponent; ++kk) ++counts[kk];
  }
  return type_from_torsion_counts(counts);
}

Partition AbelianPGroup::quotient_type(const Subgroup& h) const {
  const int exponent = type_.largest();
  const std::size_t hsize = subgroup_order(h);
  std::vector<std::size_t> counts(exponent + 1, 0);
  counts[0] = 1;
  for (std::size_t g = 0; g < order_; ++g) {
    std::size_t x = g;
    int k = 0;
    while (!contains(h, x)) {
      x = scale(x, p_);
      ++k;
    }
    for (int kk = std::max(k, 1); kk <= exponent; ++kk) ++counts[kk];
  }
  for (int kk = 1; kk <= exponent; ++kk) {
    if (counts[kk] % hsize != 0) throw_invariant("coset count not divisible by subgroup order");
    counts[kk] /= hsize;
  }
  return type_from_torsion_counts(counts);
}

BigInt AbelianPGroup::count_subgroups_of_type(const Partition& mu) const {
  BigInt count = 0;
  for (const auto& h : subgroups_)
    if (type_of(h) == mu) ++count;
  return count;
}

BigInt AbelianPGroup::count_subgroups_with(const Partition& sub, const Partition& quotient) const {
  BigInt count = 0;
  for (const auto& h : subgroups_)
    if (type_of(h) == sub && quotient_type(h) == quotient) ++count;
  return count;
}

BigInt AbelianPGroup::count_maximal_chains() const {
  // Subgroups are sorted by order; chains(H) = sum over index-p subgroups K of chains(K).
  std::vector<BigInt> chains(subgroups_.size(), 0);
  std::vector<std::size_t> sizes(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) sizes[i] = subgroup_order(subgroups_[i]);
  chains[0] = 1;
  for (std::size_t i = 1; i < subgroups_.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (sizes[k] * static_cast<std::size_t>(p_) != sizes[i]) continue;
      if (is_subset(subgroups_[k], subgroups_[i])) chains[i] += chains[k];
    }
  }
  return chains.back();
}

}  // namespace unispec
