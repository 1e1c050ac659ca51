#ifndef UNISPEC_PGROUP_HPP
#define UNISPEC_PGROUP_HPP

#include <cstdint>
#include <vector>

#include "unispec/partition.hpp"
#include "unispec/rational.hpp"

namespace unispec {

/// Brute-force model of the abelian p-group Z/p^{lambda_1} + Z/p^{lambda_2} + ...
///
/// Elements are indexed 0..order-1 by their mixed-radix coordinates.
/// Subgroups are enumerated once, by closure of generating sets, and kept as
/// element bitsets.
class AbelianPGroup {
 public:
  using Subgroup = std::vector<std::uint64_t>;  // bitset over element indices

  /// Throws InvalidArgument for composite p, BoundExceeded when the group or
  /// its subgroup lattice is larger than the configured caps.
  AbelianPGroup(Partition type, int p);

  const Partition& type() const { return type_; }
  int p() const { return p_; }
  std::size_t order() const { return order_; }

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(std::size_t a, long k) const;

  /// All subgroups, ordered by size (trivial first).
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  std::size_t subgroup_order(const Subgroup& h) const;
  /// Isomorphism type from |H[p^k]| = p^{mu'_1 + ... + mu'_k}.
  Partition type_of(const Subgroup& h) const;
  /// Type of G/H from |(G/H)[p^k]| = |{g : p^k g in H}| / |H|.
  Partition quotient_type(const Subgroup& h) const;

  BigInt count_subgroups_of_type(const Partition& mu) const;
  /// |{H : H of type sub, G/H of type quotient}|.
  BigInt count_subgroups_with(const Partition& sub, const Partition& quotient) const;
  /// Chains 0 = H_0 < H_1 < ... < H_n = G with every index p.
  BigInt count_maximal_chains() const;

 private:
  bool contains(const Subgroup& h, std::size_t g) const { return (h[g / 64] >> (g % 64)) & 1U; }
  Partition type_from_torsion_counts(const std::vector<std::size_t>& counts) const;
  void enumerate_subgroups();

  Partition type_;
  int p_;
  std::size_t order_ = 1;
  std::vector<std::size_t> moduli_;  // p^{lambda_i}
  std::vector<Subgroup> subgroups_;
};

}  // namespace unispec

#endif  // UNISPEC_PGROUP_HPP
