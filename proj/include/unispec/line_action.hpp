#ifndef UNISPEC_LINE_ACTION_HPP
#define UNISPEC_LINE_ACTION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "unispec/jordan.hpp"
#include "unispec/partition.hpp"
#include "unispec/rational.hpp"

namespace unispec {

/// Dense square matrix over the prime field F_p (p <= 7, n <= 6).
class MatrixFp {
 public:
  static constexpr int kMaxPrime = 7;
  static constexpr int kMaxDim = 6;

  MatrixFp(int n, int p);  ///< zero matrix
  static MatrixFp identity(int n, int p);
  /// Rows separated by ';', entries by ',': "1,1;0,1".
  static MatrixFp parse(std::string_view text, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, int value);

  MatrixFp operator*(const MatrixFp& o) const;
  MatrixFp operator-(const MatrixFp& o) const;
  MatrixFp power(std::uint64_t k) const;
  int rank() const;
  bool is_unipotent() const;  ///< (M - I)^n = 0

  /// Matrix times column vector, coordinates mod p.
  std::vector<int> apply(const std::vector<int>& v) const;

  std::string to_string() const;
  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  int n_;
  int p_;
  std::vector<std::uint8_t> a_;
};

/// For each r >= 0, the number of projective lines in orbits of size p^r.
struct LineOrbitProfile {
  int p = 2;
  std::map<int, BigInt> lines;  // only nonzero entries

  BigInt total_lines() const;
  /// lines_r / p^r; throws InvariantViolation if not divisible.
  BigInt orbits(int r) const;
  BigInt lines_at(int r) const;
  friend bool operator==(const LineOrbitProfile&, const LineOrbitProfile&) = default;
};

/// Closed form for a unipotent element of type lambda:
/// lines_0 = (p^{lambda'_1} - 1)/(p - 1) and, for r >= 1,
/// lines_r = (p^{lambda'_1 + .. + lambda'_{p^r}} - p^{lambda'_1 + .. + lambda'_{p^{r-1}}})/(p - 1).
/// These are line counts; the orbit count of size p^r is lines_r / p^r.
LineOrbitProfile orbit_profile_formula(const Partition& lambda, int p);

/// Block-diagonal sum of upper-bidiagonal unipotent Jordan blocks.
MatrixFp jordan_matrix(const Partition& lambda, int p);

/// Jordan type from ranks of (M - I)^k: m_k = r_{k-1} - 2 r_k + r_{k+1}.
Partition jordan_type(const MatrixFp& m);

/// Tally of orbit sizes of the permutation M induces on projective lines.
/// Throws InvariantViolation if an orbit size is not a power of p.
LineOrbitProfile brute_force_line_orbits(const MatrixFp& m);

/// Number of lines fixed by M.
std::uint64_t count_fixed_lines(const MatrixFp& m);

std::uint64_t projective_line_count(int n, int p);

using MatrixVisitor = std::function<void(const MatrixFp&)>;

/// Every unitriangular matrix of size n over F_p (p^{n(n-1)/2} of them).
std::uint64_t for_each_triangular(int n, int p, const MatrixVisitor& visit);

/// Every unipotent element of GL(n,p) (p^{n(n-1)} of them).
std::uint64_t for_each_unipotent_gl(int n, int p, const MatrixVisitor& visit);

/// Jordan-type census of the model by full enumeration.
PartitionMap<std::uint64_t> type_census(Model model, int n, int p);

/// Complete flags 0 < V_1 < ... < V_n with every V_k invariant under M,
/// found by enumerating all complete flags. n <= 4, p <= 3.
BigInt count_fixed_flags(const MatrixFp& m);

}  // namespace unispec

#endif  // UNISPEC_LINE_ACTION_HPP
