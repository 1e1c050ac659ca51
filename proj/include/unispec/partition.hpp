#ifndef UNISPEC_PARTITION_HPP
#define UNISPEC_PARTITION_HPP

#include <compare>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unispec/limits.hpp"

namespace unispec {

/// Integer partition stored as a weakly decreasing list of positive parts.
///
/// Indices in the accessors are 1-based to match the usual notation; any
/// index past the end reads as 0, so `conj_part(lambda_1 + 1)` is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses the bracketed text form, e.g. "[5,4,4,1]" or "[]".
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  int part(int i) const;       ///< lambda_i, 0 beyond the length
  int conj_part(int j) const;  ///< lambda'_j, 0 beyond lambda_1

  /// The bracketed text form.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Map ordering used in all reports: reverse-lexicographic, so (n) comes first.
using ReverseLex = std::greater<Partition>;

template <class V>
using PartitionMap = std::map<Partition, V, ReverseLex>;

Partition conjugate(const Partition& lambda);

/// n(lambda) = sum_i (i-1) lambda_i.
long n_stat(const Partition& lambda);

/// Part size -> number of parts of that size.
std::map<int, int> multiplicities(const Partition& lambda);

/// sum_i (lambda'_i)^2.
long conj_square_sum(const Partition& lambda);

/// lambda'_1 + ... + lambda'_k (k may exceed lambda_1; k <= 0 gives 0).
long conj_prefix_sum(const Partition& lambda, long k);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int bound = limits().max_partition_n);

/// Filling of a diagram by 1..n increasing along rows and columns.
class StandardTableau {
 public:
  /// Throws InvalidArgument unless `rows` is a valid standard filling.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// 1-based (row, column) of entry j.
  std::pair<int, int> position(int j) const;

  /// Shape of the cells holding 1..j.
  Partition subshape(int j) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<std::pair<int, int>> positions_;  // index j-1
};

/// Every standard Young tableau of the given shape, each once.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int bound = limits().max_tableau_n);

/// Number of parts of the subtableau {1..j} equal to the column of entry j.
int m_star(const StandardTableau& tableau, int j);

/// m_star computed from the shapes alone: `grown` is the shape after placing
/// a cell in column `column`.
int m_star_of_step(const Partition& grown, int column);

/// Adds one cell to column `column` (1-based). Throws InvalidArgument if the
/// result would not be a partition.
Partition add_to_column(const Partition& lambda, int column);

}  // namespace unispec

#endif  // UNISPEC_PARTITION_HPP
