#ifndef UNISPEC_LIMITS_HPP
#define UNISPEC_LIMITS_HPP

#include <cstdint>

namespace unispec {

// Desk-scale bounds. The enumeration caps (the last group) can be replaced
// at process start by the environment variable UNISPEC_MAX_CELLS.
struct Limits {
  int max_partition_n = 40;
  int max_tableau_n = 14;
  int max_hl_variables = 8;
  int max_gl_dist_n = 30;
  int max_triangular_dist_n = 14;

  std::uint64_t max_group_elements = 4096;
  std::uint64_t max_subgroups = 200000;
  std::uint64_t max_lines = 20000;
  std::uint64_t max_triangular_matrices = 1000000;
  std::uint64_t max_gl_candidates = 10000000;
};

const Limits& limits();

}  // namespace unispec

#endif  // UNISPEC_LIMITS_HPP
