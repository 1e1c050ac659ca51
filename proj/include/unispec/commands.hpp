#ifndef UNISPEC_COMMANDS_HPP
#define UNISPEC_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "unispec/growth.hpp"
#include "unispec/jordan.hpp"
#include "unispec/table.hpp"

namespace unispec {

/// One row per partition with the exact probability and a display float,
/// then a total row.
Table dist_table(Model model, int n, int p);

/// Empirical frequencies; adds target and total-variation columns when the
/// sampler has a known target law.
Table sample_table(const SamplerSpec& spec, std::uint64_t trials, std::uint64_t seed);

struct StatsParams {
  std::optional<Model> model;
  int n = 0;
  int p = 0;
  int r = 0;  ///< 0 means every r in 1..n where applicable
  int s = 0;
  std::optional<Rational> theta;
  std::optional<Partition> lambda;
};

/// kind: mean-xr | mean-arc | second-moment | orbits | xtheta.
Table stats_table(std::string_view kind, const StatsParams& params);

}  // namespace unispec

#endif  // UNISPEC_COMMANDS_HPP
