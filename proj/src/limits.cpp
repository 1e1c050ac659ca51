#include "unispec/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace unispec {

namespace {

Limits load_limits() {
  Limits lim;
  if (const char* env = std::getenv("UNISPEC_MAX_CELLS")) {
    std::uint64_t cells = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cells);
    if (ec == std::errc() && *ptr == '\0' && cells > 0) {
      lim.max_group_elements = cells;
      lim.max_subgroups = cells;
      lim.max_lines = cells;
      lim.max_triangular_matrices = cells;
      lim.max_gl_candidates = cells;
    }
  }
  return lim;
}

}  // namespace

const Limits& limits() {
  static const Limits lim = load_limits();
  return lim;
}

}  // namespace unispec
