#include "unispec/errors.hpp"

namespace unispec {

void throw_invalid(const std::string& what) { throw InvalidArgument(what); }
void throw_bound(const std::string& what) { throw BoundExceeded(what); }
void throw_invariant(const std::string& what) { throw InvariantViolation(what); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_modulus(int p) {
  if (p < 2) throw_invalid("p must be an integer >= 2, got " + std::to_string(p));
}

void require_prime(int p) {
  if (!is_prime(p)) throw_invalid("p must be prime for brute-force oracles, got " + std::to_string(p));
}

}  // namespace unispec
