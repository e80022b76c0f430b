#pragma once

// Prime implicates of a small boolean function given by an evaluation
// callback: every clause over the variables is tested for implicate-ness and
// literal-minimality.  Exponential in the variable count; capped at 10.

#include <functional>

#include "xcnf/core.hpp"

namespace xcnf::detail {

// eval receives one bit per variable (aligned with vars).
ClauseSet function_primes(const std::vector<Var>& vars,
                          const std::function<bool(std::uint64_t)>& eval);

}  // namespace xcnf::detail
