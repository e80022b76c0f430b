#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace xcnf::detail {

// Smallest index in [0, n) where ok(i) is false, nullopt if all pass.
// Deterministic for any thread count: threads race, but the minimum failing
// index is what gets reported.  ok must be safe to call concurrently.
std::optional<std::uint64_t> first_failure(std::uint64_t n, unsigned threads,
                                           const std::function<bool(std::uint64_t)>& ok);

}  // namespace xcnf::detail
