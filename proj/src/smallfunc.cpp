#include "xcnf/detail/smallfunc.hpp"

#include <bit>

namespace xcnf::detail {

namespace {

// A clause over vars is coded by (support mask, sign mask); sign bit 1 means
// the negative literal.  The clause is an implicate iff the function is 0 on
// every point falsifying it, i.e. on every point agreeing with `sign` on the
// support.
bool is_implicate(int n, std::uint64_t support, std::uint64_t sign,
                  const std::function<bool(std::uint64_t)>& eval) {
  std::uint64_t free = ~support & ((n == 64 ? ~0ULL : (1ULL << n) - 1));
  // Falsifying points: literal x false; positive v -> v=0, negative -> v=1.
  std::uint64_t base = sign & support;
  std::uint64_t sub = free;
  for (;;) {
    if (eval(base | sub)) return false;
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return true;
}

}  // namespace

ClauseSet function_primes(const std::vector<Var>& vars,
                          const std::function<bool(std::uint64_t)>& eval) {
  int n = static_cast<int>(vars.size());
  if (n > 10) throw CapError("function_primes: more than 10 variables");
  std::vector<Clause> primes;
  std::uint64_t all = n == 0 ? 0 : (1ULL << n) - 1;
  std::uint64_t support = all;
  for (;;) {  // all support masks
    for (std::uint64_t sign = support;;) {  // all sign patterns within support
      if (is_implicate(n, support, sign & support, eval)) {
        // prime iff no literal can be dropped
        bool prime = true;
        for (std::uint64_t rest = support; rest && prime;) {
          std::uint64_t bit = rest & (~rest + 1);
          rest ^= bit;
          if (is_implicate(n, support ^ bit, sign & (support ^ bit), eval)) prime = false;
        }
        if (prime) {
          std::vector<Lit> lits;
          for (int i = 0; i < n; ++i)
            if (support >> i & 1)
              lits.push_back(Lit(sign >> i & 1 ? -vars[static_cast<std::size_t>(i)]
                                               : vars[static_cast<std::size_t>(i)]));
          primes.push_back(Clause(std::move(lits)));
        }
      }
      if (sign == 0) break;
      sign = (sign - 1) & support;
    }
    if (support == 0) break;
    support = (support - 1) & all;
  }
  return ClauseSet(std::move(primes));
}

}  // namespace xcnf::detail
