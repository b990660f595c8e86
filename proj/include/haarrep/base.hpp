#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgr {

// Exact group orders can exceed 64 bits (symmetric groups on ~30 points show up
// when classifying degenerate connection sets), so orders are carried as u128.
using u128 = unsigned __int128;

// Domain errors: bad arguments, violated preconditions, malformed input files.
struct HgrError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search ran out of its node budget. The caller must treat the result as
// unknown, never as a negative verdict.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

u128 checked_mul_u128(u128 a, u128 b);
std::string u128_str(u128 v);
u128 parse_u128(const std::string& s);

// Default backtracking budget, overridable with the HAAR_BUDGET environment
// variable. A value of 0 passed to search entry points means "use default".
long long default_node_budget();
long long resolve_budget(long long requested);

}  // namespace hgr
