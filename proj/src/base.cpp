#include "haarrep/base.hpp"

#include <algorithm>
#include <cstdlib>

namespace hgr {

u128 checked_mul_u128(u128 a, u128 b) {
  if (a != 0 && b > static_cast<u128>(-1) / a) {
    throw HgrError("overflow in 128-bit order arithmetic");
  }
  return a * b;
}

std::string u128_str(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 parse_u128(const std::string& s) {
  if (s.empty()) throw HgrError("empty integer literal");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw HgrError("bad integer literal: " + s);
    u128 next = checked_mul_u128(v, 10) + static_cast<u128>(c - '0');
    v = next;
  }
  return v;
}

long long default_node_budget() {
  static long long cached = [] {
    if (const char* env = std::getenv("HAAR_BUDGET")) {
      long long v = std::atoll(env);
      if (v > 0) return v;
    }
    return 10'000'000LL;
  }();
  return cached;
}

long long resolve_budget(long long requested) {
  return requested > 0 ? requested : default_node_budget();
}

}  // namespace hgr
