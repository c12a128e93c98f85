#ifndef PREMON_LIMITS_HPP_
#define PREMON_LIMITS_HPP_

#include <cstddef>

namespace premon {
namespace limits {

// Size caps for exhaustive operations. Each has a documented default and can
// be overridden with the environment variable named next to it (integer value).
// The caps exist because the guarded operations are Theta(|H|^2) or worse;
// raising them is safe but slow.

std::size_t env_cap(const char* env_name, std::size_t fallback);

// Max point count n for T_n / S_n / singular T_n constructors (carrier n^n).
// PREMON_MAX_TN_POINTS, default 8.
std::size_t tn_points();

// Max base carrier for reduced power monoids (carrier 2^(|M|-1)).
// PREMON_MAX_POWER_BASE, default 6.
std::size_t power_base();

// Max carrier for building an explicit preorder matrix.
// PREMON_MAX_PREORDER_CARRIER, default 8192.
std::size_t preorder_carrier();

// Max carrier for the definitional rfix preorder (|H|^2 subset tests of
// size |H|). PREMON_MAX_RFIX_CARRIER, default 1024.
std::size_t rfix_carrier();

// Max carrier for the divisibility preorder (cubic scan).
// PREMON_MAX_DIV_CARRIER, default 512.
std::size_t divisibility_carrier();

// Max carrier for cubic monoid predicates (acyclicity, cancellativity) and
// mandatory table associativity checks. PREMON_MAX_CUBIC_CARRIER, default 512.
std::size_t cubic_scan_carrier();

// Max state count for the breadth-first factorization oracle.
// PREMON_MAX_BFS_STATES, default 200000 (T_6 fits; T_7 is opt-in).
std::size_t bfs_states();

// Max carrier for degree-3 expansion searches (builds a |H|^2 division
// index). PREMON_MAX_DEGREE3_CARRIER, default 1024.
std::size_t degree3_carrier();

}  // namespace limits
}  // namespace premon

#endif  // PREMON_LIMITS_HPP_
