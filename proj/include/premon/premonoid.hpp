#ifndef PREMON_PREMONOID_HPP_
#define PREMON_PREMONOID_HPP_

#include <optional>
#include <string>
#include <vector>

#include "premon/monoid.hpp"
#include "premon/preorder.hpp"

namespace premon {

// A monoid together with a preorder on its carrier. No compatibility between
// the two is required. Sizes must match.
struct Premonoid {
  FiniteMonoid monoid;
  FinitePreorder order;

  Premonoid(FiniteMonoid m, FinitePreorder o);
};

// x is a unit of the premonoid: order-equivalent to the monoid identity.
bool is_unit(const Premonoid& pm, Index x);

// Non-unit with no non-unit strictly below it.
bool is_quark(const Premonoid& pm, Index x);

// Non-unit that is not a product of k non-units strictly below it for any
// k in [2, degree]. Degree is guarded to {2, 3}; larger degrees are rejected
// rather than run a Theta(|H|^(s-1)) scan per element.
bool is_irreducible(const Premonoid& pm, Index x, int degree);

// Non-unit that is not a product of two non-units (no below restriction).
bool is_atom(const Premonoid& pm, Index x);

std::vector<Index> non_units(const Premonoid& pm);

// heights[x] = length of the longest chain x = x_1 > x_2 > ... > x_m of
// non-units descending strictly; 0 exactly on units, 1 exactly on quarks.
class HeightTable {
 public:
  explicit HeightTable(std::vector<std::uint32_t> heights)
      : heights_(std::move(heights)) {}

  std::uint32_t operator[](Index x) const { return heights_[x]; }
  std::size_t size() const { return heights_.size(); }

 private:
  std::vector<std::uint32_t> heights_;
};

// Longest-path table over the strict-order graph restricted to non-units.
// Throws "cycle-detected" if the strict relation cycles (possible only for
// relations that fail validation).
HeightTable height_table(const Premonoid& pm);

// An ordered factor list whose left-to-right product equals the target,
// plus a per-step trace and the governing length bound when one applies.
struct Factorization {
  Index target = 0;
  std::vector<Index> factors;
  std::vector<std::string> trace;
  std::optional<std::size_t> bound;

  std::size_t length() const { return factors.size(); }
};

// Splits x into irreducibles of the given degree by repeatedly expanding the
// tie-break-minimal tuple of non-units strictly below the current element.
// Units are rejected ("not-a-non-unit"); they factor as the empty product by
// convention, which only the oracle reports.
Factorization factor_into_irreducibles(const Premonoid& pm, Index x, int degree);

// Splits x into quarks. Every expansion step must find non-units
// y_1, ..., y_k (2 <= k <= degree), each strictly below the element, with
// product equal to it and hgt(y_1) + ... + hgt(y_k) <= hgt(element) + k - 2;
// if no step qualifies the premonoid violates the splitting hypothesis and
// the engine throws "hypothesis-violation" naming the element. The result
// length is at most (degree-1)*hgt(x) - (degree-2).
Factorization factor_into_quarks_bounded(const Premonoid& pm, Index x, int degree);

// Recomputes the left-to-right product of a factor list.
Index product_of(const FiniteMonoid& m, const std::vector<Index>& factors);

}  // namespace premon

#endif  // PREMON_PREMONOID_HPP_
