#ifndef PREMON_MONOID_HPP_
#define PREMON_MONOID_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "premon/preorder.hpp"
#include "premon/transformation.hpp"

namespace premon {

namespace detail {
class MonoidBackend;
}  // namespace detail

// An enumerated finite monoid: a carrier of indices 0..size-1, a composition
// rule and an identity. Concrete instances are rule-backed (T_n, S_n,
// singular T_n, power monoids) or table-backed. Cheap to copy; immutable.
//
// Composition convention everywhere: op(f, g) = f after g (the right factor
// is applied first for function-like carriers).
class FiniteMonoid {
 public:
  explicit FiniteMonoid(std::shared_ptr<const detail::MonoidBackend> impl);

  std::size_t size() const;
  Index identity() const;
  Index op(Index a, Index b) const;
  std::string label(Index x) const;
  std::string name() const;

  // Transformation-backed carriers (T_n, S_n, singular T_n).
  bool has_transformations() const;
  int points() const;  // n for transformation-backed carriers, else 0
  Transformation transformation(Index x) const;
  std::optional<Index> index_of(const Transformation& t) const;

  // Power-monoid carriers: member list of the subset at index x, as base
  // carrier indices.
  bool has_subsets() const;
  std::vector<Index> subset_members(Index x) const;
  const FiniteMonoid& base() const;

 private:
  std::shared_ptr<const detail::MonoidBackend> impl_;
};

// Carrier: all n^n self-maps of an n-point set in lexicographic image order.
// Guarded by limits::tn_points().
FiniteMonoid full_transformation_monoid(int n);

// Carrier: the n! bijections, ordered by code.
FiniteMonoid symmetric_group(int n);

// Carrier: the non-bijective maps plus the identity (n^n - n! + 1 elements),
// ordered by code. Closed under composition.
FiniteMonoid singular_submonoid(int n);

// Carrier: subsets of the base carrier that contain the base identity,
// under setwise product. Guarded by limits::power_base().
FiniteMonoid reduced_power_monoid(const FiniteMonoid& base);

// Table-backed monoid; table[x * size + y] = x*y. The identity is inferred
// and verified, associativity is checked exhaustively (mandatory for
// user-supplied tables). Optional display labels.
FiniteMonoid table_monoid(std::size_t size, std::vector<Index> table,
                          std::vector<std::string> labels = {},
                          std::string name = "table");

// Z/k under addition, labels "0".."k-1".
FiniteMonoid cyclic_group(int k);

// Table-backed direct product with pair labels.
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

// x divides y iff y lies in the two-sided principal ideal of x, i.e.
// u*x*v = y for some u, v. Cubic scan, guarded by
// limits::divisibility_carrier().
FinitePreorder divisibility_preorder(const FiniteMonoid& m);

// Indices of the invertible elements (x with xy = yx = identity).
std::vector<Index> monoid_units(const FiniteMonoid& m);

// Result of an exhaustively verified monoid predicate. When the property
// fails, `witness` holds the offending elements and `description` explains
// the violation in terms of labels.
struct PredicateReport {
  bool holds = true;
  std::vector<Index> witness;
  std::string description;
};

// xy invertible implies x and y invertible.
PredicateReport is_dedekind_finite(const FiniteMonoid& m);

// u*x*v != x whenever u or v is a non-unit. Cubic scan.
PredicateReport is_acyclic(const FiniteMonoid& m);

// xy != x != yx whenever y is a non-unit.
PredicateReport is_unit_cancellative(const FiniteMonoid& m);

// zx = zy or xz = yz forces x = y. Cubic scan.
PredicateReport is_cancellative(const FiniteMonoid& m);

// Exhaustive associativity scan (used by table constructors; opt-in for
// rule-backed monoids).
PredicateReport verify_associativity(const FiniteMonoid& m);

// Carrier indices of the quasi-identities / transpositions of a
// transformation-backed monoid, ascending.
std::vector<Index> quasi_identity_elements(const FiniteMonoid& m);
std::vector<Index> transposition_elements(const FiniteMonoid& m);

}  // namespace premon

#endif  // PREMON_MONOID_HPP_
