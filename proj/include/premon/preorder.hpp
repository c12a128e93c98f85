#ifndef PREMON_PREORDER_HPP_
#define PREMON_PREORDER_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace premon {

using Index = std::uint32_t;

// A binary relation on {0, ..., size-1} stored as a bit matrix. le(x, y)
// reads "x precedes-or-equals y". Intended to be a preorder (reflexive and
// transitive); validate_preorder checks that. Immutable after construction.
class FinitePreorder {
 public:
  FinitePreorder(std::size_t size, const std::function<bool(Index, Index)>& rel);

  static FinitePreorder equality(std::size_t size);

  std::size_t size() const { return n_; }

  bool le(Index x, Index y) const {
    return (bits_[x * words_ + (y >> 6)] >> (y & 63)) & 1;
  }

  // x strictly precedes y: le(x, y) and not le(y, x).
  bool strictly_less(Index x, Index y) const { return le(x, y) && !le(y, x); }

  bool equivalent(Index x, Index y) const { return le(x, y) && le(y, x); }

  // Raw row access for word-parallel sweeps (words_per_row() words per row).
  const std::uint64_t* row(Index x) const { return bits_.data() + x * words_; }
  std::size_t words_per_row() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct PreorderValidation {
  std::vector<Index> reflexivity_failures;
  // (x, y, z) with le(x,y), le(y,z) but not le(x,z).
  std::vector<std::array<Index, 3>> transitivity_failures;
  std::size_t reflexivity_failure_count = 0;
  std::size_t transitivity_failure_count = 0;
  // The derived strict relation has no cycle. On a finite carrier this is
  // automatic for genuine preorders and makes every premonoid over the
  // relation strongly Artinian.
  bool strict_acyclic = true;
  std::optional<std::vector<Index>> strict_cycle;

  bool ok() const {
    return reflexivity_failure_count == 0 && transitivity_failure_count == 0 &&
           strict_acyclic;
  }
};

// Reports every violated reflexivity point and (up to a recording limit) the
// violated transitivity triples, and checks the strict relation for cycles.
PreorderValidation validate_preorder(const FinitePreorder& p);

}  // namespace premon

#endif  // PREMON_PREORDER_HPP_
