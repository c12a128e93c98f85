#include "premon/preorder.hpp"

#include <string>

#include "premon/error.hpp"
#include "premon/limits.hpp"

namespace premon {

namespace {
constexpr std::size_t kMaxRecordedViolations = 100;
}

FinitePreorder::FinitePreorder(std::size_t size,
                               const std::function<bool(Index, Index)>& rel)
    : n_(size), words_((size + 63) / 64), bits_(n_ * words_, 0) {
  if (size == 0) {
    throw Error("bad-preorder", "carrier must be non-empty");
  }
  if (size > limits::preorder_carrier()) {
    throw Error("size-cap-exceeded",
                "preorder carrier " + std::to_string(size) + " exceeds cap " +
                    std::to_string(limits::preorder_carrier()));
  }
  for (Index x = 0; x < n_; ++x) {
    for (Index y = 0; y < n_; ++y) {
      if (rel(x, y)) {
        bits_[x * words_ + (y >> 6)] |= (std::uint64_t{1} << (y & 63));
      }
    }
  }
}

FinitePreorder FinitePreorder::equality(std::size_t size) {
  return FinitePreorder(size, [](Index x, Index y) { return x == y; });
}

PreorderValidation validate_preorder(const FinitePreorder& p) {
  PreorderValidation report;
  const auto n = static_cast<Index>(p.size());
  const std::size_t w = p.words_per_row();

  for (Index x = 0; x < n; ++x) {
    if (!p.le(x, x)) {
      ++report.reflexivity_failure_count;
      if (report.reflexivity_failures.size() < kMaxRecordedViolations) {
        report.reflexivity_failures.push_back(x);
      }
    }
  }

  // For every x the row of any successor y must stay inside row(x).
  for (Index x = 0; x < n; ++x) {
    const std::uint64_t* rx = p.row(x);
    for (Index y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      const std::uint64_t* ry = p.row(y);
      for (std::size_t k = 0; k < w; ++k) {
        std::uint64_t leaked = ry[k] & ~rx[k];
        while (leaked != 0) {
          int bit = __builtin_ctzll(leaked);
          leaked &= leaked - 1;
          Index z = static_cast<Index>(k * 64 + static_cast<std::size_t>(bit));
          ++report.transitivity_failure_count;
          if (report.transitivity_failures.size() < kMaxRecordedViolations) {
            report.transitivity_failures.push_back({x, y, z});
          }
        }
      }
    }
  }

  // Cycle check on the strict relation by peeling zero-in-degree nodes
  // (edge u -> v iff u strictly precedes v). For a genuine preorder the
  // strict relation can never cycle; this triggers only on invalid input.
  std::vector<std::uint32_t> indeg(n, 0);
  for (Index v = 0; v < n; ++v) {
    for (Index u = 0; u < n; ++u) {
      if (p.strictly_less(u, v)) ++indeg[v];
    }
  }
  std::vector<Index> queue;
  for (Index v = 0; v < n; ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t peeled = 0;
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    Index u = queue.back();
    queue.pop_back();
    removed[u] = true;
    ++peeled;
    for (Index v = 0; v < n; ++v) {
      if (!removed[v] && p.strictly_less(u, v) && --indeg[v] == 0) {
        queue.push_back(v);
      }
    }
  }
  if (peeled < n) {
    report.strict_acyclic = false;
    // Every remaining node has a remaining strict predecessor; walking
    // backwards must revisit a node, closing a cycle.
    Index start = 0;
    while (removed[start]) ++start;
    std::vector<Index> walk{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    Index cur = start;
    for (;;) {
      Index pred = n;
      for (Index u = 0; u < n; ++u) {
        if (!removed[u] && p.strictly_less(u, cur)) {
          pred = u;
          break;
        }
      }
      if (seen[pred]) {
        std::vector<Index> cycle;
        auto it = walk.begin();
        while (*it != pred) ++it;
        cycle.assign(it, walk.end());
        cycle.push_back(pred);
        report.strict_cycle = cycle;
        break;
      }
      walk.push_back(pred);
      seen[pred] = true;
      cur = pred;
    }
  }

  return report;
}

}  // namespace premon
