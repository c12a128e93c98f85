#include "premon/premonoid.hpp"

#include <algorithm>
#include <unordered_map>

#include "premon/error.hpp"
#include "premon/limits.hpp"

namespace premon {

Premonoid::Premonoid(FiniteMonoid m, FinitePreorder o)
    : monoid(std::move(m)), order(std::move(o)) {
  if (monoid.size() != order.size()) {
    throw Error("size-mismatch",
                "monoid carrier has " + std::to_string(monoid.size()) +
                    " elements but the preorder has " +
                    std::to_string(order.size()));
  }
}

bool is_unit(const Premonoid& pm, Index x) {
  return pm.order.equivalent(x, pm.monoid.identity());
}

bool is_quark(const Premonoid& pm, Index x) {
  if (is_unit(pm, x)) return false;
  const auto n = static_cast<Index>(pm.monoid.size());
  for (Index b = 0; b < n; ++b) {
    if (!is_unit(pm, b) && pm.order.strictly_less(b, x)) return false;
  }
  return true;
}

std::vector<Index> non_units(const Premonoid& pm) {
  std::vector<Index> out;
  const auto n = static_cast<Index>(pm.monoid.size());
  for (Index x = 0; x < n; ++x) {
    if (!is_unit(pm, x)) out.push_back(x);
  }
  return out;
}

namespace {

void check_degree(int degree) {
  if (degree < 2) {
    throw Error("bad-degree", "irreducibility degree must be at least 2");
  }
  if (degree > 3) {
    throw Error("degree-too-large",
                "degree " + std::to_string(degree) +
                    " exceeds the exhaustive-search guard (supported: 2, 3)");
  }
}

// Non-units strictly below x, ascending.
std::vector<Index> strictly_below(const Premonoid& pm, Index x) {
  std::vector<Index> out;
  const auto n = static_cast<Index>(pm.monoid.size());
  for (Index y = 0; y < n; ++y) {
    if (!is_unit(pm, y) && pm.order.strictly_less(y, x)) out.push_back(y);
  }
  return out;
}

// Smallest tuple (k, y_1, ..., y_k), k in [2, degree], of non-units strictly
// below x whose left-to-right product is x, ordered lexicographically by
// (k, y_1, ..., y_k) in carrier-index order. When `heights` is given the
// tuple must additionally satisfy h(y_1)+...+h(y_k) <= h(x) + k - 2.
std::optional<std::vector<Index>> find_expansion(const Premonoid& pm, Index x,
                                                 int degree,
                                                 const HeightTable* heights) {
  const std::vector<Index> below = strictly_below(pm, x);
  if (below.empty()) return std::nullopt;

  const std::uint64_t hx = heights ? (*heights)[x] : 0;

  for (Index y1 : below) {
    const std::uint64_t h1 = heights ? (*heights)[y1] : 0;
    if (heights && h1 + 1 > hx) continue;
    for (Index y2 : below) {
      if (heights && h1 + (*heights)[y2] > hx) continue;
      if (pm.monoid.op(y1, y2) == x) return std::vector<Index>{y1, y2};
    }
  }

  if (degree >= 3) {
    if (pm.monoid.size() > limits::degree3_carrier()) {
      throw Error("size-cap-exceeded",
                  "degree-3 expansion search over " +
                      std::to_string(pm.monoid.size()) +
                      " elements exceeds cap " +
                      std::to_string(limits::degree3_carrier()) +
                      " (PREMON_MAX_DEGREE3_CARRIER)");
    }
    // sols[p] = candidates y3 in `below` with p * y3 = x, filled lazily.
    std::unordered_map<Index, std::vector<Index>> sols;
    auto solutions = [&](Index p) -> const std::vector<Index>& {
      auto it = sols.find(p);
      if (it != sols.end()) return it->second;
      std::vector<Index> ys;
      for (Index y : below) {
        if (pm.monoid.op(p, y) == x) ys.push_back(y);
      }
      return sols.emplace(p, std::move(ys)).first->second;
    };
    for (Index y1 : below) {
      const std::uint64_t h1 = heights ? (*heights)[y1] : 0;
      if (heights && h1 + 2 > hx + 1) continue;
      for (Index y2 : below) {
        const std::uint64_t h12 = heights ? h1 + (*heights)[y2] : 0;
        if (heights && h12 + 1 > hx + 1) continue;
        const Index p = pm.monoid.op(y1, y2);
        for (Index y3 : solutions(p)) {
          if (heights && h12 + (*heights)[y3] > hx + 1) continue;
          return std::vector<Index>{y1, y2, y3};
        }
      }
    }
  }

  return std::nullopt;
}

}  // namespace

bool is_irreducible(const Premonoid& pm, Index x, int degree) {
  check_degree(degree);
  if (is_unit(pm, x)) return false;
  return !find_expansion(pm, x, degree, nullptr).has_value();
}

bool is_atom(const Premonoid& pm, Index x) {
  if (is_unit(pm, x)) return false;
  const auto n = static_cast<Index>(pm.monoid.size());
  std::vector<bool> unit(n, false);
  for (Index y = 0; y < n; ++y) unit[y] = is_unit(pm, y);
  for (Index y = 0; y < n; ++y) {
    if (unit[y]) continue;
    for (Index z = 0; z < n; ++z) {
      if (!unit[z] && pm.monoid.op(y, z) == x) return false;
    }
  }
  return true;
}

HeightTable height_table(const Premonoid& pm) {
  const auto n = static_cast<Index>(pm.monoid.size());
  std::vector<bool> unit(n, false);
  for (Index x = 0; x < n; ++x) unit[x] = is_unit(pm, x);

  std::vector<std::uint32_t> h(n, 0);
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 in progress, 2 done

  struct Frame {
    Index v;
    Index cursor;
    std::uint32_t best;
  };
  std::vector<Frame> stack;

  for (Index root = 0; root < n; ++root) {
    if (unit[root] || state[root] == 2) continue;
    stack.push_back({root, 0, 0});
    state[root] = 1;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      bool descended = false;
      while (fr.cursor < n) {
        const Index u = fr.cursor;
        if (!unit[u] && pm.order.strictly_less(u, fr.v)) {
          if (state[u] == 1) {
            throw Error("cycle-detected",
                        "strict cycle through element " + pm.monoid.label(u) +
                            "; the relation is not a preorder");
          }
          if (state[u] == 0) {
            state[u] = 1;
            stack.push_back({u, 0, 0});
            descended = true;
            break;
          }
          fr.best = std::max(fr.best, h[u]);
        }
        ++fr.cursor;
      }
      if (descended) continue;
      h[fr.v] = fr.best + 1;
      state[fr.v] = 2;
      stack.pop_back();
    }
  }
  return HeightTable(std::move(h));
}

Index product_of(const FiniteMonoid& m, const std::vector<Index>& factors) {
  Index acc = m.identity();
  for (Index f : factors) acc = m.op(acc, f);
  return acc;
}

namespace {

struct IrreducibleEngine {
  const Premonoid& pm;
  int degree;
  std::unordered_map<Index, std::vector<Index>> memo;
  std::unordered_set<Index> active;
  std::vector<std::string>* trace;

  const std::vector<Index>& run(Index x) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    if (!active.insert(x).second) {
      throw Error("cycle-detected",
                  "strict cycle through element " + pm.monoid.label(x) +
                      "; the relation is not a preorder");
    }
    auto expansion = find_expansion(pm, x, degree, nullptr);
    if (!expansion) {
      active.erase(x);
      return memo.emplace(x, std::vector<Index>{x}).first->second;
    }
    std::string line = pm.monoid.label(x) + " ->";
    for (Index y : *expansion) line += " " + pm.monoid.label(y);
    trace->push_back(std::move(line));
    std::vector<Index> acc;
    for (Index y : *expansion) {
      const auto& part = run(y);
      acc.insert(acc.end(), part.begin(), part.end());
    }
    active.erase(x);
    return memo.emplace(x, std::move(acc)).first->second;
  }
};

struct QuarkEngine {
  const Premonoid& pm;
  int degree;
  const HeightTable& heights;
  std::unordered_map<Index, std::vector<Index>> memo;
  std::vector<std::string>* trace;

  const std::vector<Index>& run(Index x) {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    if (is_quark(pm, x)) {
      return memo.emplace(x, std::vector<Index>{x}).first->second;
    }
    auto expansion = find_expansion(pm, x, degree, &heights);
    if (!expansion) {
      throw Error("hypothesis-violation",
                  "no qualifying split below " + pm.monoid.label(x) +
                      " (height " + std::to_string(heights[x]) + ")");
    }
    std::uint64_t sum = 0;
    std::string line =
        pm.monoid.label(x) + "[h=" + std::to_string(heights[x]) + "] ->";
    for (Index y : *expansion) {
      sum += heights[y];
      line += " " + pm.monoid.label(y) + "[h=" + std::to_string(heights[y]) + "]";
    }
    line += " (sum " + std::to_string(sum) + " <= " +
            std::to_string(heights[x] + expansion->size() - 2) + ")";
    trace->push_back(std::move(line));
    std::vector<Index> acc;
    for (Index y : *expansion) {
      const auto& part = run(y);
      acc.insert(acc.end(), part.begin(), part.end());
    }
    return memo.emplace(x, std::move(acc)).first->second;
  }
};

}  // namespace

Factorization factor_into_irreducibles(const Premonoid& pm, Index x, int degree) {
  check_degree(degree);
  if (is_unit(pm, x)) {
    throw Error("not-a-non-unit",
                pm.monoid.label(x) + " is a unit of the premonoid");
  }
  Factorization out;
  out.target = x;
  IrreducibleEngine engine{pm, degree, {}, &out.trace};
  out.factors = engine.run(x);
  return out;
}

Factorization factor_into_quarks_bounded(const Premonoid& pm, Index x, int degree) {
  check_degree(degree);
  if (is_unit(pm, x)) {
    throw Error("not-a-non-unit",
                pm.monoid.label(x) + " is a unit of the premonoid");
  }
  HeightTable heights = height_table(pm);
  Factorization out;
  out.target = x;
  QuarkEngine engine{pm, degree, heights, {}, &out.trace};
  out.factors = engine.run(x);
  const std::size_t bound = static_cast<std::size_t>(degree - 1) * heights[x] -
                            static_cast<std::size_t>(degree - 2);
  out.bound = bound;
  if (out.factors.size() > bound) {
    throw Error("bound-exceeded",
                "internal error: produced " +
                    std::to_string(out.factors.size()) + " quarks, bound " +
                    std::to_string(bound));
  }
  return out;
}

}  // namespace premon
