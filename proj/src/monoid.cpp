#include "premon/monoid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "premon/error.hpp"
#include "premon/limits.hpp"

namespace premon {

namespace detail {

class MonoidBackend {
 public:
  virtual ~MonoidBackend() = default;
  virtual std::size_t size() const = 0;
  virtual Index identity() const = 0;
  virtual Index op(Index a, Index b) const = 0;
  virtual std::string label(Index x) const = 0;
  virtual std::string name() const = 0;
  virtual int points() const { return 0; }
  virtual std::optional<Transformation> transformation(Index) const {
    return std::nullopt;
  }
  virtual std::optional<Index> index_of(const Transformation&) const {
    return std::nullopt;
  }
  virtual bool has_subsets() const { return false; }
  virtual std::vector<Index> subset_members(Index) const { return {}; }
  virtual const FiniteMonoid* base() const { return nullptr; }
};

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_tn_points(int n) {
  if (n < 1) {
    throw Error("bad-argument", "point count must be positive");
  }
  if (static_cast<std::size_t>(n) > limits::tn_points()) {
    throw Error("size-cap-exceeded",
                "point count " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits::tn_points()) +
                    " (PREMON_MAX_TN_POINTS)");
  }
}

// Full transformation monoid T_n. Element index == mixed-radix image code,
// so no carrier is materialized.
class TnBackend : public MonoidBackend {
 public:
  explicit TnBackend(int n) : n_(n), size_(pow_u64(static_cast<std::uint64_t>(n), n)) {}

  std::size_t size() const override { return size_; }

  Index identity() const override {
    return static_cast<Index>(Transformation::identity(n_).code());
  }

  Index op(Index a, Index b) const override {
    const auto n = static_cast<std::uint64_t>(n_);
    std::array<std::uint8_t, 64> fa{}, fb{};
    std::uint64_t ca = a, cb = b;
    for (int i = n_ - 1; i >= 0; --i) {
      fa[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(ca % n);
      fb[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cb % n);
      ca /= n;
      cb /= n;
    }
    std::uint64_t code = 0;
    for (int i = 0; i < n_; ++i) {
      code = code * n + fa[fb[static_cast<std::size_t>(i)]];
    }
    return static_cast<Index>(code);
  }

  std::string label(Index x) const override {
    return Transformation::from_code(n_, x).str();
  }

  std::string name() const override { return "T_" + std::to_string(n_); }

  int points() const override { return n_; }

  std::optional<Transformation> transformation(Index x) const override {
    return Transformation::from_code(n_, x);
  }

  std::optional<Index> index_of(const Transformation& t) const override {
    if (t.degree() != n_) return std::nullopt;
    return static_cast<Index>(t.code());
  }

 private:
  int n_;
  std::size_t size_;
};

// A composition-closed sub-carrier of T_n given by a sorted list of codes.
class SubTnBackend : public MonoidBackend {
 public:
  SubTnBackend(int n, std::vector<std::uint32_t> codes, std::string name)
      : n_(n), codes_(std::move(codes)), name_(std::move(name)) {
    identity_ = lookup(Transformation::identity(n_).code()).value();
  }

  std::size_t size() const override { return codes_.size(); }
  Index identity() const override { return identity_; }

  Index op(Index a, Index b) const override {
    Transformation prod = compose(Transformation::from_code(n_, codes_[a]),
                                  Transformation::from_code(n_, codes_[b]));
    auto idx = lookup(prod.code());
    if (!idx) {
      throw Error("not-closed", name_ + " is not closed under composition at " +
                                    prod.str());
    }
    return *idx;
  }

  std::string label(Index x) const override {
    return Transformation::from_code(n_, codes_[x]).str();
  }

  std::string name() const override { return name_; }
  int points() const override { return n_; }

  std::optional<Transformation> transformation(Index x) const override {
    return Transformation::from_code(n_, codes_[x]);
  }

  std::optional<Index> index_of(const Transformation& t) const override {
    if (t.degree() != n_) return std::nullopt;
    return lookup(t.code());
  }

 private:
  std::optional<Index> lookup(std::uint64_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(),
                               static_cast<std::uint32_t>(code));
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<Index>(it - codes_.begin());
  }

  int n_;
  std::vector<std::uint32_t> codes_;
  std::string name_;
  Index identity_;
};

// Reduced power monoid: subsets of the base carrier containing the base
// identity, as bitmasks, under setwise product.
class PowerBackend : public MonoidBackend {
 public:
  explicit PowerBackend(FiniteMonoid base) : base_(std::move(base)) {
    const std::size_t m = base_.size();
    if (m > limits::power_base()) {
      throw Error("size-cap-exceeded",
                  "power monoid base size " + std::to_string(m) +
                      " exceeds cap " + std::to_string(limits::power_base()) +
                      " (PREMON_MAX_POWER_BASE)");
    }
    const std::uint64_t idbit = std::uint64_t{1} << base_.identity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (mask & idbit) masks_.push_back(mask);
    }
    index_of_mask_.assign(std::size_t{1} << m, kInvalid);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      index_of_mask_[masks_[i]] = static_cast<Index>(i);
    }
    identity_ = index_of_mask_[idbit];
  }

  std::size_t size() const override { return masks_.size(); }
  Index identity() const override { return identity_; }

  Index op(Index a, Index b) const override {
    std::uint64_t ma = masks_[a], prod = 0;
    while (ma != 0) {
      int x = std::countr_zero(ma);
      ma &= ma - 1;
      std::uint64_t mb = masks_[b];
      while (mb != 0) {
        int y = std::countr_zero(mb);
        mb &= mb - 1;
        prod |= std::uint64_t{1}
                << base_.op(static_cast<Index>(x), static_cast<Index>(y));
      }
    }
    return index_of_mask_[prod];
  }

  std::string label(Index x) const override {
    std::string out = "{";
    std::uint64_t m = masks_[x];
    bool first = true;
    while (m != 0) {
      int i = std::countr_zero(m);
      m &= m - 1;
      if (!first) out += ",";
      out += base_.label(static_cast<Index>(i));
      first = false;
    }
    return out + "}";
  }

  std::string name() const override { return "P1(" + base_.name() + ")"; }

  bool has_subsets() const override { return true; }

  std::vector<Index> subset_members(Index x) const override {
    std::vector<Index> out;
    std::uint64_t m = masks_[x];
    while (m != 0) {
      int i = std::countr_zero(m);
      m &= m - 1;
      out.push_back(static_cast<Index>(i));
    }
    return out;
  }

  const FiniteMonoid* base() const override { return &base_; }

 private:
  static constexpr Index kInvalid = static_cast<Index>(-1);
  FiniteMonoid base_;
  std::vector<std::uint64_t> masks_;
  std::vector<Index> index_of_mask_;
  Index identity_ = 0;
};

class TableBackend : public MonoidBackend {
 public:
  TableBackend(std::size_t size, std::vector<Index> table,
               std::vector<std::string> labels, std::string name, Index identity)
      : size_(size),
        table_(std::move(table)),
        labels_(std::move(labels)),
        name_(std::move(name)),
        identity_(identity) {}

  std::size_t size() const override { return size_; }
  Index identity() const override { return identity_; }
  Index op(Index a, Index b) const override { return table_[a * size_ + b]; }

  std::string label(Index x) const override {
    if (x < labels_.size()) return labels_[x];
    return std::to_string(x);
  }

  std::string name() const override { return name_; }

 private:
  std::size_t size_;
  std::vector<Index> table_;
  std::vector<std::string> labels_;
  std::string name_;
  Index identity_;
};

}  // namespace

}  // namespace detail

FiniteMonoid::FiniteMonoid(std::shared_ptr<const detail::MonoidBackend> impl)
    : impl_(std::move(impl)) {}

std::size_t FiniteMonoid::size() const { return impl_->size(); }
Index FiniteMonoid::identity() const { return impl_->identity(); }
Index FiniteMonoid::op(Index a, Index b) const { return impl_->op(a, b); }
std::string FiniteMonoid::label(Index x) const { return impl_->label(x); }
std::string FiniteMonoid::name() const { return impl_->name(); }

bool FiniteMonoid::has_transformations() const { return impl_->points() > 0; }
int FiniteMonoid::points() const { return impl_->points(); }

Transformation FiniteMonoid::transformation(Index x) const {
  auto t = impl_->transformation(x);
  if (!t) {
    throw Error("not-transformation-backed",
                name() + " does not carry transformations");
  }
  return *t;
}

std::optional<Index> FiniteMonoid::index_of(const Transformation& t) const {
  return impl_->index_of(t);
}

bool FiniteMonoid::has_subsets() const { return impl_->has_subsets(); }

std::vector<Index> FiniteMonoid::subset_members(Index x) const {
  if (!impl_->has_subsets()) {
    throw Error("not-power-backed", name() + " does not carry subsets");
  }
  return impl_->subset_members(x);
}

const FiniteMonoid& FiniteMonoid::base() const {
  const FiniteMonoid* b = impl_->base();
  if (b == nullptr) {
    throw Error("not-power-backed", name() + " has no base monoid");
  }
  return *b;
}

FiniteMonoid full_transformation_monoid(int n) {
  detail::check_tn_points(n);
  return FiniteMonoid(std::make_shared<detail::TnBackend>(n));
}

FiniteMonoid symmetric_group(int n) {
  detail::check_tn_points(n);
  std::vector<std::uint32_t> codes;
  const std::uint64_t total = detail::pow_u64(static_cast<std::uint64_t>(n), n);
  for (std::uint64_t c = 0; c < total; ++c) {
    if (Transformation::from_code(n, c).is_bijective()) {
      codes.push_back(static_cast<std::uint32_t>(c));
    }
  }
  return FiniteMonoid(std::make_shared<detail::SubTnBackend>(
      n, std::move(codes), "S_" + std::to_string(n)));
}

FiniteMonoid singular_submonoid(int n) {
  detail::check_tn_points(n);
  std::vector<std::uint32_t> codes;
  const std::uint64_t total = detail::pow_u64(static_cast<std::uint64_t>(n), n);
  const std::uint64_t id_code = Transformation::identity(n).code();
  for (std::uint64_t c = 0; c < total; ++c) {
    if (c == id_code || !Transformation::from_code(n, c).is_bijective()) {
      codes.push_back(static_cast<std::uint32_t>(c));
    }
  }
  return FiniteMonoid(std::make_shared<detail::SubTnBackend>(
      n, std::move(codes), "singular-T_" + std::to_string(n)));
}

FiniteMonoid reduced_power_monoid(const FiniteMonoid& base) {
  return FiniteMonoid(std::make_shared<detail::PowerBackend>(base));
}

FiniteMonoid table_monoid(std::size_t size, std::vector<Index> table,
                          std::vector<std::string> labels, std::string name) {
  if (size == 0) {
    throw Error("bad-table", "carrier must be non-empty");
  }
  if (size > limits::cubic_scan_carrier()) {
    throw Error("size-cap-exceeded",
                "table carrier " + std::to_string(size) + " exceeds cap " +
                    std::to_string(limits::cubic_scan_carrier()) +
                    " (PREMON_MAX_CUBIC_CARRIER)");
  }
  if (table.size() != size * size) {
    throw Error("bad-table", "table must have size^2 entries");
  }
  for (Index v : table) {
    if (v >= size) {
      throw Error("bad-table", "table entry " + std::to_string(v) +
                                   " out of range");
    }
  }
  // Infer the identity.
  std::optional<Index> identity;
  for (Index e = 0; e < size; ++e) {
    bool ok = true;
    for (Index x = 0; x < size && ok; ++x) {
      ok = table[e * size + x] == x && table[x * size + e] == x;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (!identity) {
    throw Error("no-identity", "table has no two-sided identity");
  }
  auto backend = std::make_shared<detail::TableBackend>(
      size, std::move(table), std::move(labels), std::move(name), *identity);
  FiniteMonoid m{backend};
  PredicateReport assoc = verify_associativity(m);
  if (!assoc.holds) {
    throw Error("not-associative", assoc.description);
  }
  return m;
}

FiniteMonoid cyclic_group(int k) {
  if (k < 1) {
    throw Error("bad-argument", "cyclic group order must be positive");
  }
  const auto n = static_cast<std::size_t>(k);
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[x] = std::to_string(x);
    for (std::size_t y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<Index>((x + y) % n);
    }
  }
  return table_monoid(n, std::move(table), std::move(labels),
                      "Z/" + std::to_string(k));
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  auto pack = [nb](Index x, Index y) {
    return static_cast<Index>(x * nb + y);
  };
  for (Index xa = 0; xa < na; ++xa) {
    for (Index xb = 0; xb < nb; ++xb) {
      labels[pack(xa, xb)] = "(" + a.label(xa) + "," + b.label(xb) + ")";
      for (Index ya = 0; ya < na; ++ya) {
        for (Index yb = 0; yb < nb; ++yb) {
          table[static_cast<std::size_t>(pack(xa, xb)) * n + pack(ya, yb)] =
              pack(a.op(xa, ya), b.op(xb, yb));
        }
      }
    }
  }
  return table_monoid(n, std::move(table), std::move(labels),
                      "(" + a.name() + " x " + b.name() + ")");
}

FinitePreorder divisibility_preorder(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  if (n > limits::divisibility_carrier()) {
    throw Error("size-cap-exceeded",
                "divisibility scan over " + std::to_string(n) +
                    " elements exceeds cap " +
                    std::to_string(limits::divisibility_carrier()) +
                    " (PREMON_MAX_DIV_CARRIER)");
  }
  // reach[x] = bitset of the two-sided principal ideal of x.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(n * words, 0);
  for (Index x = 0; x < n; ++x) {
    for (Index u = 0; u < n; ++u) {
      const Index ux = m.op(u, x);
      for (Index v = 0; v < n; ++v) {
        const Index y = m.op(ux, v);
        reach[x * words + (y >> 6)] |= std::uint64_t{1} << (y & 63);
      }
    }
  }
  return FinitePreorder(n, [&](Index x, Index y) {
    return (reach[x * words + (y >> 6)] >> (y & 63)) & 1;
  });
}

std::vector<Index> monoid_units(const FiniteMonoid& m) {
  const auto n = static_cast<Index>(m.size());
  const Index e = m.identity();
  std::vector<Index> units;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (m.op(x, y) == e && m.op(y, x) == e) {
        units.push_back(x);
        break;
      }
    }
  }
  return units;
}

namespace {

std::vector<bool> unit_flags(const FiniteMonoid& m) {
  std::vector<bool> flags(m.size(), false);
  for (Index u : monoid_units(m)) flags[u] = true;
  return flags;
}

void check_cubic_cap(const FiniteMonoid& m, const char* what) {
  if (m.size() > limits::cubic_scan_carrier()) {
    throw Error("size-cap-exceeded",
                std::string(what) + " over " + std::to_string(m.size()) +
                    " elements exceeds cap " +
                    std::to_string(limits::cubic_scan_carrier()) +
                    " (PREMON_MAX_CUBIC_CARRIER)");
  }
}

}  // namespace

PredicateReport is_dedekind_finite(const FiniteMonoid& m) {
  const auto n = static_cast<Index>(m.size());
  std::vector<bool> unit = unit_flags(m);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (unit[m.op(x, y)] && (!unit[x] || !unit[y])) {
        return {false,
                {x, y},
                m.label(x) + " * " + m.label(y) +
                    " is a unit but a factor is not"};
      }
    }
  }
  return {};
}

PredicateReport is_acyclic(const FiniteMonoid& m) {
  check_cubic_cap(m, "acyclicity scan");
  const auto n = static_cast<Index>(m.size());
  std::vector<bool> unit = unit_flags(m);
  for (Index u = 0; u < n; ++u) {
    for (Index x = 0; x < n; ++x) {
      const Index ux = m.op(u, x);
      for (Index v = 0; v < n; ++v) {
        if (!unit[u] || !unit[v]) {
          if (m.op(ux, v) == x) {
            return {false,
                    {u, x, v},
                    m.label(u) + " * " + m.label(x) + " * " + m.label(v) +
                        " = " + m.label(x) + " with a non-unit side factor"};
          }
        }
      }
    }
  }
  return {};
}

PredicateReport is_unit_cancellative(const FiniteMonoid& m) {
  const auto n = static_cast<Index>(m.size());
  std::vector<bool> unit = unit_flags(m);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (unit[y]) continue;
      if (m.op(x, y) == x || m.op(y, x) == x) {
        return {false,
                {x, y},
                m.label(x) + " absorbs the non-unit " + m.label(y)};
      }
    }
  }
  return {};
}

PredicateReport is_cancellative(const FiniteMonoid& m) {
  check_cubic_cap(m, "cancellativity scan");
  const auto n = static_cast<Index>(m.size());
  for (Index z = 0; z < n; ++z) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = static_cast<Index>(x + 1); y < n; ++y) {
        if (m.op(z, x) == m.op(z, y)) {
          return {false,
                  {x, y, z},
                  m.label(z) + " * " + m.label(x) + " = " + m.label(z) +
                      " * " + m.label(y) + " but the right factors differ"};
        }
        if (m.op(x, z) == m.op(y, z)) {
          return {false,
                  {x, y, z},
                  m.label(x) + " * " + m.label(z) + " = " + m.label(y) +
                      " * " + m.label(z) + " but the left factors differ"};
        }
      }
    }
  }
  return {};
}

PredicateReport verify_associativity(const FiniteMonoid& m) {
  check_cubic_cap(m, "associativity scan");
  const auto n = static_cast<Index>(m.size());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index xy = m.op(x, y);
      for (Index z = 0; z < n; ++z) {
        if (m.op(xy, z) != m.op(x, m.op(y, z))) {
          return {false,
                  {x, y, z},
                  "(" + m.label(x) + " * " + m.label(y) + ") * " + m.label(z) +
                      " != " + m.label(x) + " * (" + m.label(y) + " * " +
                      m.label(z) + ")"};
        }
      }
    }
  }
  return {};
}

std::vector<Index> quasi_identity_elements(const FiniteMonoid& m) {
  const int n = m.points();
  if (n == 0) {
    throw Error("not-transformation-backed",
                m.name() + " does not carry transformations");
  }
  std::vector<Index> out;
  for (int fixed = 0; fixed < n; ++fixed) {
    for (int target = 0; target < n; ++target) {
      if (target == fixed) continue;
      auto im = Transformation::identity(n).images();
      im[static_cast<std::size_t>(fixed)] = static_cast<std::uint8_t>(target);
      auto idx = m.index_of(Transformation(std::move(im)));
      if (idx) out.push_back(*idx);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> transposition_elements(const FiniteMonoid& m) {
  const int n = m.points();
  if (n == 0) {
    throw Error("not-transformation-backed",
                m.name() + " does not carry transformations");
  }
  std::vector<Index> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto idx = m.index_of(Permutation::transposition(n, a, b).transformation());
      if (idx) out.push_back(*idx);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace premon
