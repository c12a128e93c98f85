#ifndef PREMON_TRANSFORMATION_HPP_
#define PREMON_TRANSFORMATION_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace premon {

// A self-map of {0, ..., n-1} given by its image list. Points are 0-based
// internally; all text input/output is 1-based ("2,3,2" maps 1->2, 2->3, 3->2).
// Degree is limited to 64 so fixed/image sets fit in a word mask.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint8_t> images);

  static Transformation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  std::uint64_t fix_mask() const;
  std::vector<int> fix_set() const;
  int fix_count() const;
  std::uint64_t image_mask() const;
  std::vector<int> image_set() const;
  int image_count() const;

  bool is_identity() const;
  bool is_bijective() const;
  bool is_singular() const { return !is_bijective(); }
  bool is_idempotent() const;
  // Fixes exactly n-1 points. Such a map is automatically idempotent and
  // singular.
  bool is_quasi_identity() const;

  // Mixed-radix code: sum images[i] * n^(n-1-i). Lexicographic image order
  // coincides with numeric code order.
  std::uint64_t code() const;
  static Transformation from_code(int n, std::uint64_t code);

  // 1-based comma-separated text form.
  static Transformation parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation& a, const Transformation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint8_t> images_;
};

// Composition f*g = f after g: (f*g)(x) = f(g(x)).
Transformation compose(const Transformation& f, const Transformation& g);

// A bijective transformation. Construction validates bijectivity.
class Permutation {
 public:
  explicit Permutation(Transformation t);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  const Transformation& transformation() const { return t_; }
  int degree() const { return t_.degree(); }
  int apply(int x) const { return t_.apply(x); }
  bool is_identity() const { return t_.is_identity(); }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Transformation t_;
};

Permutation compose(const Permutation& f, const Permutation& g);

// sigma * t * sigma^{-1}. Preserves |fix| and quasi-identities.
Transformation conjugate(const Permutation& sigma, const Transformation& t);

// Moves exactly two points.
bool is_transposition(const Permutation& p);

}  // namespace premon

#endif  // PREMON_TRANSFORMATION_HPP_
