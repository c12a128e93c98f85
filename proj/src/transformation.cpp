#include "premon/transformation.hpp"

#include <bit>
#include <sstream>

#include "premon/error.hpp"

namespace premon {

Transformation::Transformation(std::vector<std::uint8_t> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error("bad-transformation", "image list must be non-empty");
  }
  if (images_.size() > 64) {
    throw Error("bad-transformation", "degree above 64 is not supported");
  }
  for (std::uint8_t v : images_) {
    if (v >= images_.size()) {
      throw Error("bad-transformation",
                  "image " + std::to_string(v + 1) + " out of range for degree " +
                      std::to_string(images_.size()));
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return Transformation(std::move(im));
}

std::uint64_t Transformation::fix_mask() const {
  std::uint64_t m = 0;
  for (int i = 0; i < degree(); ++i) {
    if (apply(i) == i) m |= (std::uint64_t{1} << i);
  }
  return m;
}

std::vector<int> Transformation::fix_set() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i) {
    if (apply(i) == i) out.push_back(i);
  }
  return out;
}

int Transformation::fix_count() const { return std::popcount(fix_mask()); }

std::uint64_t Transformation::image_mask() const {
  std::uint64_t m = 0;
  for (std::uint8_t v : images_) m |= (std::uint64_t{1} << v);
  return m;
}

std::vector<int> Transformation::image_set() const {
  std::uint64_t m = image_mask();
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i) {
    if (m & (std::uint64_t{1} << i)) out.push_back(i);
  }
  return out;
}

int Transformation::image_count() const { return std::popcount(image_mask()); }

bool Transformation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (apply(i) != i) return false;
  }
  return true;
}

bool Transformation::is_bijective() const {
  return image_count() == degree();
}

bool Transformation::is_idempotent() const {
  for (int i = 0; i < degree(); ++i) {
    if (apply(apply(i)) != apply(i)) return false;
  }
  return true;
}

bool Transformation::is_quasi_identity() const {
  return fix_count() == degree() - 1;
}

std::uint64_t Transformation::code() const {
  std::uint64_t c = 0;
  const auto n = static_cast<std::uint64_t>(degree());
  for (std::uint8_t v : images_) c = c * n + v;
  return c;
}

Transformation Transformation::from_code(int n, std::uint64_t code) {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    im[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(code % static_cast<std::uint64_t>(n));
    code /= static_cast<std::uint64_t>(n);
  }
  return Transformation(std::move(im));
}

Transformation Transformation::parse(const std::string& text) {
  std::vector<std::uint8_t> im;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      long v = std::stol(part);
      if (v < 1 || v > 64) {
        throw Error("bad-transformation",
                    "image '" + part + "' out of range (1-based)");
      }
      im.push_back(static_cast<std::uint8_t>(v - 1));
    } catch (const Error&) {
      throw;
    } catch (...) {
      throw Error("bad-transformation", "cannot parse image '" + part + "'");
    }
  }
  return Transformation(std::move(im));
}

std::string Transformation::str() const {
  std::string out;
  for (int i = 0; i < degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(apply(i) + 1);
  }
  return out;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw Error("degree-mismatch", "composing maps of degree " +
                                       std::to_string(f.degree()) + " and " +
                                       std::to_string(g.degree()));
  }
  std::vector<std::uint8_t> im(static_cast<std::size_t>(f.degree()));
  for (int i = 0; i < f.degree(); ++i) {
    im[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(f.apply(g.apply(i)));
  }
  return Transformation(std::move(im));
}

Permutation::Permutation(Transformation t) : t_(std::move(t)) {
  if (!t_.is_bijective()) {
    throw Error("not-bijective", "'" + t_.str() + "' is not a permutation");
  }
}

Permutation Permutation::identity(int n) {
  return Permutation(Transformation::identity(n));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw Error("bad-transposition", "invalid pair for degree " + std::to_string(n));
  }
  auto im = Transformation::identity(n).images();
  im[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
  im[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  return Permutation(Transformation(std::move(im)));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> im(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) {
    im[static_cast<std::size_t>(apply(i))] = static_cast<std::uint8_t>(i);
  }
  return Permutation(Transformation(std::move(im)));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  return Permutation(compose(f.transformation(), g.transformation()));
}

Transformation conjugate(const Permutation& sigma, const Transformation& t) {
  return compose(sigma.transformation(),
                 compose(t, sigma.inverse().transformation()));
}

bool is_transposition(const Permutation& p) {
  return p.transformation().fix_count() == p.degree() - 2;
}

}  // namespace premon
