#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nqr {

using Point = std::uint32_t;

/**
 * A bijection of {0..n-1}, stored as its image array.
 *
 * Composition follows function notation: (a * b)(x) = a(b(x)), so b acts
 * first. The defaulted ordering compares image arrays lexicographically,
 * which is the tie-break order used when a deterministic witness is needed.
 */
class Permutation {
 public:
  Permutation() = default;

  /// Throws DomainError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Element order, i.e. the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// The prime p if this permutation has order p, else 0.
  std::uint32_t prime_order() const;

  /// Cycle notation with cycles led by their least point; "()" for identity.
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend Permutation conjugate(const Permutation& x, const Permutation& g);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// g * x * g^-1.
Permutation conjugate(const Permutation& x, const Permutation& g);

}  // namespace nqr
