#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace nqr {

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
};

/// (p, a) with q = p^a, or empty if q is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t q);

/// Element of GF(p^a): residue polynomial coefficients, low to high, length a.
struct FieldElem {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/**
 * GF(p^a) as GF(p)[x] modulo a monic irreducible polynomial.
 *
 * Elements are numbered by index = sum c_i p^i; `enumerate` and every
 * vertex labelling built on a field use this numbering.
 */
class FiniteField {
 public:
  /// Throws DomainError if p is not prime or the modulus is not monic
  /// irreducible of degree a.
  FiniteField(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return a_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Coefficients low to high, length a + 1, leading coefficient 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem element(std::uint64_t index) const;
  std::uint64_t index(const FieldElem& e) const;
  /// The constant c mod p.
  FieldElem constant(std::uint64_t c) const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem neg(const FieldElem& x) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  /// Throws DomainError for zero.
  FieldElem inv(const FieldElem& x) const;
  FieldElem pow(FieldElem x, std::uint64_t e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElem& x) const;
  /// Least-index generator of the multiplicative group.
  FieldElem primitive_element() const;

  /// All p^a elements in index order.
  std::vector<FieldElem> enumerate() const;

 private:
  void check(const FieldElem& x) const;

  std::uint32_t p_;
  std::uint32_t a_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;
};

/// Monic polynomial (low-to-high coefficients) irreducible over GF(p), by
/// exhaustive trial division.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

inline constexpr std::uint32_t kMaxFieldDegree = 8;
inline constexpr std::uint64_t kMaxFieldSize = 1'000'000;

/// GF(p^a) with the least monic irreducible modulus, comparing coefficient
/// sequences low to high lexicographically. DomainError if p is not prime;
/// ResourceError if a is outside 1..8 or p^a exceeds 10^6.
FiniteField make_field(std::uint32_t p, std::uint32_t a);

/// {y^2 : y != 0}, in index order.
std::vector<FieldElem> nonzero_squares(const FiniteField& f);

}  // namespace nqr
