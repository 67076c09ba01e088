#include "nqr/galois.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nqr/errors.hpp"

namespace nqr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t a = 0;
  while (q % p == 0) {
    q /= p;
    ++a;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), a};
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
    trim(f);
  }
  return f;
}

// Monic polynomials of the given degree, numbered 0..p^d-1.
Poly monic_from_index(std::uint64_t t, std::uint32_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(t % p);
    t /= p;
  }
  return f;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2 || f.back() != 1) return false;
  const auto deg = static_cast<std::uint32_t>(f.size() - 1);
  if (deg == 1) return true;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t)
      if (poly_mod(f, monic_from_index(t, d, p), p).empty()) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), size_(ipow(p, a)), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (a == 0) throw DomainError("field degree must be positive");
  if (modulus_.size() != a + 1 || !is_irreducible(p, modulus_))
    throw DomainError("modulus is not a monic irreducible polynomial of degree " + std::to_string(a));
}

void FiniteField::check(const FieldElem& x) const {
  if (x.coeffs.size() != a_) throw DomainError("field element has the wrong length");
  for (auto c : x.coeffs)
    if (c >= p_) throw DomainError("field element coefficient out of range");
}

FieldElem FiniteField::zero() const { return FieldElem{Poly(a_, 0)}; }

FieldElem FiniteField::one() const { return constant(1); }

FieldElem FiniteField::constant(std::uint64_t c) const {
  FieldElem e = zero();
  e.coeffs[0] = static_cast<std::uint32_t>(c % p_);
  return e;
}

FieldElem FiniteField::element(std::uint64_t index) const {
  if (index >= size_) throw DomainError("field element index out of range");
  FieldElem e = zero();
  for (std::uint32_t i = 0; i < a_; ++i) {
    e.coeffs[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index(const FieldElem& e) const {
  check(e);
  std::uint64_t idx = 0;
  for (std::uint32_t i = a_; i-- > 0;) idx = idx * p_ + e.coeffs[i];
  return idx;
}

FieldElem FiniteField::add(const FieldElem& x, const FieldElem& y) const {
  check(x);
  check(y);
  FieldElem r = zero();
  for (std::uint32_t i = 0; i < a_; ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % p_;
  return r;
}

FieldElem FiniteField::neg(const FieldElem& x) const {
  check(x);
  FieldElem r = zero();
  for (std::uint32_t i = 0; i < a_; ++i) r.coeffs[i] = (p_ - x.coeffs[i]) % p_;
  return r;
}

FieldElem FiniteField::sub(const FieldElem& x, const FieldElem& y) const { return add(x, neg(y)); }

FieldElem FiniteField::mul(const FieldElem& x, const FieldElem& y) const {
  check(x);
  check(y);
  Poly prod(2 * a_ - 1, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < a_; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(x.coeffs[i]) * y.coeffs[j]) % p_);
  }
  Poly rem = poly_mod(std::move(prod), modulus_, p_);
  rem.resize(a_, 0);
  return FieldElem{std::move(rem)};
}

FieldElem FiniteField::pow(FieldElem x, std::uint64_t e) const {
  FieldElem result = one();
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

FieldElem FiniteField::inv(const FieldElem& x) const {
  if (x == zero()) throw DomainError("inverse of zero in GF(" + std::to_string(size_) + ")");
  return pow(x, size_ - 2);
}

std::uint64_t FiniteField::multiplicative_order(const FieldElem& x) const {
  if (x == zero()) throw DomainError("zero has no multiplicative order");
  const FieldElem e = one();
  FieldElem y = x;
  std::uint64_t k = 1;
  while (y != e) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

FieldElem FiniteField::primitive_element() const {
  // Order divides size-1; test the maximal proper divisors only.
  const std::uint64_t m = size_ - 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = m;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    primes.push_back(d);
    while (rest % d == 0) rest /= d;
  }
  if (rest > 1) primes.push_back(rest);
  for (std::uint64_t idx = 1; idx < size_; ++idx) {
    const FieldElem x = element(idx);
    bool generator = true;
    for (auto q : primes)
      if (pow(x, m / q) == one()) generator = false;
    if (generator) return x;
  }
  throw DomainError("no primitive element found");  // unreachable for a field
}

std::vector<FieldElem> FiniteField::enumerate() const {
  std::vector<FieldElem> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

FiniteField make_field(std::uint32_t p, std::uint32_t a) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (a < 1 || a > kMaxFieldDegree)
    throw ResourceError("field degree " + std::to_string(a) + " outside 1.." +
                        std::to_string(kMaxFieldDegree));
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    size *= p;
    if (size > kMaxFieldSize)
      throw ResourceError("field size " + std::to_string(p) + "^" + std::to_string(a) +
                          " exceeds " + std::to_string(kMaxFieldSize));
  }
  // Candidate t encodes (c_0, ..., c_{a-1}) with c_0 most significant, so
  // increasing t walks the low-to-high coefficient sequences lexicographically.
  for (std::uint64_t t = 0; t < size; ++t) {
    Poly f(a + 1, 0);
    f[a] = 1;
    std::uint64_t rest = t;
    for (std::uint32_t i = a; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, f)) return FiniteField(p, a, std::move(f));
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

std::vector<FieldElem> nonzero_squares(const FiniteField& f) {
  std::set<std::uint64_t> indices;
  for (std::uint64_t i = 1; i < f.size(); ++i) {
    const FieldElem y = f.element(i);
    indices.insert(f.index(f.mul(y, y)));
  }
  std::vector<FieldElem> out;
  for (auto i : indices) out.push_back(f.element(i));
  return out;
}

}  // namespace nqr
