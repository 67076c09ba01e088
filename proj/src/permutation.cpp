#include "nqr/permutation.hpp"

#include <cctype>
#include <numeric>

#include "nqr/errors.hpp"

namespace nqr {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw DomainError("image array is not a bijection of {0.." +
                        std::to_string(images_.size()) + "-1}");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw DomainError("bad cycle notation '" + std::string(text) + "': " + why);
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (v >= degree) fail("point out of range for degree " + std::to_string(degree));
        ++pos;
      }
      if (used[v]) fail("point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(static_cast<Point>(v));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

namespace {

template <typename F>
void for_each_cycle_length(std::span<const Point> images, F&& f) {
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    f(len);
  }
}

}  // namespace

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for_each_cycle_length(images_, [&](std::uint64_t len) { result = std::lcm(result, len); });
  return result;
}

std::uint32_t Permutation::prime_order() const {
  std::uint64_t common = 0;
  bool uniform = true;
  for_each_cycle_length(images_, [&](std::uint64_t len) {
    if (len == 1) return;
    if (common == 0) common = len;
    else if (common != len) uniform = false;
  });
  if (!uniform || common < 2) return 0;
  for (std::uint64_t d = 2; d * d <= common; ++d)
    if (common % d == 0) return 0;
  return static_cast<std::uint32_t>(common);
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DomainError("cannot compose permutations of degree " + std::to_string(a.degree()) +
                      " and " + std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // (g x g^-1)(g(i)) = g(x(i))
  if (x.degree() != g.degree()) throw DomainError("conjugation degree mismatch");
  std::vector<Point> images(x.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[g(static_cast<Point>(i))] = g(x(static_cast<Point>(i)));
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace nqr
