#include "nqr/stabilizer_chain.hpp"

#include <limits>

#include "nqr/errors.hpp"

namespace nqr {

namespace {

std::optional<Point> first_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  return std::nullopt;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
    if (!g.is_identity()) gens.push_back(g);
  }
  if (gens.empty()) return;

  // Every generator must move some base point.
  std::vector<Point> base;
  for (const auto& g : gens) {
    bool fixes_base = true;
    for (Point b : base)
      if (g(b) != b) fixes_base = false;
    if (fixes_base) base.push_back(*first_moved_point(g));
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level = make_level(base[i]);
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (g(base[j]) != base[j]) fixes_prefix = false;
      if (fixes_prefix) level.strong_gens.push_back(g);
    }
    rebuild_orbit(level);
    levels_.push_back(std::move(level));
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restart; ++oi) {
      for (std::size_t si = 0; si < levels_[li].strong_gens.size(); ++si) {
        const Level& level = levels_[li];
        const Permutation& s = level.strong_gens[si];
        const Point image = s(level.orbit[oi]);
        const auto target = static_cast<std::size_t>(level.slot[image]);
        Permutation moved = s * level.reps[oi];
        if (moved == level.reps[target]) continue;

        // Schreier generator: fixes base points 0..i.
        Permutation schreier = level.inv_reps[target] * moved;
        auto [residue, stop] = strip(std::move(schreier));
        if (stop == levels_.size()) {
          if (residue.is_identity()) continue;
          levels_.push_back(make_level(*first_moved_point(residue)));
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].strong_gens.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
}

StabilizerChain::Level StabilizerChain::make_level(Point base) const {
  Level level;
  level.base = base;
  level.slot.assign(degree_, -1);
  return level;
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.reps.assign(1, Permutation::identity(degree_));
  level.inv_reps.assign(1, Permutation::identity(degree_));
  level.slot.assign(degree_, -1);
  level.slot[level.base] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.strong_gens) {
      const Point y = s(level.orbit[k]);
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.reps.push_back(s * level.reps[k]);
      level.inv_reps.push_back(level.reps.back().inverse());
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    const std::int32_t s = level.slot[g(level.base)];
    if (s < 0) return {std::move(g), i};
    if (s > 0) g = level.inv_reps[static_cast<std::size_t>(s)] * g;
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw DomainError("membership test: degree " + std::to_string(g.degree()) +
                      " does not match group degree " + std::to_string(degree_));
  auto [residue, stop] = strip(g);
  return stop == levels_.size() && residue.is_identity();
}

std::optional<std::uint64_t> StabilizerChain::rank(const Permutation& g) const {
  if (g.degree() != degree_) return std::nullopt;
  std::uint64_t r = 0;
  Permutation h = g;
  for (const auto& level : levels_) {
    const std::int32_t s = level.slot[h(level.base)];
    if (s < 0) return std::nullopt;
    r = r * level.orbit.size() + static_cast<std::uint64_t>(s);
    if (s > 0) h = level.inv_reps[static_cast<std::size_t>(s)] * h;
  }
  if (!h.is_identity()) return std::nullopt;
  return r;
}

Permutation StabilizerChain::unrank(std::uint64_t r) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = levels_.size(); i-- > 0;) {
    digits[i] = static_cast<std::size_t>(r % levels_[i].orbit.size());
    r /= levels_[i].orbit.size();
  }
  if (r != 0) throw DomainError("rank out of range");
  Permutation g = Permutation::identity(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (digits[i] > 0) g = g * levels_[i].reps[digits[i]];
  return g;
}

}  // namespace nqr
