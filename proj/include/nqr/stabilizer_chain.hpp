#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nqr/permutation.hpp"
#include "nqr/rational.hpp"

namespace nqr {

/**
 * Base and strong generating set built by the deterministic incremental
 * Schreier-Sims algorithm.
 *
 * Each level stores explicit coset representatives (and their inverses) for
 * the basic orbit, which is affordable at the degrees this library targets
 * (a few hundred points) and makes sifting a handful of array lookups.
 *
 * Every element factors uniquely as u_0 * u_1 * ... * u_{k-1} with u_i a
 * coset representative of level i, which gives a mixed-radix ranking of the
 * group used for bitset-backed enumeration.
 */
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t base_length() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

  BigInt order() const;
  bool contains(const Permutation& g) const;

  /// Rank in [0, |G|); empty if g is not a member. Requires |G| < 2^64.
  std::optional<std::uint64_t> rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> strong_gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit/reps, or -1
    std::vector<Permutation> reps;   // reps[i](base) == orbit[i]
    std::vector<Permutation> inv_reps;
  };

  void rebuild_orbit(Level& level) const;
  Level make_level(Point base) const;
  /// Sifts g; returns the residue and the level at which sifting stopped
  /// (levels_.size() if it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace nqr
