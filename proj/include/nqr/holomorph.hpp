#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nqr/families.hpp"
#include "nqr/graph.hpp"
#include "nqr/serialize.hpp"

namespace nqr {

struct HolomorphCandidate {
  ConnectionCandidate candidate;
  std::optional<SrgParams> params;
  bool complete = false;
  /// The set splits into H-orbits exactly as its shape says.
  bool shape_verified = false;
};

struct HolomorphReport {
  std::size_t group_order = 0;
  bool nonabelian_simple = false;
  std::vector<HolomorphCandidate> candidates;

  std::size_t count(OrbitShape shape) const;
  /// Candidates that are strongly regular but not complete.
  std::vector<std::size_t> violations() const;
};

inline constexpr std::size_t kHolomorphTableCap = 120;

/// Builds Cay(T, S) for every candidate S from holomorph_orbit_sets(T, H) and
/// records its srg parameters. ResourceError if |T| exceeds `cap`.
HolomorphReport falsify_holomorph(const GroupTable& t, const PermGroup& h, std::size_t cap = kHolomorphTableCap);

Json to_json(const HolomorphReport& r);

}  // namespace nqr
