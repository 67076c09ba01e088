#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nqr/galois.hpp"
#include "nqr/graph.hpp"
#include "nqr/permgrp.hpp"

namespace nqr {

struct IndexLabel {
  std::uint32_t value = 0;
};
struct PairLabel {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
};
struct SubsetLabel {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};
struct FieldLabel {
  FieldElem value;
};
struct FieldPairLabel {
  FieldElem first;
  FieldElem second;
};

using VertexLabel = std::variant<IndexLabel, PairLabel, SubsetLabel, FieldLabel, FieldPairLabel>;

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// A constructed graph with its natural vertex labels and the automorphism
/// groups that come with the construction.
struct FamilyInstance {
  Graph graph;
  std::string label;
  std::vector<VertexLabel> vertex_labels;
  std::vector<NamedGroup> companion_groups;

  /// Throws DomainError if no companion group has that name.
  const PermGroup& group(std::string_view name) const;
};

/// K_n with S_n = <(0 1), (0 1 ... n-1)> as "symmetric".
FamilyInstance complete(std::size_t n);

/// K_{parts[size]}; vertex part*size + index. Companions: "wreath"
/// (S_size wr S_parts) and "base" (S_size^parts, whose orbits are the parts).
FamilyInstance complete_multipartite(std::size_t parts, std::size_t size);

/// K_{b[b]} - bK_b: vertex (i, j) = i*b + j, part i, adjacent iff i != i' and
/// j != j'. The deleted cliques are the constant-j transversals.
/// Companions: "fullB" (S_b x S_b), "partN" (1 x S_b), "wreath" (fullB + swap).
FamilyInstance multipartite_minus(std::size_t b);

/// K_b box K_b over Z_b: (i, j) = i*b + j, adjacent iff exactly one coordinate
/// agrees. Companions: "translations", "diagonalN", "fullB", "wreath".
FamilyInstance cartesian_square(std::size_t b);

struct ReductionGroups {
  PermGroup g;  // <g_{r,s,s'}, delta>
  PermGroup n;  // {n_x}
};

/// Edge-transitive G with normal diagonal N on K_b box K_b, coordinates in
/// GF(b) numbered by field index. DomainError unless b is a prime power.
ReductionGroups cartesian_reduction_groups(std::size_t b);

/// Paley graph on GF(q); companion "affineSquares" = {x -> s x + t, s square}.
/// DomainError unless q is a prime power with q = 1 mod 4.
FamilyInstance paley(std::uint64_t q);

/// Kneser graph on 2-subsets of {0..n-1} in colexicographic order;
/// companion "symmetric". DomainError for n < 5.
FamilyInstance kneser2(std::size_t n);

/**
 * A finite group given by its multiplication table: table[x][y] = x*y.
 * Construction checks closure, identity, inverses and associativity
 * (exhaustively up to order 256, on a fixed pseudo-random sample above).
 */
class GroupTable {
 public:
  explicit GroupTable(std::vector<std::vector<std::uint32_t>> table);

  std::size_t order() const noexcept { return table_.size(); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table_[x][y]; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inverse(std::uint32_t x) const { return inverse_[x]; }
  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }

  bool is_abelian() const;
  /// Nonabelian with no proper nontrivial normal subgroup.
  bool is_nonabelian_simple() const;

 private:
  std::vector<std::vector<std::uint32_t>> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
};

GroupTable cyclic_group_table(std::size_t n);

/// Multiplication table of a permutation group together with its elements
/// (sorted; element 0 is the identity).
struct PermutationGroupTable {
  GroupTable table;
  std::vector<Permutation> elements;
};

PermutationGroupTable permutation_group_table(const PermGroup& g, std::uint64_t cap = 10'000);

/// A_5 on {0..4}, as a 60-element table.
PermutationGroupTable alternating5();

/// Action of conjugation t -> c t c^-1 on the elements of `t`, one generator
/// per conjugator. The conjugators must normalise the group.
PermGroup conjugation_action(const PermutationGroupTable& t, std::span<const Permutation> conjugators);

/// Cay(T, S): t ~ t*s. Companions "leftRegular" and, when S is closed under
/// conjugation, "rightRegular". DomainError if S contains the identity or is
/// not inverse-closed.
FamilyInstance cayley_graph(const GroupTable& t, std::span<const std::uint32_t> connection_set);

enum class OrbitShape { one_orbit, two_orbit };

struct ConnectionCandidate {
  std::vector<std::uint32_t> set;  // ascending
  OrbitShape shape = OrbitShape::one_orbit;
};

/// Identity-free inverse-closed unions of H-orbits of the allowed shapes: a
/// single self-inverse orbit, or B u B^-1 for an orbit B disjoint from B^-1.
/// H must fix the identity and act by automorphisms (DomainError with a
/// witness triple otherwise).
std::vector<ConnectionCandidate> holomorph_orbit_sets(const GroupTable& t, const PermGroup& h);

/// <x -> x + step> on Z_n.
PermGroup cyclic_translations(std::size_t n, std::size_t step = 1);
/// <x -> x + 1, x -> -x> on Z_n.
PermGroup cyclic_dihedral(std::size_t n);
/// {x -> u x + c : u a unit} on Z_n.
PermGroup cyclic_affine(std::size_t n);
/// <x -> u x> on Z_n.
PermGroup cyclic_multiplier(std::size_t n, std::size_t u);

std::string_view to_string(OrbitShape shape);

}  // namespace nqr
