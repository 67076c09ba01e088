#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "nqr/graph.hpp"
#include "nqr/permutation.hpp"
#include "nqr/rational.hpp"
#include "nqr/stabilizer_chain.hpp"

namespace nqr {

/// Default cap on |G| for element enumeration and class-based algorithms.
inline constexpr std::uint64_t kDefaultGroupCap = 2'000'000;

/**
 * A permutation group given by its degree and a generator list.
 *
 * The stabilizer chain is derived on first use behind a once-guard and is
 * shared between copies; the generator list itself never changes.
 */
class PermGroup {
 public:
  /// Throws DomainError if a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool is_trivial() const;

  const StabilizerChain& chain() const;

 private:
  struct ChainCell;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCell> cell_;
};

/// Smallest generator-closed set containing `point`, ascending.
std::vector<Point> orbit(const PermGroup& g, Point point);

/// All orbits, each ascending, ordered by least element.
std::vector<std::vector<Point>> orbit_partition(const PermGroup& g);

bool is_transitive(const PermGroup& g);

enum class OrderMethod { chain, enumeration };

/// Exact order. The enumeration path throws ResourceError once more than
/// `cap` elements have been produced.
BigInt group_order(const PermGroup& g, OrderMethod method = OrderMethod::chain,
                   std::uint64_t cap = kDefaultGroupCap);

/// All elements by breadth-first closure, sorted. ResourceError above `cap`.
std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap = kDefaultGroupCap);

bool contains(const PermGroup& g, const Permutation& p);

/// Membership by full enumeration; the cross-check oracle for `contains`.
bool contains_by_enumeration(const PermGroup& g, const Permutation& p,
                             std::uint64_t cap = kDefaultGroupCap);

/// Throws DomainError on degree mismatch or if N is not a subgroup of G.
bool is_normal_in(const PermGroup& n, const PermGroup& g);

/// Smallest subgroup containing p and normalised by G.
PermGroup normal_closure(const PermGroup& g, const Permutation& p);

/// First edge {u, v} (as listed by Graph::edges) that p does not map to an
/// edge; empty when p is an automorphism.
std::optional<Edge> automorphism_violation(const Graph& gamma, const Permutation& p);

/// Throws DomainError naming the generator and pair if some generator of G is
/// not an automorphism of gamma.
void require_automorphisms(const PermGroup& g, const Graph& gamma);

bool is_edge_transitive(const PermGroup& g, const Graph& gamma);

/// One conjugacy class of prime-order elements, represented by its
/// lexicographically least member.
struct PrimeClass {
  Permutation least;
  std::uint32_t prime = 0;
  std::uint64_t size = 0;
};

/// Classes of prime-order elements ordered by least member. ResourceError
/// when |G| > cap.
std::vector<PrimeClass> prime_order_classes(const PermGroup& g, std::uint64_t cap = kDefaultGroupCap);

bool is_quasiprimitive(const PermGroup& g, std::uint64_t cap = kDefaultGroupCap);

/// Normal closure of the least prime-order element whose closure is
/// intransitive, or empty if no such element exists.
std::optional<PermGroup> find_intransitive_normal(const PermGroup& g,
                                                  std::uint64_t cap = kDefaultGroupCap);

}  // namespace nqr
