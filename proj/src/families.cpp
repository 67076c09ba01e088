#include "nqr/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nqr/errors.hpp"

namespace nqr {

namespace {

template <typename F>
Permutation perm_from(std::size_t n, F&& f) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(f(static_cast<Point>(x)));
  return Permutation(std::move(images));
}

void push_unique(std::vector<Permutation>& gens, Permutation p) {
  if (p.is_identity()) return;
  if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
}

// Images of (0 1) and (0 1 ... m-1) on m symbols.
std::vector<std::vector<Point>> symmetric_moves(std::size_t m) {
  std::vector<std::vector<Point>> moves;
  if (m < 2) return moves;
  std::vector<Point> swap(m);
  std::iota(swap.begin(), swap.end(), Point{0});
  std::swap(swap[0], swap[1]);
  std::vector<Point> cycle(m);
  for (std::size_t i = 0; i < m; ++i) cycle[i] = static_cast<Point>((i + 1) % m);
  moves.push_back(std::move(swap));
  if (m > 2) moves.push_back(std::move(cycle));
  return moves;
}

PermGroup group_of(std::size_t degree, std::vector<Permutation> gens) {
  if (gens.empty()) return PermGroup::trivial(degree);
  return PermGroup(degree, std::move(gens));
}

void verify_companions(const FamilyInstance& inst) {
  for (const auto& named : inst.companion_groups) {
    try {
      require_automorphisms(named.group, inst.graph);
    } catch (const DomainError& e) {
      throw TheoremViolation(inst.label + " companion '" + named.name + "': " + e.what());
    }
  }
}

// S_b on the first and second coordinates of b*b grid vertices.
std::vector<Permutation> grid_symmetric(std::size_t b, bool rows, bool cols) {
  std::vector<Permutation> gens;
  for (const auto& mv : symmetric_moves(b)) {
    if (rows) push_unique(gens, perm_from(b * b, [&](Point v) { return mv[v / b] * b + v % b; }));
    if (cols) push_unique(gens, perm_from(b * b, [&](Point v) { return (v / b) * b + mv[v % b]; }));
  }
  return gens;
}

Permutation grid_swap(std::size_t b) {
  return perm_from(b * b, [&](Point v) { return (v % b) * b + v / b; });
}

std::vector<VertexLabel> pair_labels(std::size_t rows, std::size_t cols) {
  std::vector<VertexLabel> labels;
  for (std::uint32_t i = 0; i < rows; ++i)
    for (std::uint32_t j = 0; j < cols; ++j) labels.emplace_back(PairLabel{i, j});
  return labels;
}

}  // namespace

const PermGroup& FamilyInstance::group(std::string_view name) const {
  for (const auto& g : companion_groups)
    if (g.name == name) return g.group;
  throw DomainError(label + " has no companion group named '" + std::string(name) + "'");
}

FamilyInstance complete(std::size_t n) {
  if (n < 1) throw DomainError("complete graph needs at least one vertex");
  FamilyInstance inst;
  inst.graph = Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
  inst.label = "K(" + std::to_string(n) + ")";
  for (std::uint32_t v = 0; v < n; ++v) inst.vertex_labels.emplace_back(IndexLabel{v});
  std::vector<Permutation> gens;
  for (const auto& mv : symmetric_moves(n)) push_unique(gens, Permutation(mv));
  inst.companion_groups.push_back({"symmetric", group_of(n, std::move(gens))});
  verify_companions(inst);
  return inst;
}

FamilyInstance complete_multipartite(std::size_t parts, std::size_t size) {
  if (parts < 2 || size < 1)
    throw DomainError("complete multipartite graph needs parts >= 2 and size >= 1");
  const std::size_t n = parts * size;
  FamilyInstance inst;
  inst.graph = Graph::from_predicate(n, [&](Vertex u, Vertex v) { return u / size != v / size; });
  inst.label = "K_{" + std::to_string(parts) + "[" + std::to_string(size) + "]}";
  inst.vertex_labels = pair_labels(parts, size);

  std::vector<Permutation> base;
  std::vector<Permutation> wreath;
  for (const auto& mv : symmetric_moves(size)) {
    for (std::size_t part = 0; part < parts; ++part) {
      Permutation p = perm_from(n, [&](Point v) {
        return v / size == part ? part * size + mv[v % size] : v;
      });
      if (part == 0) push_unique(wreath, p);
      push_unique(base, std::move(p));
    }
  }
  for (const auto& mv : symmetric_moves(parts))
    push_unique(wreath, perm_from(n, [&](Point v) { return mv[v / size] * size + v % size; }));

  inst.companion_groups.push_back({"wreath", group_of(n, std::move(wreath))});
  inst.companion_groups.push_back({"base", group_of(n, std::move(base))});
  verify_companions(inst);
  return inst;
}

FamilyInstance multipartite_minus(std::size_t b) {
  if (b < 2) throw DomainError("multipartite_minus needs b >= 2");
  FamilyInstance inst;
  inst.graph = Graph::from_predicate(b * b, [&](Vertex u, Vertex v) {
    return u / b != v / b && u % b != v % b;
  });
  inst.label = "MultipartiteMinus(" + std::to_string(b) + ")";
  inst.vertex_labels = pair_labels(b, b);
  auto full = grid_symmetric(b, true, true);
  auto wreath = full;
  push_unique(wreath, grid_swap(b));
  inst.companion_groups.push_back({"fullB", group_of(b * b, std::move(full))});
  inst.companion_groups.push_back({"partN", group_of(b * b, grid_symmetric(b, false, true))});
  inst.companion_groups.push_back({"wreath", group_of(b * b, std::move(wreath))});
  verify_companions(inst);
  return inst;
}

FamilyInstance cartesian_square(std::size_t b) {
  if (b < 2) throw DomainError("cartesian_square needs b >= 2");
  const std::size_t n = b * b;
  FamilyInstance inst;
  inst.graph = Graph::from_predicate(n, [&](Vertex u, Vertex v) {
    return (u / b == v / b) != (u % b == v % b);
  });
  inst.label = "KbBoxKb(" + std::to_string(b) + ")";
  inst.vertex_labels = pair_labels(b, b);

  auto shift = [&](std::size_t di, std::size_t dj) {
    return perm_from(n, [&](Point v) { return ((v / b + di) % b) * b + (v % b + dj) % b; });
  };
  auto full = grid_symmetric(b, true, true);
  auto wreath = full;
  push_unique(wreath, grid_swap(b));
  inst.companion_groups.push_back({"translations", PermGroup(n, {shift(1, 0), shift(0, 1)})});
  inst.companion_groups.push_back({"diagonalN", PermGroup(n, {shift(1, 1)})});
  inst.companion_groups.push_back({"fullB", group_of(n, std::move(full))});
  inst.companion_groups.push_back({"wreath", group_of(n, std::move(wreath))});
  verify_companions(inst);
  return inst;
}

ReductionGroups cartesian_reduction_groups(std::size_t b) {
  const auto pp = prime_power(b);
  if (!pp) throw DomainError(std::to_string(b) + " is not a prime power");
  const FiniteField f = make_field(pp->p, pp->a);
  const std::size_t n = b * b;

  // Affine map (i, j) -> (r i + s, r j + s') on field indices.
  auto affine = [&](const FieldElem& r, const FieldElem& s, const FieldElem& s2) {
    return perm_from(n, [&](Point v) {
      const FieldElem i = f.element(v / b);
      const FieldElem j = f.element(v % b);
      return f.index(f.add(f.mul(r, i), s)) * b + f.index(f.add(f.mul(r, j), s2));
    });
  };
  const FieldElem zero = f.zero();
  const FieldElem one = f.one();

  std::vector<Permutation> g_gens;
  push_unique(g_gens, affine(one, one, one));
  push_unique(g_gens, affine(f.primitive_element(), zero, zero));
  push_unique(g_gens, affine(one, one, zero));
  push_unique(g_gens, affine(one, zero, one));
  push_unique(g_gens, grid_swap(b));

  // n_x for x running over the additive basis 1, x, x^2, ...
  std::vector<Permutation> n_gens;
  std::uint64_t basis = 1;
  for (std::uint32_t k = 0; k < pp->a; ++k, basis *= pp->p) {
    const FieldElem x = f.element(basis);
    push_unique(n_gens, affine(one, x, x));
  }
  return {PermGroup(n, std::move(g_gens)), PermGroup(n, std::move(n_gens))};
}

FamilyInstance paley(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp || q % 4 != 1)
    throw DomainError("Paley graph needs a prime power q = 1 mod 4, got " + std::to_string(q));
  const FiniteField f = make_field(pp->p, pp->a);
  std::vector<bool> square(q, false);
  for (const auto& s : nonzero_squares(f)) square[f.index(s)] = true;

  FamilyInstance inst;
  inst.graph = Graph::from_predicate(q, [&](Vertex u, Vertex v) {
    return square[f.index(f.sub(f.element(u), f.element(v)))];
  });
  inst.label = "Paley(" + std::to_string(q) + ")";
  for (std::uint64_t i = 0; i < q; ++i) inst.vertex_labels.emplace_back(FieldLabel{f.element(i)});

  std::vector<Permutation> gens;
  std::uint64_t basis = 1;
  for (std::uint32_t k = 0; k < pp->a; ++k, basis *= pp->p) {
    const FieldElem t = f.element(basis);
    push_unique(gens, perm_from(q, [&](Point v) { return f.index(f.add(f.element(v), t)); }));
  }
  const FieldElem w = f.primitive_element();
  const FieldElem w2 = f.mul(w, w);
  push_unique(gens, perm_from(q, [&](Point v) { return f.index(f.mul(w2, f.element(v))); }));
  inst.companion_groups.push_back({"affineSquares", PermGroup(q, std::move(gens))});
  verify_companions(inst);
  return inst;
}

FamilyInstance kneser2(std::size_t n) {
  if (n < 5) throw DomainError("kneser2 needs n >= 5, got " + std::to_string(n));
  std::vector<SubsetLabel> subsets;
  for (std::uint32_t hi = 1; hi < n; ++hi)
    for (std::uint32_t lo = 0; lo < hi; ++lo) subsets.push_back({lo, hi});
  auto index_of = [](Point a, Point b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
  };

  FamilyInstance inst;
  const std::size_t m = subsets.size();
  inst.graph = Graph::from_predicate(m, [&](Vertex u, Vertex v) {
    const auto& x = subsets[u];
    const auto& y = subsets[v];
    return x.lo != y.lo && x.lo != y.hi && x.hi != y.lo && x.hi != y.hi;
  });
  inst.label = "Kneser2(" + std::to_string(n) + ")";
  for (const auto& s : subsets) inst.vertex_labels.emplace_back(s);

  std::vector<Permutation> gens;
  for (const auto& mv : symmetric_moves(n))
    push_unique(gens, perm_from(m, [&](Point v) {
                  return index_of(mv[subsets[v].lo], mv[subsets[v].hi]);
                }));
  inst.companion_groups.push_back({"symmetric", PermGroup(m, std::move(gens))});
  verify_companions(inst);
  return inst;
}

GroupTable::GroupTable(std::vector<std::vector<std::uint32_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw DomainError("group table is not square");
    for (auto x : row)
      if (x >= n) throw DomainError("group table entry " + std::to_string(x) + " out of range");
  }

  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw DomainError("not a group: no identity element");

  inverse_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    bool has = false;
    for (std::uint32_t y = 0; y < n && !has; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = y;
        has = true;
      }
    }
    if (!has) throw DomainError("not a group: element " + std::to_string(x) + " has no inverse");
  }

  auto check_triple = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    if (table_[table_[x][y]][z] != table_[x][table_[y][z]])
      throw DomainError("not a group: associativity fails for (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
  };
  if (n <= 256) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) check_triple(x, y, z);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (int i = 0; i < 200'000; ++i) check_triple(pick(rng), pick(rng), pick(rng));
  }
}

bool GroupTable::is_abelian() const {
  for (std::size_t x = 0; x < order(); ++x)
    for (std::size_t y = x + 1; y < order(); ++y)
      if (table_[x][y] != table_[y][x]) return false;
  return true;
}

bool GroupTable::is_nonabelian_simple() const {
  if (order() < 2 || is_abelian()) return false;
  const std::size_t n = order();
  for (std::uint32_t x = 0; x < n; ++x) {
    if (x == identity_) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t g = 0; g < n; ++g) cls.insert(mul(mul(g, x), inverse(g)));
    // Subgroup generated by the class of x is its normal closure.
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> members{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto c : cls) {
        const std::uint32_t y = mul(members[i], c);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    if (members.size() != n) return false;
  }
  return true;
}

GroupTable cyclic_group_table(std::size_t n) {
  if (n < 1) throw DomainError("cyclic group needs n >= 1");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = static_cast<std::uint32_t>((x + y) % n);
  return GroupTable(std::move(t));
}

PermutationGroupTable permutation_group_table(const PermGroup& g, std::uint64_t cap) {
  auto elements = enumerate_elements(g, cap);
  std::map<Permutation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::vector<std::uint32_t>> t(elements.size(), std::vector<std::uint32_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) t[i][j] = index.at(elements[i] * elements[j]);
  return {GroupTable(std::move(t)), std::move(elements)};
}

PermutationGroupTable alternating5() {
  return permutation_group_table(
      PermGroup(5, {Permutation::from_cycles(5, "(0 1 2)"), Permutation::from_cycles(5, "(0 1 2 3 4)")}));
}

PermGroup conjugation_action(const PermutationGroupTable& t, std::span<const Permutation> conjugators) {
  std::map<Permutation, std::uint32_t> index;
  for (std::uint32_t i = 0; i < t.elements.size(); ++i) index.emplace(t.elements[i], i);
  std::vector<Permutation> gens;
  for (const auto& c : conjugators) {
    gens.push_back(perm_from(t.elements.size(), [&](Point i) {
      const auto it = index.find(conjugate(t.elements[i], c));
      if (it == index.end())
        throw DomainError("conjugator " + c.to_cycles() + " does not normalise the group");
      return it->second;
    }));
  }
  return group_of(t.elements.size(), std::move(gens));
}

FamilyInstance cayley_graph(const GroupTable& t, std::span<const std::uint32_t> connection_set) {
  const std::size_t n = t.order();
  std::vector<bool> in_s(n, false);
  for (auto s : connection_set) {
    if (s >= n) throw DomainError("connection set element " + std::to_string(s) + " out of range");
    if (s == t.identity()) throw DomainError("connection set contains the identity");
    in_s[s] = true;
  }
  for (std::uint32_t s = 0; s < n; ++s)
    if (in_s[s] && !in_s[t.inverse(s)])
      throw DomainError("connection set is not inverse-closed: " + std::to_string(s) +
                        " present, inverse " + std::to_string(t.inverse(s)) + " missing");

  FamilyInstance inst;
  inst.graph = Graph::from_predicate(n, [&](Vertex u, Vertex v) {
    return in_s[t.mul(t.inverse(u), v)];
  });
  inst.label = "Cayley(" + std::to_string(n) + "," + std::to_string(std::count(in_s.begin(), in_s.end(), true)) + ")";
  for (std::uint32_t v = 0; v < n; ++v) inst.vertex_labels.emplace_back(IndexLabel{v});

  // Greedy generating set of T in index order.
  std::vector<std::uint32_t> gens;
  std::vector<bool> reached(n, false);
  reached[t.identity()] = true;
  std::size_t reached_count = 1;
  for (std::uint32_t g = 0; g < n && reached_count < n; ++g) {
    if (reached[g]) continue;
    gens.push_back(g);
    std::vector<std::uint32_t> members;
    for (std::uint32_t x = 0; x < n; ++x)
      if (reached[x]) members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto h : gens) {
        const std::uint32_t y = t.mul(members[i], h);
        if (!reached[y]) {
          reached[y] = true;
          ++reached_count;
          members.push_back(y);
        }
      }
    }
  }

  std::vector<Permutation> left;
  std::vector<Permutation> right;
  for (auto g : gens) {
    left.push_back(perm_from(n, [&](Point x) { return t.mul(g, x); }));
    right.push_back(perm_from(n, [&](Point x) { return t.mul(x, t.inverse(g)); }));
  }
  inst.companion_groups.push_back({"leftRegular", group_of(n, std::move(left))});
  PermGroup right_group = group_of(n, std::move(right));
  bool right_ok = true;
  for (const auto& r : right_group.generators())
    if (automorphism_violation(inst.graph, r)) right_ok = false;
  if (right_ok) inst.companion_groups.push_back({"rightRegular", std::move(right_group)});
  verify_companions(inst);
  return inst;
}

std::vector<ConnectionCandidate> holomorph_orbit_sets(const GroupTable& t, const PermGroup& h) {
  const std::size_t n = t.order();
  if (h.degree() != n)
    throw DomainError("H has degree " + std::to_string(h.degree()) + " but T has order " +
                      std::to_string(n));
  for (std::size_t gi = 0; gi < h.generators().size(); ++gi) {
    const Permutation& g = h.generators()[gi];
    if (g(t.identity()) != t.identity())
      throw DomainError("generator " + std::to_string(gi) + " of H moves the identity");
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        if (g(t.mul(x, y)) != t.mul(g(x), g(y)))
          throw DomainError("generator " + std::to_string(gi) + " of H is not an automorphism: h(" +
                            std::to_string(x) + "*" + std::to_string(y) + ") != h(" +
                            std::to_string(x) + ")*h(" + std::to_string(y) + ")");
  }

  std::vector<ConnectionCandidate> out;
  for (const auto& b : orbit_partition(h)) {
    if (b.size() == 1 && b.front() == t.identity()) continue;
    std::vector<std::uint32_t> inv;
    for (auto x : b) inv.push_back(t.inverse(x));
    std::sort(inv.begin(), inv.end());
    if (inv == b) {
      out.push_back({b, OrbitShape::one_orbit});
    } else if (b.front() < inv.front()) {
      std::vector<std::uint32_t> both = b;
      both.insert(both.end(), inv.begin(), inv.end());
      std::sort(both.begin(), both.end());
      out.push_back({std::move(both), OrbitShape::two_orbit});
    }
  }
  return out;
}

PermGroup cyclic_translations(std::size_t n, std::size_t step) {
  return PermGroup(n, {perm_from(n, [&](Point x) { return (x + step) % n; })});
}

PermGroup cyclic_dihedral(std::size_t n) {
  return PermGroup(n, {perm_from(n, [&](Point x) { return (x + 1) % n; }),
                       perm_from(n, [&](Point x) { return (n - x) % n; })});
}

PermGroup cyclic_multiplier(std::size_t n, std::size_t u) {
  if (std::gcd(n, u) != 1)
    throw DomainError(std::to_string(u) + " is not a unit modulo " + std::to_string(n));
  return PermGroup(n, {perm_from(n, [&](Point x) { return (u * x) % n; })});
}

PermGroup cyclic_affine(std::size_t n) {
  std::vector<Permutation> gens{perm_from(n, [&](Point x) { return (x + 1) % n; })};
  for (std::size_t u = 2; u < n; ++u)
    if (std::gcd(n, u) == 1) push_unique(gens, perm_from(n, [&](Point x) { return (u * x) % n; }));
  return PermGroup(n, std::move(gens));
}

std::string_view to_string(OrbitShape shape) {
  return shape == OrbitShape::one_orbit ? "one-orbit" : "two-orbit";
}

}  // namespace nqr
