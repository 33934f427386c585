#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "chordenum/graph.hpp"

namespace chordenum {

// Subset of a graph's non-edge universe, indexed by Graph::non_edge_index.
// Bit order is the ground-set order, so iterating set bits visits edges in
// lexicographic order.
using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

// A set of fill edges F, a subset of E^c(base), identified with the
// supergraph G_F = (V, E + F).
//
// A Completion refers to its base graph without owning it; the graph must
// outlive every completion built on it. Two completions compare equal iff
// they share a base and have the same fill set.
class Completion {
 public:
  Completion(const Graph& base, EdgeSet fill);

  // Throws InputError if some pair is an edge of `base` or out of range.
  static Completion from_edges(const Graph& base, std::span<const EdgePair> fill);
  static Completion empty(const Graph& base);
  // All of E^c: the clique completion.
  static Completion full(const Graph& base);

  Completion(Graph&&, EdgeSet) = delete;
  static Completion from_edges(Graph&&, std::span<const EdgePair>) = delete;
  static Completion empty(Graph&&) = delete;
  static Completion full(Graph&&) = delete;

  const Graph& base() const { return *base_; }
  const EdgeSet& fill() const { return fill_; }
  std::size_t size() const { return fill_.count(); }
  bool empty() const { return fill_.none(); }
  bool contains(EdgePair e) const;

  // Fill edges in ground-set order.
  std::vector<EdgePair> edges() const;
  // E^c minus the fill.
  EdgeSet complement() const;
  // G_F as a standalone graph.
  Graph to_graph() const;
  bool is_chordal() const;

  friend bool operator==(const Completion& a, const Completion& b) {
    return a.base_ == b.base_ && a.fill_ == b.fill_;
  }

 private:
  const Graph* base_;
  EdgeSet fill_;
};

// "u-v,u-v,..." or "-" when empty.
std::ostream& operator<<(std::ostream& os, const Completion& f);

// Can(F-bar): the order in which Del(E^c, F-bar) removes the complement of a
// minimal completion.
struct CanonicalOrdering {
  std::vector<EdgePair> sequence;

  std::size_t size() const { return sequence.size(); }
  const EdgePair& operator[](std::size_t i) const { return sequence[i]; }
  auto begin() const { return sequence.begin(); }
  auto end() const { return sequence.end(); }

  friend bool operator==(const CanonicalOrdering&, const CanonicalOrdering&) = default;
  friend auto operator<=>(const CanonicalOrdering& a, const CanonicalOrdering& b) {
    return a.sequence <=> b.sequence;
  }
};

// How a fill edge is judged removable from a chordal completion.
//
// kCommonNeighbourhoodClique: e = xy may go iff N(x) & N(y) is a clique of
// G_F, i.e. e is not the only chord of some 4-cycle. kFullRetest removes e and
// reruns the chordality test. Both answer the same question on chordal input;
// the property tests hold them equal.
enum class RemovalTest { kCommonNeighbourhoodClique, kFullRetest };

// Fill edges of `f` lying in `x` whose removal keeps G_F chordal, ascending.
// Throws PreconditionError if `f` is not chordal.
std::vector<EdgePair> candidates(const Completion& f, const EdgeSet& x,
                                 RemovalTest test = RemovalTest::kCommonNeighbourhoodClique);

// Repeatedly removes the smallest candidate of (f, x) until none is left.
// del(f) is del(f, f.fill()) and is always an inclusion-minimal completion.
Completion del(const Completion& f, const EdgeSet& x,
               RemovalTest test = RemovalTest::kCommonNeighbourhoodClique);
Completion del(const Completion& f, RemovalTest test = RemovalTest::kCommonNeighbourhoodClique);

// Removal order of F-bar when running Del(E^c, F-bar). Throws
// PreconditionError if `f` is not a minimal completion.
CanonicalOrdering canonical_ordering(const Completion& f);

// Largest i such that the first i elements of ord2 avoid f1's fill.
std::size_t proximity(const Completion& f1, const CanonicalOrdering& ord2);

// Removes fill edge e = xy and turns the common neighbourhood of x and y in
// G_F into a clique. Throws InputError if e is not in the fill and
// PreconditionError if `f` is not chordal.
Completion flip(const Completion& f, EdgePair e);

// Del(Flip(f, e)). Never equal to f, since e is gone.
Completion succ(const Completion& f, EdgePair e);

// {succ(f, e) : e in fill(f)}, deduplicated, in order of first production
// when scanning the fill in ground-set order.
std::vector<Completion> neighbours(const Completion& f);

// Rose-Tarjan: every fill edge is the unique chord of some 4-cycle.
// Throws PreconditionError if `f` is not chordal.
bool is_minimal(const Completion& f);

namespace unchecked {

// The same operations without validating chordality or minimality of their
// arguments. The enumeration engine calls these on values it produced itself.
// `edge` is a position in base().non_edges() whose bit is set in the fill.
CanonicalOrdering canonical_ordering(const Completion& f);
Completion flip(const Completion& f, std::size_t edge);
Completion succ(const Completion& f, std::size_t edge);
Completion del(const Completion& f, const EdgeSet& x, RemovalTest test = RemovalTest::kCommonNeighbourhoodClique);

}  // namespace unchecked

}  // namespace chordenum

template <>
struct std::hash<chordenum::Completion> {
  std::size_t operator()(const chordenum::Completion& f) const noexcept {
    return std::hash<chordenum::EdgeSet>{}(f.fill());
  }
};
