#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chordenum {

using Vertex = int;

// Unordered vertex pair stored with u < v. The defaulted comparison is the
// lexicographic order on (u, v); it is the ground-set order everywhere.
struct EdgePair {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr EdgePair normalized(Vertex a, Vertex b) {
    return a < b ? EdgePair{a, b} : EdgePair{b, a};
  }

  friend constexpr auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

// Prints "u-v".
std::ostream& operator<<(std::ostream& os, const EdgePair& e);

// Read-only view of a symmetric adjacency matrix stored as packed bit rows.
// Both Graph and the internal mutable supergraphs expose one, so the
// chordality routines are written once against this view.
class AdjacencyView {
 public:
  AdjacencyView(std::size_t n, std::size_t words_per_row, const std::uint64_t* data)
      : n_(n), words_(words_per_row), data_(data) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {data_ + static_cast<std::size_t>(v) * words_, words_};
  }

  bool adjacent(Vertex u, Vertex v) const {
    return (data_[static_cast<std::size_t>(u) * words_ + (static_cast<std::size_t>(v) >> 6)] >>
            (static_cast<std::size_t>(v) & 63)) & 1u;
  }

  template <class Fn>
  void for_each_neighbour(Vertex v, Fn&& fn) const {
    const std::uint64_t* r = data_ + static_cast<std::size_t>(v) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        fn(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_;
  std::size_t words_;
  const std::uint64_t* data_;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// Besides adjacency, a Graph precomputes its non-edge universe in
// lexicographic order together with a pair -> position lookup, since every
// completion is a subset of that universe.
class Graph {
 public:
  Graph() = default;

  // Normalizes and deduplicates `edge_list`. Throws InputError on an endpoint
  // outside [0, n) or on a self-loop, naming the offending pair.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const { return adjacency().adjacent(u, v); }
  std::span<const Vertex> neighbours(Vertex v) const { return neighbours_[static_cast<std::size_t>(v)]; }

  // Sorted lexicographically.
  const std::vector<EdgePair>& edges() const { return edges_; }
  const std::vector<EdgePair>& non_edges() const { return non_edges_; }

  // Position of `e` in non_edges(), or nullopt when e is an edge of the graph
  // or not a valid pair.
  std::optional<std::size_t> non_edge_index(EdgePair e) const;

  AdjacencyView adjacency() const { return {n_, words_, bits_.data()}; }
  std::span<const std::uint64_t> packed_adjacency() const { return bits_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  static constexpr std::int32_t kNotANonEdge = -1;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::vector<EdgePair> edges_;
  std::vector<EdgePair> non_edges_;
  std::vector<std::int32_t> non_edge_slot_;  // n*n, row-major
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  return Graph::build(n, edge_list);
}

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return Graph::build(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

// The ordered non-edge universe E^c.
inline const std::vector<EdgePair>& non_edges(const Graph& g) { return g.non_edges(); }

// Maximum cardinality search followed by a perfect elimination check.
bool is_chordal(const Graph& g);
bool is_chordal(const AdjacencyView& adj);

// Some induced cycle of length >= 4, listed in cycle order, or nullopt iff
// the graph is chordal.
std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g);
std::optional<std::vector<Vertex>> find_chordless_cycle(const AdjacencyView& adj);

// True iff `cycle` is a simple cycle of length >= 4 in `g` without chords.
bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle);

// Vertices adjacent to both x and y, ascending. Throws InputError if x == y.
std::vector<Vertex> common_neighborhood(const Graph& g, Vertex x, Vertex y);

// Visit order of a maximum cardinality search (deterministic tie-breaking).
// Its reverse is a perfect elimination ordering iff the graph is chordal.
std::vector<Vertex> maximum_cardinality_search(const AdjacencyView& adj);

}  // namespace chordenum
