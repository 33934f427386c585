#include "chordenum/graph.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "chordenum/errors.hpp"

namespace chordenum {

std::ostream& operator<<(std::ostream& os, const EdgePair& e) { return os << e.u << '-' << e.v; }

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.bits_.assign(n * g.words_, 0);
  g.neighbours_.resize(n);

  for (const auto& [a, b] : edge_list) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      std::ostringstream msg;
      msg << "edge (" << a << "," << b << ") has an endpoint outside [0, " << n << ")";
      throw InputError(msg.str());
    }
    if (a == b) {
      std::ostringstream msg;
      msg << "self-loop (" << a << "," << b << ") is not allowed in a simple graph";
      throw InputError(msg.str());
    }
    g.edges_.push_back(EdgePair::normalized(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  for (const EdgePair& e : g.edges_) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    g.bits_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.bits_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    g.neighbours_[u].push_back(e.v);
    g.neighbours_[v].push_back(e.u);
  }
  for (auto& nb : g.neighbours_) std::sort(nb.begin(), nb.end());

  g.non_edge_slot_.assign(n * n, kNotANonEdge);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) continue;
      const auto slot = static_cast<std::int32_t>(g.non_edges_.size());
      g.non_edge_slot_[u * n + v] = slot;
      g.non_edge_slot_[v * n + u] = slot;
      g.non_edges_.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return g;
}

std::optional<std::size_t> Graph::non_edge_index(EdgePair e) const {
  if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ || static_cast<std::size_t>(e.v) >= n_) {
    return std::nullopt;
  }
  const std::int32_t slot = non_edge_slot_[static_cast<std::size_t>(e.u) * n_ + static_cast<std::size_t>(e.v)];
  if (slot == kNotANonEdge) return std::nullopt;
  return static_cast<std::size_t>(slot);
}

std::vector<Vertex> maximum_cardinality_search(const AdjacencyView& adj) {
  const std::size_t n = adj.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  if (n == 0) return order;

  // Lazy buckets: a vertex is pushed again whenever its weight grows, stale
  // entries are skipped on pop.
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<std::vector<Vertex>> buckets(n);
  for (std::size_t v = n; v-- > 0;) buckets[0].push_back(static_cast<Vertex>(v));
  std::size_t top = 0;

  for (std::size_t i = 0; i < n; ++i) {
    Vertex picked = -1;
    while (picked < 0) {
      while (buckets[top].empty()) --top;
      const Vertex v = buckets[top].back();
      buckets[top].pop_back();
      if (!numbered[static_cast<std::size_t>(v)] && weight[static_cast<std::size_t>(v)] == top) picked = v;
    }
    numbered[static_cast<std::size_t>(picked)] = 1;
    order.push_back(picked);
    adj.for_each_neighbour(picked, [&](Vertex w) {
      const auto wi = static_cast<std::size_t>(w);
      if (numbered[wi]) return;
      const std::size_t nw = ++weight[wi];
      buckets[nw].push_back(w);
      top = std::max(top, nw);
    });
  }
  return order;
}

namespace {

struct EliminationFailure {
  Vertex v;  // the vertex whose earlier-visited neighbourhood is not a clique
  Vertex w;
  Vertex f;  // w and f are non-adjacent neighbours of v
};

std::optional<EliminationFailure> check_elimination(const AdjacencyView& adj) {
  const std::size_t n = adj.vertex_count();
  const std::vector<Vertex> order = maximum_cardinality_search(adj);
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;

  std::vector<Vertex> earlier;
  for (const Vertex v : order) {
    earlier.clear();
    Vertex follower = -1;
    adj.for_each_neighbour(v, [&](Vertex w) {
      if (pos[static_cast<std::size_t>(w)] >= pos[static_cast<std::size_t>(v)]) return;
      earlier.push_back(w);
      if (follower < 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(follower)]) follower = w;
    });
    for (const Vertex w : earlier) {
      if (w != follower && !adj.adjacent(w, follower)) return EliminationFailure{v, w, follower};
    }
  }
  return std::nullopt;
}

// Shortest w-f path avoiding v and every other neighbour of v. Closed with v
// it is an induced cycle of length >= 4.
std::optional<std::vector<Vertex>> cycle_through(const AdjacencyView& adj, Vertex v, Vertex w, Vertex f) {
  const std::size_t n = adj.vertex_count();
  std::vector<Vertex> prev(n, -2);
  std::vector<char> blocked(n, 0);
  blocked[static_cast<std::size_t>(v)] = 1;
  adj.for_each_neighbour(v, [&](Vertex x) {
    if (x != w && x != f) blocked[static_cast<std::size_t>(x)] = 1;
  });

  std::vector<Vertex> queue{w};
  prev[static_cast<std::size_t>(w)] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (x == f) break;
    adj.for_each_neighbour(x, [&](Vertex y) {
      const auto yi = static_cast<std::size_t>(y);
      if (blocked[yi] || prev[yi] != -2) return;
      prev[yi] = x;
      queue.push_back(y);
    });
  }
  if (prev[static_cast<std::size_t>(f)] == -2) return std::nullopt;

  std::vector<Vertex> path;
  for (Vertex x = f; x != -1; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());  // w ... f
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

bool chordless(const AdjacencyView& adj, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Vertex x : cycle) {
    if (x < 0 || static_cast<std::size_t>(x) >= adj.vertex_count()) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (adj.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace

bool is_chordal(const AdjacencyView& adj) { return !check_elimination(adj).has_value(); }

bool is_chordal(const Graph& g) { return is_chordal(g.adjacency()); }

std::optional<std::vector<Vertex>> find_chordless_cycle(const AdjacencyView& adj) {
  const auto failure = check_elimination(adj);
  if (!failure) return std::nullopt;
  if (auto cycle = cycle_through(adj, failure->v, failure->w, failure->f); cycle && chordless(adj, *cycle)) {
    return cycle;
  }
  // Every induced cycle passes through some vertex v and two non-adjacent
  // neighbours of v, so scanning all such triples cannot miss.
  const std::size_t n = adj.vertex_count();
  std::vector<Vertex> nb;
  for (std::size_t v = 0; v < n; ++v) {
    nb.clear();
    adj.for_each_neighbour(static_cast<Vertex>(v), [&](Vertex x) { nb.push_back(x); });
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adj.adjacent(nb[i], nb[j])) continue;
        if (auto cycle = cycle_through(adj, static_cast<Vertex>(v), nb[i], nb[j]); cycle && chordless(adj, *cycle)) {
          return cycle;
        }
      }
    }
  }
  throw InvariantError("elimination check failed but no chordless cycle was found");
}

std::optional<std::vector<Vertex>> find_chordless_cycle(const Graph& g) { return find_chordless_cycle(g.adjacency()); }

bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) { return chordless(g.adjacency(), cycle); }

std::vector<Vertex> common_neighborhood(const Graph& g, Vertex x, Vertex y) {
  if (x == y) {
    std::ostringstream msg;
    msg << "common neighbourhood needs two distinct vertices, got " << x << " twice";
    throw InputError(msg.str());
  }
  const auto n = g.vertex_count();
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= n || static_cast<std::size_t>(y) >= n) {
    throw InputError("common neighbourhood query outside the vertex range");
  }
  std::vector<Vertex> out;
  std::set_intersection(g.neighbours(x).begin(), g.neighbours(x).end(), g.neighbours(y).begin(),
                        g.neighbours(y).end(), std::back_inserter(out));
  return out;
}

}  // namespace chordenum
