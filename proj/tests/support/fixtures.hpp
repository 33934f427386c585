#pragma once

// Graph generators and a toy set system shared by the unit, property and
// acceptance suites.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chordenum/completion.hpp"
#include "chordenum/engine.hpp"
#include "chordenum/graph.hpp"

namespace chordenum::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph cycle(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(static_cast<std::size_t>(n), edges);
}

inline Graph complete(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

inline Graph path(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(static_cast<std::size_t>(n), edges);
}

// Vertex-disjoint union.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
  EdgeList edges;
  int offset = 0;
  for (const Graph& g : parts) {
    for (const EdgePair& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += static_cast<int>(g.vertex_count());
  }
  return Graph::build(static_cast<std::size_t>(offset), edges);
}

// The graph on n vertices whose i-th pair (lexicographic) is present iff bit i
// of `mask` is set.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  EdgeList edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

inline int pair_count(int n) { return n * (n - 1) / 2; }

inline bool connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex w : g.neighbours(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// Every labelled graph on n vertices, n <= 7.
inline std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back(graph_from_mask(n, mask));
  return out;
}

// One representative per isomorphism class of connected graphs on n
// vertices, chosen as the lexicographically smallest adjacency mask.
inline std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
  const int pairs = pair_count(n);
  std::vector<std::vector<int>> pair_id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  {
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        pair_id[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = bit;
        pair_id[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = bit;
      }
    }
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool canonical = true;
    for (const auto& perm : perms) {
      std::uint64_t image = 0;
      int bit = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
          if ((mask >> bit) & 1u) {
            image |= std::uint64_t{1}
                     << pair_id[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])]
                               [static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
          }
        }
      }
      if (image < mask) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;
    Graph g = graph_from_mask(n, mask);
    if (connected(g)) out.push_back(std::move(g));
  }
  return out;
}

// G(n, p) with edges drawn independently.
inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

// Random chordal graph: a random graph triangulated by the elimination game
// along a random vertex order.
inline Graph random_chordal_graph(std::mt19937_64& rng, int n, double p) {
  const Graph g = random_graph(rng, n, p);
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const EdgePair& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (const int v : order) {
    std::vector<int> later;
    for (int w = 0; w < n; ++w) {
      if (!gone[static_cast<std::size_t>(w)] && w != v && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
        later.push_back(w);
      }
    }
    for (const int a : later) {
      for (const int b : later) {
        if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      }
    }
    gone[static_cast<std::size_t>(v)] = 1;
  }
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

// A chordal completion of g: random extra non-edges (each with probability
// `extra`), then the elimination game along a random vertex order.
inline Completion random_chordal_completion(std::mt19937_64& rng, const Graph& g, double extra) {
  const auto n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const EdgePair& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  std::bernoulli_distribution coin(extra);
  for (const EdgePair& e : g.non_edges()) {
    if (coin(rng)) {
      adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
      adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> gone(n, 0);
  for (const std::size_t v : order) {
    std::vector<std::size_t> later;
    for (std::size_t w = 0; w < n; ++w) {
      if (!gone[w] && w != v && adj[v][w]) later.push_back(w);
    }
    for (const std::size_t a : later) {
      for (const std::size_t b : later) {
        if (a != b) adj[a][b] = 1;
      }
    }
    gone[v] = 1;
  }
  std::vector<EdgePair> fill;
  for (const EdgePair& e : g.non_edges()) {
    if (adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)]) fill.push_back(e);
  }
  return Completion::from_edges(g, fill);
}

// Brute-force chordality: no vertex subset of size >= 4 induces a cycle.
// A subset induces a cycle iff it is connected and every vertex has exactly
// two neighbours inside it.
inline bool chordal_by_subsets(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 4) continue;
    bool two_regular = true;
    for (int v = 0; v < n && two_regular; ++v) {
      if (!((s >> v) & 1u)) continue;
      int deg = 0;
      for (const Vertex w : g.neighbours(v)) deg += (s >> w) & 1u;
      two_regular = deg == 2;
    }
    if (!two_regular) continue;
    // Connected check inside s.
    const int start = std::countr_zero(s);
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const Vertex w : g.neighbours(v)) {
        if (((s >> w) & 1u) && !((seen >> w) & 1u)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == s) return false;
  }
  return true;
}

// table[m] says whether G plus the non-edges in bitmask m (bit i is
// non_edges()[i]) is chordal. Simplicial-vertex elimination on bitmasks;
// for n <= 32 and at most ~22 non-edges.
inline std::vector<char> chordal_fill_table(const Graph& g) {
  const auto n = g.vertex_count();
  const auto& ne = g.non_edges();
  std::vector<std::uint32_t> base(n, 0);
  for (const EdgePair& e : g.edges()) {
    base[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    base[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  std::vector<char> table(std::size_t{1} << ne.size());
  std::vector<std::uint32_t> adj(n);
  for (std::size_t m = 0; m < table.size(); ++m) {
    adj = base;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      if ((m >> i) & 1u) {
        adj[static_cast<std::size_t>(ne[i].u)] |= 1u << ne[i].v;
        adj[static_cast<std::size_t>(ne[i].v)] |= 1u << ne[i].u;
      }
    }
    std::uint32_t remaining = n == 32 ? ~0u : (1u << n) - 1;
    bool progress = true;
    while (remaining && progress) {
      progress = false;
      for (std::uint32_t scan = remaining; scan; scan &= scan - 1) {
        const int v = std::countr_zero(scan);
        const std::uint32_t nb = adj[static_cast<std::size_t>(v)] & remaining;
        bool clique = true;
        for (std::uint32_t rest = nb; rest && clique; rest &= rest - 1) {
          const int u = std::countr_zero(rest);
          clique = (nb & ~adj[static_cast<std::size_t>(u)] & ~(1u << u)) == 0;
        }
        if (clique) {
          remaining &= ~(1u << v);
          progress = true;
          break;
        }
      }
    }
    table[m] = remaining == 0;
  }
  return table;
}

template <class T>
std::unordered_set<T> as_set(const std::vector<T>& items) {
  return {items.begin(), items.end()};
}

// All subsets of {0..m-1} of size at most k; the maximal ones are the
// k-subsets. pi(F) lists F in increasing order (prefix-closed with the natural
// order as preference). Neighbour i of F swaps one element of F for one
// element outside it. Next is left to the generic engine.
class UniformSubsetSystem {
 public:
  using Solution = std::uint64_t;
  using Ordering = std::vector<int>;

  UniformSubsetSystem(int m, int k) : m_(m), k_(k), root_((std::uint64_t{1} << k) - 1) {}

  const Solution& root() const { return root_; }
  std::size_t neighbour_count(const Solution&) const { return static_cast<std::size_t>(k_ * (m_ - k_)); }

  Solution neighbour(const Solution& s, std::size_t i) const {
    const auto out_rank = static_cast<int>(i) / (m_ - k_);
    const auto in_rank = static_cast<int>(i) % (m_ - k_);
    return (s & ~bit_at_rank(s, out_rank)) | bit_at_rank(~s & full(), in_rank);
  }

  Ordering ordering(const Solution& s) const {
    Ordering out;
    for (int x = 0; x < m_; ++x) {
      if ((s >> x) & 1u) out.push_back(x);
    }
    return out;
  }

  std::size_t proximity(const Solution& s, const Ordering& ord) const {
    std::size_t i = 0;
    while (i < ord.size() && ((s >> ord[i]) & 1u)) ++i;
    return i;
  }

  std::weak_ordering compare_prec(const Solution& a, const Solution& b) const { return ordering(a) <=> ordering(b); }
  bool lex_less(const Solution& a, const Solution& b) const { return ordering(a) < ordering(b); }

  int universe() const { return m_; }
  int rank() const { return k_; }

 private:
  std::uint64_t full() const { return (std::uint64_t{1} << m_) - 1; }

  static std::uint64_t bit_at_rank(std::uint64_t s, int rank) {
    for (int r = 0; r < rank; ++r) s &= s - 1;
    return s & (~s + 1);
  }

  int m_;
  int k_;
  Solution root_;
};

static_assert(SetSystemInstance<UniformSubsetSystem>);
static_assert(!HasDirectedNext<UniformSubsetSystem>);

}  // namespace chordenum::testing
