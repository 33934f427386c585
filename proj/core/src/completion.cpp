#include "chordenum/completion.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "chordenum/errors.hpp"

namespace chordenum {

namespace {

// Mutable G_F: the base graph's packed adjacency with the fill edges set.
class Supergraph {
 public:
  explicit Supergraph(const Completion& f)
      : base_(&f.base()),
        words_(f.base().adjacency().words_per_row()),
        bits_(f.base().packed_adjacency().begin(), f.base().packed_adjacency().end()),
        fill_(f.fill()),
        common_(words_) {
    for (std::size_t i = fill_.find_first(); i != EdgeSet::npos; i = fill_.find_next(i)) set_pair(i, true);
  }

  AdjacencyView view() const { return {base_->vertex_count(), words_, bits_.data()}; }
  const EdgeSet& fill() const { return fill_; }

  void add(std::size_t idx) {
    fill_.set(idx);
    set_pair(idx, true);
  }

  void remove(std::size_t idx) {
    fill_.reset(idx);
    set_pair(idx, false);
  }

  bool removable(std::size_t idx, RemovalTest test) {
    if (test == RemovalTest::kFullRetest) {
      remove(idx);
      const bool ok = is_chordal(view());
      add(idx);
      return ok;
    }
    load_common(idx);
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t bits = common_[k];
      while (bits) {
        const std::size_t w = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (!clique_member(w)) return false;
      }
    }
    return true;
  }

  // Removes the smallest removable element of `active` until none is left.
  // `active` must be a subset of the fill; removed elements are cleared from
  // it and reported to `on_remove`.
  template <class OnRemove>
  void reduce(EdgeSet& active, RemovalTest test, OnRemove&& on_remove) {
    for (;;) {
      bool removed = false;
      for (std::size_t i = active.find_first(); i != EdgeSet::npos; i = active.find_next(i)) {
        if (!removable(i, test)) continue;
        remove(i);
        active.reset(i);
        on_remove(i);
        removed = true;
        break;
      }
      if (!removed) return;
    }
  }

  void reduce_all(RemovalTest test) {
    EdgeSet active = fill_;
    reduce(active, test, [](std::size_t) {});
  }

  void flip(std::size_t idx) {
    load_common(idx);
    std::vector<Vertex> members;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t bits = common_[k];
      while (bits) {
        members.push_back(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    const AdjacencyView adj = view();
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (adj.adjacent(members[a], members[b])) continue;
        // Not adjacent in G_F, hence not in G either.
        add(*base_->non_edge_index({members[a], members[b]}));
      }
    }
    remove(idx);
  }

  Completion release() && { return Completion(*base_, std::move(fill_)); }

 private:
  void set_pair(std::size_t idx, bool on) {
    const EdgePair e = base_->non_edges()[idx];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    const std::uint64_t bu = std::uint64_t{1} << (u & 63);
    const std::uint64_t bv = std::uint64_t{1} << (v & 63);
    if (on) {
      bits_[u * words_ + (v >> 6)] |= bv;
      bits_[v * words_ + (u >> 6)] |= bu;
    } else {
      bits_[u * words_ + (v >> 6)] &= ~bv;
      bits_[v * words_ + (u >> 6)] &= ~bu;
    }
  }

  void load_common(std::size_t idx) {
    const EdgePair e = base_->non_edges()[idx];
    const std::uint64_t* rx = bits_.data() + static_cast<std::size_t>(e.u) * words_;
    const std::uint64_t* ry = bits_.data() + static_cast<std::size_t>(e.v) * words_;
    for (std::size_t k = 0; k < words_; ++k) common_[k] = rx[k] & ry[k];
  }

  // Whether w is adjacent to every other vertex of the loaded common set.
  bool clique_member(std::size_t w) const {
    const std::uint64_t* rw = bits_.data() + w * words_;
    for (std::size_t k = 0; k < words_; ++k) {
      std::uint64_t missing = common_[k] & ~rw[k];
      if (k == (w >> 6)) missing &= ~(std::uint64_t{1} << (w & 63));
      if (missing) return false;
    }
    return true;
  }

  const Graph* base_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  EdgeSet fill_;
  std::vector<std::uint64_t> common_;
};

std::size_t require_fill_index(const Completion& f, EdgePair e) {
  const auto idx = f.base().non_edge_index(e);
  if (!idx || !f.fill().test(*idx)) {
    std::ostringstream msg;
    msg << "edge " << e << " is not a fill edge of the completion";
    throw InputError(msg.str());
  }
  return *idx;
}

void require_chordal(const Completion& f, const char* op) {
  if (!f.is_chordal()) throw PreconditionError(std::string(op) + ": the completion is not chordal");
}

void require_universe_size(const Completion& f, const EdgeSet& x) {
  if (x.size() != f.base().non_edges().size()) {
    throw InputError("edge set does not match the non-edge universe of the base graph");
  }
}

}  // namespace

Completion::Completion(const Graph& base, EdgeSet fill) : base_(&base), fill_(std::move(fill)) {
  if (fill_.size() != base.non_edges().size()) {
    throw InputError("fill set does not match the non-edge universe of the base graph");
  }
}

Completion Completion::from_edges(const Graph& base, std::span<const EdgePair> fill) {
  EdgeSet bits(base.non_edges().size());
  for (const EdgePair& raw : fill) {
    const EdgePair e = EdgePair::normalized(raw.u, raw.v);
    const auto idx = base.non_edge_index(e);
    if (!idx) {
      std::ostringstream msg;
      msg << "pair " << e << " is not a non-edge of the base graph";
      throw InputError(msg.str());
    }
    bits.set(*idx);
  }
  return Completion(base, std::move(bits));
}

Completion Completion::empty(const Graph& base) { return Completion(base, EdgeSet(base.non_edges().size())); }

Completion Completion::full(const Graph& base) {
  EdgeSet bits(base.non_edges().size());
  bits.set();
  return Completion(base, std::move(bits));
}

bool Completion::contains(EdgePair e) const {
  const auto idx = base_->non_edge_index(EdgePair::normalized(e.u, e.v));
  return idx && fill_.test(*idx);
}

std::vector<EdgePair> Completion::edges() const {
  std::vector<EdgePair> out;
  out.reserve(size());
  for (std::size_t i = fill_.find_first(); i != EdgeSet::npos; i = fill_.find_next(i)) {
    out.push_back(base_->non_edges()[i]);
  }
  return out;
}

EdgeSet Completion::complement() const { return ~fill_; }

Graph Completion::to_graph() const {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (const EdgePair& e : base_->edges()) all.emplace_back(e.u, e.v);
  for (const EdgePair& e : edges()) all.emplace_back(e.u, e.v);
  return Graph::build(base_->vertex_count(), all);
}

bool Completion::is_chordal() const { return chordenum::is_chordal(Supergraph(*this).view()); }

std::ostream& operator<<(std::ostream& os, const Completion& f) {
  if (f.empty()) return os << '-';
  bool first = true;
  for (const EdgePair& e : f.edges()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os;
}

std::vector<EdgePair> candidates(const Completion& f, const EdgeSet& x, RemovalTest test) {
  require_universe_size(f, x);
  require_chordal(f, "candidates");
  Supergraph sg(f);
  const EdgeSet pool = x & f.fill();
  std::vector<EdgePair> out;
  for (std::size_t i = pool.find_first(); i != EdgeSet::npos; i = pool.find_next(i)) {
    if (sg.removable(i, test)) out.push_back(f.base().non_edges()[i]);
  }
  return out;
}

Completion del(const Completion& f, const EdgeSet& x, RemovalTest test) {
  require_universe_size(f, x);
  require_chordal(f, "del");
  return unchecked::del(f, x, test);
}

Completion del(const Completion& f, RemovalTest test) { return del(f, f.fill(), test); }

CanonicalOrdering canonical_ordering(const Completion& f) {
  if (!is_minimal(f)) throw PreconditionError("canonical_ordering: the completion is not minimal");
  return unchecked::canonical_ordering(f);
}

std::size_t proximity(const Completion& f1, const CanonicalOrdering& ord2) {
  std::size_t i = 0;
  for (const EdgePair& e : ord2) {
    const auto idx = f1.base().non_edge_index(e);
    if (!idx || f1.fill().test(*idx)) break;
    ++i;
  }
  return i;
}

Completion flip(const Completion& f, EdgePair e) {
  const std::size_t idx = require_fill_index(f, EdgePair::normalized(e.u, e.v));
  require_chordal(f, "flip");
  return unchecked::flip(f, idx);
}

Completion succ(const Completion& f, EdgePair e) {
  const std::size_t idx = require_fill_index(f, EdgePair::normalized(e.u, e.v));
  require_chordal(f, "succ");
  return unchecked::succ(f, idx);
}

std::vector<Completion> neighbours(const Completion& f) {
  require_chordal(f, "neighbours");
  std::vector<Completion> out;
  for (std::size_t i = f.fill().find_first(); i != EdgeSet::npos; i = f.fill().find_next(i)) {
    Completion next = unchecked::succ(f, i);
    bool seen = false;
    for (const Completion& c : out) seen = seen || c == next;
    if (!seen) out.push_back(std::move(next));
  }
  return out;
}

bool is_minimal(const Completion& f) {
  require_chordal(f, "is_minimal");
  Supergraph sg(f);
  for (std::size_t i = f.fill().find_first(); i != EdgeSet::npos; i = f.fill().find_next(i)) {
    if (sg.removable(i, RemovalTest::kCommonNeighbourhoodClique)) return false;
  }
  return true;
}

namespace unchecked {

CanonicalOrdering canonical_ordering(const Completion& f) {
  const Graph& g = f.base();
  Supergraph sg(Completion::full(g));
  EdgeSet active = f.complement();
  CanonicalOrdering ord;
  ord.sequence.reserve(active.count());
  sg.reduce(active, RemovalTest::kCommonNeighbourhoodClique,
            [&](std::size_t i) { ord.sequence.push_back(g.non_edges()[i]); });
  if (active.any()) throw InvariantError("canonical ordering stalled before exhausting the complement");
  return ord;
}

Completion flip(const Completion& f, std::size_t edge) {
  Supergraph sg(f);
  sg.flip(edge);
  return std::move(sg).release();
}

Completion succ(const Completion& f, std::size_t edge) {
  Supergraph sg(f);
  sg.flip(edge);
  sg.reduce_all(RemovalTest::kCommonNeighbourhoodClique);
  return std::move(sg).release();
}

Completion del(const Completion& f, const EdgeSet& x, RemovalTest test) {
  Supergraph sg(f);
  EdgeSet active = x & f.fill();
  sg.reduce(active, test, [](std::size_t) {});
  return std::move(sg).release();
}

}  // namespace unchecked

}  // namespace chordenum
