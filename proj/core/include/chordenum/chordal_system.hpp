#pragma once

#include <compare>
#include <cstddef>

#include "chordenum/completion.hpp"
#include "chordenum/engine.hpp"
#include "chordenum/graph.hpp"

namespace chordenum {

// The minimal chordal completions of a graph as an engine instance.
//
// The engine's solutions are the complements F-bar of minimal completions;
// they are stored as Completions and complemented implicitly. The root is
// Del(E^c). Neighbour i of F is Succ(F, e) for the i-th fill edge e of F in
// ground-set order, and Next follows the first element of the target's
// canonical ordering missing from the current complement.
class ChordalCompletionSystem {
 public:
  using Solution = Completion;
  using Ordering = CanonicalOrdering;

  // `graph` must outlive the system and every solution it produces.
  explicit ChordalCompletionSystem(const Graph& graph);
  explicit ChordalCompletionSystem(Graph&&) = delete;

  const Graph& graph() const { return *graph_; }
  const Completion& root() const { return root_; }

  std::size_t neighbour_count(const Completion& f) const { return f.size(); }
  Completion neighbour(const Completion& f, std::size_t i) const;
  CanonicalOrdering ordering(const Completion& f) const;
  std::size_t proximity(const Completion& f, const CanonicalOrdering& ord) const {
    return chordenum::proximity(f, ord);
  }

  // Succ(current, f_{i+1}) where i = proximity(current, target_ordering).
  Completion next(const Completion& current, const Completion& target, const CanonicalOrdering& target_ordering) const;

  // Succ(f, e) never contains e.
  bool may_produce(const Completion& f, std::size_t i, const Completion& candidate) const;

  // Lexicographic comparison of canonical orderings.
  std::weak_ordering compare_prec(const Completion& a, const Completion& b) const;

  // Lexicographic comparison of the sorted complements.
  bool lex_less(const Completion& a, const Completion& b) const;

 private:
  std::size_t fill_position(const Completion& f, std::size_t i) const;

  const Graph* graph_;
  Completion root_;
};

static_assert(SetSystemInstance<ChordalCompletionSystem>);
static_assert(HasDirectedNext<ChordalCompletionSystem>);
static_assert(HasProductionFilter<ChordalCompletionSystem>);

// Same neighbourhood and ordering, but Next is left to the engine's generic
// lexicographic-minimum rule. Useful to exercise the generic machinery on a
// non-trivial system.
class GenericChordalCompletionSystem {
 public:
  using Solution = Completion;
  using Ordering = CanonicalOrdering;

  explicit GenericChordalCompletionSystem(const Graph& graph) : inner_(graph) {}
  explicit GenericChordalCompletionSystem(Graph&&) = delete;

  const Completion& root() const { return inner_.root(); }
  std::size_t neighbour_count(const Completion& f) const { return inner_.neighbour_count(f); }
  Completion neighbour(const Completion& f, std::size_t i) const { return inner_.neighbour(f, i); }
  CanonicalOrdering ordering(const Completion& f) const { return inner_.ordering(f); }
  std::size_t proximity(const Completion& f, const CanonicalOrdering& ord) const { return inner_.proximity(f, ord); }
  std::weak_ordering compare_prec(const Completion& a, const Completion& b) const { return inner_.compare_prec(a, b); }
  bool lex_less(const Completion& a, const Completion& b) const { return inner_.lex_less(a, b); }

 private:
  ChordalCompletionSystem inner_;
};

static_assert(SetSystemInstance<GenericChordalCompletionSystem>);
static_assert(!HasDirectedNext<GenericChordalCompletionSystem>);

}  // namespace chordenum
