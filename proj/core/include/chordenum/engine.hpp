#pragma once

// Canonical-path-reconstruction enumeration over an abstract set system.
//
// An instance supplies the maximal solutions' neighbourhood structure and a
// prefix-closed ordering scheme; this header turns that into Next, canonical
// paths, Parent/Children, a stateless reverse-search walk and a visited-set
// traversal. Nothing here is specific to chordal completions.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chordenum/errors.hpp"

namespace chordenum {

// Contract for the engine.
//
//  root()                 a fixed maximal solution F0
//  neighbour_count(s)     size of s's neighbour-generation sequence
//  neighbour(s, i)        i-th generated neighbour; may repeat across i
//  ordering(s)            pi(s), every prefix of which is in the family
//  proximity(s, o)        longest prefix of ordering o contained in s
//  compare_prec(a, b)     the total order induced by comparing orderings
//  lex_less(a, b)         ground-set lexicographic order on solutions, used
//                         by the generic Next to pick among candidates
//
// Solutions must be equality comparable and std::hash-able.
template <class S>
concept SetSystemInstance =
    requires(const S& sys, const typename S::Solution& a, const typename S::Solution& b,
             const typename S::Ordering& ord, std::size_t i) {
      typename S::Solution;
      typename S::Ordering;
      { sys.root() } -> std::convertible_to<const typename S::Solution&>;
      { sys.neighbour_count(a) } -> std::convertible_to<std::size_t>;
      { sys.neighbour(a, i) } -> std::convertible_to<typename S::Solution>;
      { sys.ordering(a) } -> std::convertible_to<typename S::Ordering>;
      { sys.proximity(a, ord) } -> std::convertible_to<std::size_t>;
      { sys.compare_prec(a, b) } -> std::convertible_to<std::weak_ordering>;
      { sys.lex_less(a, b) } -> std::convertible_to<bool>;
      { a == b } -> std::convertible_to<bool>;
      { std::hash<typename S::Solution>{}(a) } -> std::convertible_to<std::size_t>;
    };

// An instance may supply its own deterministic Next(current, target, pi(target)).
template <class S>
concept HasDirectedNext = requires(const S& sys, const typename S::Solution& a, const typename S::Ordering& ord) {
  { sys.next(a, a, ord) } -> std::convertible_to<typename S::Solution>;
};

// may_produce(s, i, c) == false promises neighbour(s, i) != c. Lets the
// engine skip neighbour computations when deduplicating.
template <class S>
concept HasProductionFilter = requires(const S& sys, const typename S::Solution& a, std::size_t i) {
  { sys.may_produce(a, i, a) } -> std::convertible_to<bool>;
};

// Counters describing the resource profile of a traversal.
struct TraversalStats {
  std::size_t emitted = 0;
  // Largest number of solutions held by the traversal at one time: for the
  // reverse search the current solution, a retained parent and one candidate
  // child or probe; for the visited-set mode the visited set plus the stack.
  // Working values internal to parent() and to the ownership check (at most
  // two path nodes or one probe) are not counted.
  std::size_t peak_retained = 0;
  std::size_t child_scans = 0;
  std::size_t parent_recomputations = 0;
  // Worst case over the gaps between consecutive emissions (and the work
  // before the first one).
  std::size_t max_child_scans_per_gap = 0;
  std::size_t max_parent_recomputations_per_gap = 0;
};

template <SetSystemInstance S>
std::weak_ordering compare_prec(const S& sys, const typename S::Solution& a, const typename S::Solution& b) {
  return sys.compare_prec(a, b);
}

// Lexicographically smallest neighbour of `current` whose proximity to the
// target exceeds that of `current`.
template <SetSystemInstance S>
typename S::Solution generic_next(const S& sys, const typename S::Solution& current,
                                  const typename S::Solution& target, const typename S::Ordering& target_ordering) {
  if (current == target) throw PreconditionError("next: current solution already equals the target");
  const std::size_t here = sys.proximity(current, target_ordering);
  std::optional<typename S::Solution> best;
  const std::size_t count = sys.neighbour_count(current);
  for (std::size_t i = 0; i < count; ++i) {
    typename S::Solution candidate = sys.neighbour(current, i);
    if (sys.proximity(candidate, target_ordering) <= here) continue;
    if (!best || sys.lex_less(candidate, *best)) best = std::move(candidate);
  }
  if (!best) throw InvariantError("next: no neighbour increases proximity; the neighbourhood is not proximity searchable");
  return std::move(*best);
}

// Uses the instance's own Next when it has one, the generic rule otherwise.
template <SetSystemInstance S>
typename S::Solution next(const S& sys, const typename S::Solution& current, const typename S::Solution& target,
                          const typename S::Ordering& target_ordering) {
  if constexpr (HasDirectedNext<S>) {
    if (current == target) throw PreconditionError("next: current solution already equals the target");
    return sys.next(current, target, target_ordering);
  } else {
    return generic_next(sys, current, target, target_ordering);
  }
}

// F0, ..., Fk = target, each step taken by next().
template <SetSystemInstance S>
std::vector<typename S::Solution> canonical_path(const S& sys, const typename S::Solution& target) {
  const typename S::Ordering ord = sys.ordering(target);
  std::vector<typename S::Solution> path{sys.root()};
  while (!(path.back() == target)) {
    path.push_back(next(sys, path.back(), target, ord));
  }
  return path;
}

// Second-to-last element of the canonical path, computed while holding only
// two path nodes. Throws InputError for the root.
template <SetSystemInstance S>
typename S::Solution parent(const S& sys, const typename S::Solution& f) {
  if (f == sys.root()) throw InputError("parent: the root solution has no parent");
  const typename S::Ordering ord = sys.ordering(f);
  typename S::Solution current = sys.root();
  for (;;) {
    typename S::Solution following = next(sys, current, f, ord);
    if (following == f) return current;
    current = std::move(following);
  }
}

namespace detail {

// Whether some generation index below `index` already yields `child`.
template <SetSystemInstance S>
bool produced_earlier(const S& sys, const typename S::Solution& f, std::size_t index,
                      const typename S::Solution& child) {
  for (std::size_t j = 0; j < index; ++j) {
    if constexpr (HasProductionFilter<S>) {
      if (!sys.may_produce(f, j, child)) continue;
    }
    if (sys.neighbour(f, j) == child) return true;
  }
  return false;
}

// First generation index of `f` that yields `child`.
template <SetSystemInstance S>
std::size_t owner_index(const S& sys, const typename S::Solution& f, const typename S::Solution& child) {
  const std::size_t count = sys.neighbour_count(f);
  for (std::size_t j = 0; j < count; ++j) {
    if constexpr (HasProductionFilter<S>) {
      if (!sys.may_produce(f, j, child)) continue;
    }
    if (sys.neighbour(f, j) == child) return j;
  }
  throw InvariantError("a solution is not a neighbour of its parent");
}

// Whether neighbour(f, index) == child is a child of f that f owns: not the
// root, f is its parent, and no earlier index produced it.
template <SetSystemInstance S>
bool is_owned_child(const S& sys, const typename S::Solution& f, std::size_t index, const typename S::Solution& child) {
  if (child == sys.root()) return false;
  if (!(parent(sys, child) == f)) return false;
  return !produced_earlier(sys, f, index, child);
}

}  // namespace detail

// Neighbours of f whose parent is f, deduplicated, in first-generation order.
template <SetSystemInstance S>
std::vector<typename S::Solution> children(const S& sys, const typename S::Solution& f) {
  std::vector<typename S::Solution> out;
  const std::size_t count = sys.neighbour_count(f);
  for (std::size_t i = 0; i < count; ++i) {
    typename S::Solution c = sys.neighbour(f, i);
    if (detail::is_owned_child(sys, f, i, c)) out.push_back(std::move(c));
  }
  return out;
}

// Depth-first walk of the parent/children arborescence that keeps no stack.
//
// The state is the current solution, the parity of its depth and the index at
// which to resume its child scan, plus at most one retained parent (the node
// we last descended from, with its resume index). Climbing from a node whose
// parent was not retained recomputes the parent and locates the resume index
// by regenerating the parent's neighbours.
//
// Solutions at even depth are emitted when first reached, those at odd depth
// when their subtree is finished, so two emissions are separated by at most
// two partial child scans.
template <SetSystemInstance S>
class ReverseSearch {
 public:
  using Solution = typename S::Solution;

  explicit ReverseSearch(const S& sys) : sys_(&sys) {}

  // Next solution in emission order, or nullopt once the walk is complete.
  std::optional<Solution> advance() {
    if (phase_ == Phase::kDone) return std::nullopt;
    if (phase_ == Phase::kStart) {
      current_.emplace(sys_->root());
      resume_ = 0;
      odd_depth_ = false;
      phase_ = Phase::kScan;
      note_retained(1);
      return emit(*current_);
    }
    for (;;) {
      if (phase_ == Phase::kClimb) climb();
      ++stats_.child_scans;
      ++gap_scans_;
      if (descend()) {
        if (!odd_depth_) return emit(*current_);
        continue;
      }
      // Subtree of current_ is finished.
      if (*current_ == sys_->root()) {
        phase_ = Phase::kDone;
        return std::nullopt;
      }
      phase_ = Phase::kClimb;
      if (odd_depth_) return emit(*current_);
    }
  }

  const TraversalStats& stats() const { return stats_; }

 private:
  enum class Phase { kStart, kScan, kClimb, kDone };

  Solution emit(const Solution& s) {
    ++stats_.emitted;
    stats_.max_child_scans_per_gap = std::max(stats_.max_child_scans_per_gap, gap_scans_);
    stats_.max_parent_recomputations_per_gap = std::max(stats_.max_parent_recomputations_per_gap, gap_parents_);
    gap_scans_ = 0;
    gap_parents_ = 0;
    return s;
  }

  void note_retained(std::size_t held) { stats_.peak_retained = std::max(stats_.peak_retained, held); }

  std::size_t held() const { return 1 + (retained_parent_ ? 1 : 0); }

  // Continues the child scan of current_; on success moves into the child.
  bool descend() {
    const std::size_t count = sys_->neighbour_count(*current_);
    for (std::size_t i = resume_; i < count; ++i) {
      Solution candidate = sys_->neighbour(*current_, i);
      note_retained(held() + 1);
      if (!detail::is_owned_child(*sys_, *current_, i, candidate)) continue;
      retained_parent_.emplace(std::move(*current_), i + 1);
      current_.emplace(std::move(candidate));
      resume_ = 0;
      odd_depth_ = !odd_depth_;
      phase_ = Phase::kScan;
      return true;
    }
    resume_ = count;
    return false;
  }

  void climb() {
    if (retained_parent_) {
      current_.emplace(std::move(retained_parent_->first));
      resume_ = retained_parent_->second;
      retained_parent_.reset();
    } else {
      ++stats_.parent_recomputations;
      ++gap_parents_;
      Solution up = parent(*sys_, *current_);
      note_retained(3);  // current, recomputed parent, owner probe
      resume_ = detail::owner_index(*sys_, up, *current_) + 1;
      current_.emplace(std::move(up));
    }
    odd_depth_ = !odd_depth_;
    phase_ = Phase::kScan;
  }

  const S* sys_;
  Phase phase_ = Phase::kStart;
  std::optional<Solution> current_;
  std::size_t resume_ = 0;
  bool odd_depth_ = false;
  std::optional<std::pair<Solution, std::size_t>> retained_parent_;
  TraversalStats stats_;
  std::size_t gap_scans_ = 0;
  std::size_t gap_parents_ = 0;
};

namespace detail {

// Sinks may return void (consume everything) or bool (false stops early).
template <class Sink, class T>
bool deliver(Sink& sink, const T& value) {
  if constexpr (std::is_void_v<std::invoke_result_t<Sink&, const T&>>) {
    sink(value);
    return true;
  } else {
    return static_cast<bool>(sink(value));
  }
}

}  // namespace detail

// Polynomial-space enumeration; returns the number of solutions delivered.
template <SetSystemInstance S, class Sink>
std::size_t enumerate_reverse_search(const S& sys, Sink&& sink, TraversalStats* stats = nullptr) {
  ReverseSearch<S> walk(sys);
  std::size_t delivered = 0;
  while (auto s = walk.advance()) {
    ++delivered;
    if (!detail::deliver(sink, *s)) break;
  }
  if (stats) *stats = walk.stats();
  return delivered;
}

// Traversal of the neighbour supergraph from the root with a visited set.
// Memory grows with the number of solutions; meant for cross-checking.
template <SetSystemInstance S, class Sink>
std::size_t enumerate_visited_set(const S& sys, Sink&& sink, TraversalStats* stats = nullptr) {
  using Solution = typename S::Solution;
  TraversalStats local;
  std::unordered_set<Solution> visited;
  std::vector<Solution> stack;

  const auto discover = [&](const Solution& s) -> bool {
    visited.insert(s);
    stack.push_back(s);
    ++local.emitted;
    local.peak_retained = std::max(local.peak_retained, visited.size() + stack.size());
    return detail::deliver(sink, s);
  };

  std::size_t delivered = 0;
  bool keep_going = discover(sys.root());
  ++delivered;
  while (keep_going && !stack.empty()) {
    Solution s = std::move(stack.back());
    stack.pop_back();
    ++local.child_scans;
    const std::size_t count = sys.neighbour_count(s);
    for (std::size_t i = 0; i < count && keep_going; ++i) {
      Solution nb = sys.neighbour(s, i);
      if (visited.contains(nb)) continue;
      keep_going = discover(nb);
      ++delivered;
    }
  }
  if (stats) *stats = local;
  return delivered;
}

}  // namespace chordenum
