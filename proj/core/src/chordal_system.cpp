#include "chordenum/chordal_system.hpp"

#include <algorithm>
#include <sstream>

#include "chordenum/errors.hpp"

namespace chordenum {

ChordalCompletionSystem::ChordalCompletionSystem(const Graph& graph)
    : graph_(&graph), root_(unchecked::del(Completion::full(graph), Completion::full(graph).fill())) {}

std::size_t ChordalCompletionSystem::fill_position(const Completion& f, std::size_t i) const {
  std::size_t pos = f.fill().find_first();
  for (std::size_t k = 0; k < i && pos != EdgeSet::npos; ++k) pos = f.fill().find_next(pos);
  if (pos == EdgeSet::npos) throw InputError("neighbour index exceeds the number of fill edges");
  return pos;
}

Completion ChordalCompletionSystem::neighbour(const Completion& f, std::size_t i) const {
  return unchecked::succ(f, fill_position(f, i));
}

CanonicalOrdering ChordalCompletionSystem::ordering(const Completion& f) const {
  return unchecked::canonical_ordering(f);
}

Completion ChordalCompletionSystem::next(const Completion& current, const Completion& /*target*/,
                                         const CanonicalOrdering& target_ordering) const {
  const std::size_t i = chordenum::proximity(current, target_ordering);
  if (i >= target_ordering.size()) {
    throw PreconditionError("next: the current completion already has full proximity to the target");
  }
  const EdgePair e = target_ordering[i];
  const auto idx = graph_->non_edge_index(e);
  if (!idx || !current.fill().test(*idx)) {
    std::ostringstream msg;
    msg << "next: edge " << e << " of the target's canonical ordering is not a fill edge of the current completion";
    throw InvariantError(msg.str());
  }
  return unchecked::succ(current, *idx);
}

bool ChordalCompletionSystem::may_produce(const Completion& f, std::size_t i, const Completion& candidate) const {
  return !candidate.fill().test(fill_position(f, i));
}

std::weak_ordering ChordalCompletionSystem::compare_prec(const Completion& a, const Completion& b) const {
  if (a == b) return std::weak_ordering::equivalent;
  return ordering(a) <=> ordering(b);
}

bool ChordalCompletionSystem::lex_less(const Completion& a, const Completion& b) const {
  // The first position where the complements differ decides; the set owning
  // the smaller element there is smaller, unless it ran out first.
  const EdgeSet ca = a.complement();
  const EdgeSet cb = b.complement();
  const EdgeSet diff = ca ^ cb;
  const std::size_t first = diff.find_first();
  if (first == EdgeSet::npos) return false;
  // Elements below `first` agree. If ca holds `first`, a's next element is
  // smaller than b's next element (or b has none left), so a < b.
  if (ca.test(first)) {
    // b is a strict prefix of a when b has nothing at or after `first`.
    return cb.find_next(first) != EdgeSet::npos;
  }
  return ca.find_next(first) == EdgeSet::npos;
}

}  // namespace chordenum
