#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "chordenum/completion.hpp"
#include "chordenum/graph.hpp"

namespace chordenum {

enum class SolutionSource { kOracle, kReverseSearch, kVisitedSet };

std::string to_string(SolutionSource source);

// A materialized family of completions of one graph, in production order.
// Duplicates are kept so that verification can report them.
struct SolutionSet {
  std::vector<Completion> solutions;
  SolutionSource source = SolutionSource::kOracle;
};

inline constexpr std::size_t kDefaultOracleLimit = 20;
inline constexpr std::size_t kMaxOracleLimit = 40;

// Every inclusion-minimal F subset of E^c with G_F chordal, found by testing
// subsets in order of increasing size. Shares no code with the enumeration:
// chordality is decided by simplicial-vertex elimination on bitmasks.
// Throws InputError when |E^c| exceeds `universe_limit` (or kMaxOracleLimit,
// or the graph has more than 64 vertices).
SolutionSet brute_force_minimal_completions(const Graph& g, std::size_t universe_limit = kDefaultOracleLimit);

struct VerificationReport {
  std::vector<Completion> missing;      // in reference, not produced
  std::vector<Completion> extra;        // produced, not in reference
  std::vector<Completion> non_minimal;  // produced, fails the Rose-Tarjan test
  std::vector<Completion> non_chordal;  // produced, G_F not chordal
  std::vector<Completion> duplicates;   // produced more than once

  bool ok() const {
    return missing.empty() && extra.empty() && non_minimal.empty() && non_chordal.empty() && duplicates.empty();
  }
};

VerificationReport verify_solution_set(const Graph& g, const SolutionSet& produced, const SolutionSet& reference);

// One line per finding, or "ok".
std::ostream& operator<<(std::ostream& os, const VerificationReport& report);

}  // namespace chordenum
