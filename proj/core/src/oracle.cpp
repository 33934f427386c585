#include "chordenum/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "chordenum/errors.hpp"

namespace chordenum {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Repeatedly strips a simplicial vertex; the graph is chordal iff this empties it.
bool chordal_by_elimination(std::span<const Mask> adj) {
  const std::size_t n = adj.size();
  Mask remaining = n == 64 ? ~Mask{0} : bit(n) - 1;
  while (remaining) {
    bool stripped = false;
    for (Mask scan = remaining; scan; scan &= scan - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(scan));
      const Mask nb = adj[v] & remaining;
      bool clique = true;
      for (Mask rest = nb; rest && clique; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        clique = (nb & ~adj[u] & ~bit(u)) == 0;
      }
      if (clique) {
        remaining &= ~bit(v);
        stripped = true;
        break;
      }
    }
    if (!stripped) return false;
  }
  return true;
}

// Next larger integer with the same popcount.
Mask next_combination(Mask x) {
  const Mask smallest = x & (~x + 1);
  const Mask ripple = x + smallest;
  return ripple | (((x ^ ripple) >> 2) / smallest);
}

// Rose-Tarjan: each fill edge xy must be the only chord of a 4-cycle x-u-y-v,
// i.e. x and y have two non-adjacent common neighbours in G_F.
bool rose_tarjan_minimal(const Completion& f) {
  const Graph h = f.to_graph();
  for (const EdgePair& e : f.edges()) {
    const std::vector<Vertex> common = common_neighborhood(h, e.u, e.v);
    bool witnessed = false;
    for (std::size_t a = 0; a < common.size() && !witnessed; ++a) {
      for (std::size_t b = a + 1; b < common.size() && !witnessed; ++b) {
        witnessed = !h.adjacent(common[a], common[b]);
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace

std::string to_string(SolutionSource source) {
  switch (source) {
    case SolutionSource::kOracle:
      return "oracle";
    case SolutionSource::kReverseSearch:
      return "reverse_search";
    case SolutionSource::kVisitedSet:
      return "visited_set";
  }
  return "unknown";
}

SolutionSet brute_force_minimal_completions(const Graph& g, std::size_t universe_limit) {
  const std::size_t m = g.non_edges().size();
  const std::size_t limit = std::min(universe_limit, kMaxOracleLimit);
  if (m > limit) {
    std::ostringstream msg;
    msg << "brute-force oracle refuses a universe of " << m << " non-edges (limit " << limit << ")";
    throw InputError(msg.str());
  }
  if (g.vertex_count() > 64) throw InputError("brute-force oracle handles at most 64 vertices");

  const std::size_t n = g.vertex_count();
  std::vector<Mask> base(n, 0);
  for (const EdgePair& e : g.edges()) {
    base[static_cast<std::size_t>(e.u)] |= bit(static_cast<std::size_t>(e.v));
    base[static_cast<std::size_t>(e.v)] |= bit(static_cast<std::size_t>(e.u));
  }

  std::vector<Mask> found;
  std::vector<Mask> adj(n);
  for (std::size_t k = 0; k <= m; ++k) {
    const Mask stop = bit(m);
    for (Mask subset = k == 0 ? 0 : bit(k) - 1; subset < stop; subset = next_combination(subset)) {
      bool dominated = false;
      for (const Mask f : found) {
        if ((subset & f) == f) {
          dominated = true;
          break;
        }
      }
      if (!dominated) {
        adj = base;
        for (Mask rest = subset; rest; rest &= rest - 1) {
          const EdgePair& e = g.non_edges()[static_cast<std::size_t>(std::countr_zero(rest))];
          adj[static_cast<std::size_t>(e.u)] |= bit(static_cast<std::size_t>(e.v));
          adj[static_cast<std::size_t>(e.v)] |= bit(static_cast<std::size_t>(e.u));
        }
        // Every proper chordal subset would contain an earlier find, so a
        // chordal survivor is minimal.
        if (chordal_by_elimination(adj)) found.push_back(subset);
      }
      if (k == 0) break;
    }
    if (k == 0 && !found.empty()) break;  // G itself is chordal
  }

  SolutionSet out;
  out.source = SolutionSource::kOracle;
  for (const Mask f : found) {
    EdgeSet fill(m);
    for (Mask rest = f; rest; rest &= rest - 1) fill.set(static_cast<std::size_t>(std::countr_zero(rest)));
    out.solutions.emplace_back(g, std::move(fill));
  }
  return out;
}

VerificationReport verify_solution_set(const Graph& g, const SolutionSet& produced, const SolutionSet& reference) {
  VerificationReport report;
  std::unordered_set<Completion> seen;
  for (const Completion& f : produced.solutions) {
    if (&f.base() != &g) throw InputError("verify_solution_set: produced completion belongs to a different graph");
    if (!seen.insert(f).second) {
      report.duplicates.push_back(f);
      continue;
    }
    if (!f.is_chordal()) {
      report.non_chordal.push_back(f);
    } else if (!rose_tarjan_minimal(f)) {
      report.non_minimal.push_back(f);
    }
  }
  std::unordered_set<Completion> expected;
  for (const Completion& f : reference.solutions) {
    if (&f.base() != &g) throw InputError("verify_solution_set: reference completion belongs to a different graph");
    expected.insert(f);
    if (!seen.contains(f)) report.missing.push_back(f);
  }
  for (const Completion& f : produced.solutions) {
    if (!expected.contains(f) &&
        std::find(report.extra.begin(), report.extra.end(), f) == report.extra.end()) {
      report.extra.push_back(f);
    }
  }
  return report;
}

std::ostream& operator<<(std::ostream& os, const VerificationReport& report) {
  if (report.ok()) return os << "ok\n";
  const auto section = [&](const char* label, const std::vector<Completion>& items) {
    for (const Completion& f : items) os << label << ": " << f << '\n';
  };
  section("missing", report.missing);
  section("extra", report.extra);
  section("non-minimal", report.non_minimal);
  section("non-chordal", report.non_chordal);
  section("duplicate", report.duplicates);
  return os;
}

}  // namespace chordenum
