#include "chordenum/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "chordenum/errors.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

namespace chordenum {
namespace {

using testing::cycle;

Completion make(const Graph& g, std::initializer_list<std::pair<Vertex, Vertex>> fill) {
  std::vector<EdgePair> edges;
  for (const auto& [u, v] : fill) edges.push_back(EdgePair::normalized(u, v));
  return Completion::from_edges(g, edges);
}

TEST(Oracle, CycleOfFour) {
  const Graph c4 = cycle(4);
  const SolutionSet s = brute_force_minimal_completions(c4);
  EXPECT_EQ(s.source, SolutionSource::kOracle);
  EXPECT_EQ(testing::as_set(s.solutions), (std::unordered_set<Completion>{make(c4, {{0, 2}}), make(c4, {{1, 3}})}));
  EXPECT_EQ(s.solutions.size(), 2u);
}

TEST(Oracle, CycleOfFive) {
  const SolutionSet s = brute_force_minimal_completions(cycle(5));
  ASSERT_EQ(s.solutions.size(), 5u);
  for (const Completion& f : s.solutions) EXPECT_EQ(f.size(), 2u);
}

TEST(Oracle, CyclesFollowCatalanNumbers) {
  // Triangulations of a convex k-gon: Catalan(k - 2).
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (int k = 4; k <= 7; ++k) {
    EXPECT_EQ(brute_force_minimal_completions(cycle(k)).solutions.size(), catalan[k - 2]) << "C" << k;
  }
}

TEST(Oracle, ChordalGraphHasOnlyTheEmptyCompletion) {
  const Graph g = testing::complete(5);
  const SolutionSet s = brute_force_minimal_completions(g);
  EXPECT_EQ(s.solutions, std::vector<Completion>{Completion::empty(g)});
  const Graph tree = testing::path(7);
  EXPECT_EQ(brute_force_minimal_completions(tree).solutions, std::vector<Completion>{Completion::empty(tree)});
}

TEST(Oracle, RefusesLargeUniverseNamingTheLimit) {
  const Graph g = cycle(8);  // 20 non-edges
  EXPECT_NO_THROW(brute_force_minimal_completions(g, 20));
  try {
    brute_force_minimal_completions(g, 19);
    FAIL() << "oracle accepted a universe above its limit";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("19"), std::string::npos) << e.what();
  }
  EXPECT_THROW(brute_force_minimal_completions(cycle(11), 1000), InputError);  // 44 > 40
}

TEST(Oracle, MembersAreMinimalChordalAndAntichain) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.4);
    const auto solutions = brute_force_minimal_completions(g).solutions;
    ASSERT_FALSE(solutions.empty());
    for (const Completion& f : solutions) {
      ASSERT_TRUE(testing::chordal_by_subsets(f.to_graph()));
      const reference::PairSet fs = reference::to_set(f);
      ASSERT_TRUE(reference::candidates(g, fs, fs).empty());
      for (const Completion& h : solutions) {
        if (!(f == h)) {
          ASSERT_FALSE((f.fill() & ~h.fill()).none()) << f << " inside " << h;
        }
      }
    }
  }
}

TEST(Oracle, DeterministicAcrossCalls) {
  const Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
  EXPECT_EQ(brute_force_minimal_completions(g).solutions, brute_force_minimal_completions(g).solutions);
}

TEST(Verify, IdenticalSetsGiveAnEmptyReport) {
  const Graph c5 = cycle(5);
  const SolutionSet oracle = brute_force_minimal_completions(c5);
  SolutionSet reversed{{oracle.solutions.rbegin(), oracle.solutions.rend()}, SolutionSource::kReverseSearch};
  const VerificationReport r = verify_solution_set(c5, reversed, oracle);
  EXPECT_TRUE(r.ok());
  std::ostringstream os;
  os << r;
  EXPECT_EQ(os.str(), "ok\n");
}

TEST(Verify, NamesAMissingSolution) {
  const Graph c5 = cycle(5);
  const SolutionSet oracle = brute_force_minimal_completions(c5);
  SolutionSet produced = oracle;
  const Completion dropped = produced.solutions.back();
  produced.solutions.pop_back();
  const VerificationReport r = verify_solution_set(c5, produced, oracle);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.missing, std::vector<Completion>{dropped});
  EXPECT_TRUE(r.extra.empty());
  std::ostringstream os;
  os << r;
  std::ostringstream expected;
  expected << "missing: " << dropped << '\n';
  EXPECT_EQ(os.str(), expected.str());
}

TEST(Verify, FlagsNonMinimalCompletion) {
  const Graph c4 = cycle(4);
  const SolutionSet oracle = brute_force_minimal_completions(c4);
  SolutionSet produced = oracle;
  produced.solutions.push_back(Completion::full(c4));
  const VerificationReport r = verify_solution_set(c4, produced, oracle);
  EXPECT_EQ(r.non_minimal, std::vector<Completion>{Completion::full(c4)});
  EXPECT_EQ(r.extra, std::vector<Completion>{Completion::full(c4)});
  EXPECT_TRUE(r.non_chordal.empty());
  EXPECT_TRUE(r.missing.empty());
}

TEST(Verify, FlagsNonChordalAndDuplicates) {
  const Graph c4 = cycle(4);
  const SolutionSet oracle = brute_force_minimal_completions(c4);
  SolutionSet produced = oracle;
  produced.solutions.push_back(Completion::empty(c4));
  produced.solutions.push_back(oracle.solutions.front());
  const VerificationReport r = verify_solution_set(c4, produced, oracle);
  EXPECT_EQ(r.non_chordal, std::vector<Completion>{Completion::empty(c4)});
  EXPECT_EQ(r.duplicates, std::vector<Completion>{oracle.solutions.front()});
  EXPECT_FALSE(r.ok());
}

TEST(Verify, RejectsCompletionsOfAnotherGraph) {
  const Graph a = cycle(4);
  const Graph b = cycle(4);
  const SolutionSet sa = brute_force_minimal_completions(a);
  EXPECT_THROW(verify_solution_set(b, sa, brute_force_minimal_completions(b)), InputError);
}

TEST(SolutionSourceNames, Stable) {
  EXPECT_EQ(to_string(SolutionSource::kOracle), "oracle");
  EXPECT_EQ(to_string(SolutionSource::kReverseSearch), "reverse_search");
  EXPECT_EQ(to_string(SolutionSource::kVisitedSet), "visited_set");
}

}  // namespace
}  // namespace chordenum
