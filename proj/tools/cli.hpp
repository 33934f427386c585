#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordenum/completion.hpp"
#include "chordenum/graph.hpp"
#include "chordenum/oracle.hpp"

namespace chordenum::cli {

enum class Command { kEnumerate, kCount, kVerify, kBench };
enum class InputFormat { kEdgeList, kDimacs };
enum class Mode { kReverseSearch, kVisitedSet };
enum class OutputFormat { kEdges, kJsonLines };

enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitInputError = 2 };

struct RunConfig {
  Command command = Command::kEnumerate;
  std::string input_path = "-";  // "-" reads the supplied input stream
  InputFormat input_format = InputFormat::kEdgeList;
  Mode mode = Mode::kReverseSearch;
  std::optional<std::size_t> limit;  // >= 1 when present
  OutputFormat format = OutputFormat::kEdges;
  bool stats = false;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

// A parsed graph and the original label of every dense vertex id.
struct ParsedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

// edge_list: "u v" per line, '#' starts a comment, blank lines ignored;
// vertices are numbered densely in order of first appearance.
// dimacs: "p edge n m" then m lines "e u v" with 1-based vertices; "c" lines
// are comments.
// Throws InputError whose message starts with "line N:" for malformed lines.
ParsedGraph parse_graph_input(std::istream& in, InputFormat format);
ParsedGraph parse_graph_input(std::string_view text, InputFormat format);

// One output line for a solution, without the newline. The edges format is
// "a-b,c-d" in ground-set order with original labels, "-" when empty.
std::string format_solution(const Completion& f, std::span<const std::string> labels, OutputFormat format);

struct DelayProfile {
  std::size_t samples = 0;
  double min = 0;
  double median = 0;
  double max = 0;
  double first_decile_max = 0;
  double last_decile_max = 0;
  double decile_ratio = 0;  // last_decile_max / first_decile_max
};

// Summary of inter-emission gaps; deciles cover ceil(10%) of the samples.
DelayProfile summarize_delays(std::span<const double> gaps);

// Executes one command. `in` is used when input_path is "-". Returns the
// process exit code.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chordenum::cli
