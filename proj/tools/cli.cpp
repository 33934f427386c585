#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include <json.hpp>

#include "chordenum/chordal_system.hpp"
#include "chordenum/engine.hpp"
#include "chordenum/errors.hpp"

namespace chordenum::cli {

namespace {

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::optional<long long> to_integer(std::string_view s) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

ParsedGraph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  ParsedGraph parsed;
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(parsed.labels.size()));
    if (inserted) parsed.labels.push_back(label);
    return it->second;
  };

  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail_line(number, "expected two vertex labels, found " + std::to_string(tokens.size()));
    if (tokens[0] == tokens[1]) fail_line(number, "self-loop on vertex " + tokens[0]);
    const Vertex u = intern(tokens[0]);
    const Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  parsed.graph = Graph::build(parsed.labels.size(), edges);
  return parsed;
}

ParsedGraph parse_dimacs(std::istream& in) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (header) fail_line(number, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "edge") fail_line(number, "expected \"p edge <n> <m>\"");
      const auto n = to_integer(tokens[2]);
      const auto m = to_integer(tokens[3]);
      if (!n || !m || *n < 0 || *m < 0) fail_line(number, "vertex and edge counts must be non-negative integers");
      header.emplace(*n, *m);
      continue;
    }
    if (tokens[0] == "e") {
      if (!header) fail_line(number, "edge line before the problem line");
      if (tokens.size() != 3) fail_line(number, "expected \"e <u> <v>\"");
      const auto u = to_integer(tokens[1]);
      const auto v = to_integer(tokens[2]);
      if (!u || !v) fail_line(number, "vertex ids must be integers");
      if (*u < 1 || *v < 1 || *u > header->first || *v > header->first) {
        fail_line(number, "vertex id outside 1.." + std::to_string(header->first));
      }
      if (*u == *v) fail_line(number, "self-loop on vertex " + tokens[1]);
      edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
      continue;
    }
    fail_line(number, "unrecognised line type \"" + tokens[0] + "\"");
  }
  if (!header) throw InputError("missing \"p edge <n> <m>\" problem line");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw InputError("problem line declares " + std::to_string(header->second) + " edges but " +
                     std::to_string(edges.size()) + " edge lines were found");
  }
  ParsedGraph parsed;
  parsed.graph = Graph::build(static_cast<std::size_t>(header->first), edges);
  for (long long i = 1; i <= header->first; ++i) parsed.labels.push_back(std::to_string(i));
  return parsed;
}

nlohmann::json label_json(const std::string& label) {
  if (const auto value = to_integer(label)) return *value;
  return label;
}

// Reads the graph named by the config, reporting failures on `err`.
std::optional<ParsedGraph> load(const RunConfig& config, std::istream& in, std::ostream& err) {
  try {
    if (config.input_path == "-") return parse_graph_input(in, config.input_format);
    std::ifstream file(config.input_path);
    if (!file) {
      err << "error: cannot open " << config.input_path << '\n';
      return std::nullopt;
    }
    return parse_graph_input(file, config.input_format);
  } catch (const InputError& e) {
    err << "error: " << (config.input_path == "-" ? std::string("<stdin>") : config.input_path) << ": " << e.what()
        << '\n';
    return std::nullopt;
  }
}

void print_stats(std::ostream& err, const TraversalStats& stats, double elapsed_ms) {
  err << "solutions: " << stats.emitted << '\n'
      << "peak_retained: " << stats.peak_retained << '\n'
      << "child_scans: " << stats.child_scans << '\n'
      << "parent_recomputations: " << stats.parent_recomputations << '\n'
      << "elapsed_ms: " << elapsed_ms << '\n';
}

template <class Sink>
std::size_t traverse(const ChordalCompletionSystem& sys, Mode mode, Sink&& sink, TraversalStats& stats) {
  if (mode == Mode::kVisitedSet) return enumerate_visited_set(sys, std::forward<Sink>(sink), &stats);
  return enumerate_reverse_search(sys, std::forward<Sink>(sink), &stats);
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int run_enumerate(const RunConfig& config, const ParsedGraph& parsed, std::ostream& out, std::ostream& err) {
  const ChordalCompletionSystem sys(parsed.graph);
  const auto start = std::chrono::steady_clock::now();
  std::size_t written = 0;
  TraversalStats stats;
  traverse(sys, config.mode,
           [&](const Completion& f) {
             if (config.command == Command::kEnumerate) {
               out << format_solution(f, parsed.labels, config.format) << '\n';
               out.flush();
             }
             ++written;
             return !config.limit || written < *config.limit;
           },
           stats);
  if (config.command == Command::kCount) out << written << '\n';
  if (config.stats) print_stats(err, stats, millis_since(start));
  return kExitOk;
}

void print_report(std::ostream& out, const std::string& title, const VerificationReport& report,
                  std::span<const std::string> labels) {
  out << title << ": " << (report.ok() ? "ok" : "FAILED") << '\n';
  const auto section = [&](const char* label, const std::vector<Completion>& items) {
    for (const Completion& f : items) {
      out << "  " << label << ": " << format_solution(f, labels, OutputFormat::kEdges) << '\n';
    }
  };
  section("missing", report.missing);
  section("extra", report.extra);
  section("non-minimal", report.non_minimal);
  section("non-chordal", report.non_chordal);
  section("duplicate", report.duplicates);
}

int run_verify(const RunConfig& config, const ParsedGraph& parsed, std::ostream& out, std::ostream& err) {
  const Graph& g = parsed.graph;
  const ChordalCompletionSystem sys(g);
  const auto start = std::chrono::steady_clock::now();

  SolutionSet reverse{{}, SolutionSource::kReverseSearch};
  TraversalStats reverse_stats;
  enumerate_reverse_search(sys, [&](const Completion& f) { reverse.solutions.push_back(f); }, &reverse_stats);
  SolutionSet visited{{}, SolutionSource::kVisitedSet};
  enumerate_visited_set(sys, [&](const Completion& f) { visited.solutions.push_back(f); });

  out << "reverse_search: " << reverse.solutions.size() << " solutions\n";
  out << "visited_set: " << visited.solutions.size() << " solutions\n";

  bool ok = true;
  const auto check = [&](const SolutionSet& produced, const SolutionSet& reference) {
    const VerificationReport report = verify_solution_set(g, produced, reference);
    print_report(out, to_string(produced.source) + " vs " + to_string(reference.source), report, parsed.labels);
    ok = ok && report.ok();
  };
  check(reverse, visited);
  check(visited, reverse);

  if (g.non_edges().size() <= std::min(config.oracle_limit, kMaxOracleLimit) && g.vertex_count() <= 64) {
    const SolutionSet oracle = brute_force_minimal_completions(g, config.oracle_limit);
    out << "oracle: " << oracle.solutions.size() << " solutions\n";
    check(reverse, oracle);
    check(visited, oracle);
  } else {
    out << "oracle: skipped (" << g.non_edges().size() << " non-edges exceeds limit "
        << std::min(config.oracle_limit, kMaxOracleLimit) << ")\n";
  }
  out << "verification: " << (ok ? "ok" : "FAILED") << '\n';
  if (config.stats) print_stats(err, reverse_stats, millis_since(start));
  return ok ? kExitOk : kExitVerificationFailure;
}

int run_bench(const RunConfig& config, const ParsedGraph& parsed, std::ostream& out) {
  const ChordalCompletionSystem sys(parsed.graph);
  std::vector<double> gaps;
  TraversalStats stats;
  const auto start = std::chrono::steady_clock::now();
  auto last = start;
  traverse(sys, config.mode,
           [&](const Completion&) {
             const auto now = std::chrono::steady_clock::now();
             gaps.push_back(std::chrono::duration<double, std::micro>(now - last).count());
             last = now;
             return !config.limit || gaps.size() < *config.limit;
           },
           stats);
  const double elapsed = millis_since(start);
  const DelayProfile profile = summarize_delays(gaps);

  if (config.format == OutputFormat::kJsonLines) {
    nlohmann::json j{{"mode", config.mode == Mode::kVisitedSet ? "visited_set" : "reverse_search"},
                     {"solutions", stats.emitted},
                     {"delay_us_min", profile.min},
                     {"delay_us_median", profile.median},
                     {"delay_us_max", profile.max},
                     {"first_decile_max_us", profile.first_decile_max},
                     {"last_decile_max_us", profile.last_decile_max},
                     {"decile_ratio", profile.decile_ratio},
                     {"peak_retained", stats.peak_retained},
                     {"child_scans", stats.child_scans},
                     {"parent_recomputations", stats.parent_recomputations},
                     {"elapsed_ms", elapsed}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "mode: " << (config.mode == Mode::kVisitedSet ? "visited_set" : "reverse_search") << '\n'
      << "solutions: " << stats.emitted << '\n'
      << "delay_us_min: " << profile.min << '\n'
      << "delay_us_median: " << profile.median << '\n'
      << "delay_us_max: " << profile.max << '\n'
      << "first_decile_max_us: " << profile.first_decile_max << '\n'
      << "last_decile_max_us: " << profile.last_decile_max << '\n'
      << "decile_ratio: " << profile.decile_ratio << '\n'
      << "peak_retained: " << stats.peak_retained << '\n'
      << "child_scans: " << stats.child_scans << '\n'
      << "parent_recomputations: " << stats.parent_recomputations << '\n'
      << "elapsed_ms: " << elapsed << '\n';
  return kExitOk;
}

}  // namespace

ParsedGraph parse_graph_input(std::istream& in, InputFormat format) {
  return format == InputFormat::kDimacs ? parse_dimacs(in) : parse_edge_list(in);
}

ParsedGraph parse_graph_input(std::string_view text, InputFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph_input(in, format);
}

std::string format_solution(const Completion& f, std::span<const std::string> labels, OutputFormat format) {
  const std::vector<EdgePair> edges = f.edges();
  if (format == OutputFormat::kJsonLines) {
    nlohmann::json fill = nlohmann::json::array();
    for (const EdgePair& e : edges) {
      fill.push_back({label_json(labels[static_cast<std::size_t>(e.u)]), label_json(labels[static_cast<std::size_t>(e.v)])});
    }
    return nlohmann::json{{"fill", fill}}.dump();
  }
  if (edges.empty()) return "-";
  std::string line;
  for (const EdgePair& e : edges) {
    if (!line.empty()) line += ',';
    line += labels[static_cast<std::size_t>(e.u)];
    line += '-';
    line += labels[static_cast<std::size_t>(e.v)];
  }
  return line;
}

DelayProfile summarize_delays(std::span<const double> gaps) {
  DelayProfile p;
  p.samples = gaps.size();
  if (gaps.empty()) return p;
  std::vector<double> sorted(gaps.begin(), gaps.end());
  std::sort(sorted.begin(), sorted.end());
  p.min = sorted.front();
  p.max = sorted.back();
  p.median = sorted[sorted.size() / 2];
  const std::size_t decile = std::max<std::size_t>(1, (gaps.size() + 9) / 10);
  p.first_decile_max = *std::max_element(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(decile));
  p.last_decile_max = *std::max_element(gaps.end() - static_cast<std::ptrdiff_t>(decile), gaps.end());
  p.decile_ratio = p.first_decile_max > 0 ? p.last_decile_max / p.first_decile_max : 0;
  return p;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.limit && *config.limit == 0) {
    err << "error: --limit must be at least 1\n";
    return kExitInputError;
  }
  const auto parsed = load(config, in, err);
  if (!parsed) return kExitInputError;
  switch (config.command) {
    case Command::kEnumerate:
    case Command::kCount:
      return run_enumerate(config, *parsed, out, err);
    case Command::kVerify:
      return run_verify(config, *parsed, out, err);
    case Command::kBench:
      return run_bench(config, *parsed, out);
  }
  return kExitInputError;
}

}  // namespace chordenum::cli
