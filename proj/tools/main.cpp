#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace chordenum::cli;

  CLI::App app{"Enumerate the minimal chordal completions (minimal triangulations) of a graph."};
  app.require_subcommand(1);

  RunConfig config;

  const std::map<std::string, Mode> modes{{"reverse_search", Mode::kReverseSearch}, {"visited_set", Mode::kVisitedSet}};
  const std::map<std::string, OutputFormat> formats{{"edges", OutputFormat::kEdges},
                                                    {"jsonlines", OutputFormat::kJsonLines}};
  const std::map<std::string, InputFormat> inputs{{"edge_list", InputFormat::kEdgeList}, {"dimacs", InputFormat::kDimacs}};

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", config.input_path, "Graph file, or - for stdin")->capture_default_str();
    sub->add_option("--input-format", config.input_format, "edge_list or dimacs")
        ->transform(CLI::CheckedTransformer(inputs, CLI::ignore_case));
    sub->add_option("--mode", config.mode, "reverse_search or visited_set")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    sub->add_option("--limit", config.limit, "Stop after this many solutions (at least 1)");
    sub->add_option("--format", config.format, "edges or jsonlines")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--stats", config.stats, "Print traversal counters to stderr");
    sub->add_option("--oracle-limit", config.oracle_limit, "Largest non-edge count checked by the brute-force oracle")
        ->capture_default_str();
  };

  const std::pair<const char*, Command> commands[] = {
      {"enumerate", Command::kEnumerate}, {"count", Command::kCount}, {"verify", Command::kVerify}, {"bench", Command::kBench}};
  const char* help[] = {"Print one minimal completion per line", "Print the number of minimal completions",
                        "Cross-check both traversal modes and the brute-force oracle",
                        "Measure inter-emission delays and retained-solution counters"};
  for (std::size_t i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
    add_common(sub);
    const Command command = commands[i].second;
    sub->callback([&config, command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }
  return run(config, std::cin, std::cout, std::cerr);
}
