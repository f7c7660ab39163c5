#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fantor/cli.hpp"
#include "fantor/corpus.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Regular toric fans: flatness of equivariant K-theory and Tor over the representation ring"};
  app.require_subcommand(1, 1);

  std::string fan_path;
  std::string example;
  fantor::cli::Options opts;

  for (const auto& name : fantor::cli::commands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_flag("--json", opts.json, "structured output");
    if (name == "selftest") continue;
    auto* file = sub->add_option("fan", fan_path, "fan file (JSON)");
    auto* ex = sub->add_option("--example", example, "use a bundled fan instead of a file");
    file->excludes(ex);
    if (name == "higher-tor") sub->add_option("--kq", opts.kq, "coefficient group, e.g. \"Z^2 + Z/3\"")->required();
    if (name == "blowup" || name == "orbit")
      sub->add_option("--cone", opts.cone, "cone by ray vectors, e.g. \"1,0;0,1\"")->required();
    if (name == "homology" || name == "links") sub->add_option("--coeff", opts.coeff, "coefficient group (default Z)");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  fantor::cli::RunResult result;
  try {
    if (command == "selftest") {
      result = fantor::cli::run(command, std::nullopt, opts);
    } else if (!example.empty()) {
      result = fantor::cli::run(command, fantor::corpus::by_name(example), opts);
    } else if (!fan_path.empty()) {
      std::ifstream in(fan_path);
      if (!in) {
        std::cerr << "error: cannot read " << fan_path << "\n";
        return 1;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      result = fantor::cli::run_on_text(command, buf.str(), opts);
    } else {
      result = fantor::cli::run(command, std::nullopt, opts);
    }
  } catch (const fantor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << result.output;
  return result.exit_code;
}
