// catenary: classify complete local rings K[[x]]/I from a small script.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "catenary/error.hpp"
#include "catenary/report.hpp"
#include "catenary/script.hpp"

namespace {

enum Exit { ok = 0, usage = 1, unsupported = 2, resource = 3, internal = 4 };

int exit_code(catenary::ErrorKind kind) {
  using catenary::ErrorKind;
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::parameter:
    case ErrorKind::context:
      return usage;
    case ErrorKind::unsupported_input:
    case ErrorKind::degenerate_input:
    case ErrorKind::undefined_dimension:
    case ErrorKind::infeasible:
      return unsupported;
    case ErrorKind::resource:
      return resource;
    case ErrorKind::internal:
      return internal;
  }
  return internal;
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify complete local rings K[[x_1..x_v]]/I for catenarity of the ring and of its completions."};
  app.footer(
      "Exit codes: 0 ok, 1 parse or argument error, 2 unsupported or degenerate input,\n"
      "3 resource budget exceeded, 4 internal error.");

  std::string file;
  std::string script_text;
  std::string format_name = "text";
  std::string order_name = "grevlex";
  catenary::Budget budget;

  app.add_option("file", file, "Script file ('-' or omitted: standard input)");
  app.add_option("-c,--command", script_text, "Script text given inline")->excludes("file");
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--order", order_name, "Term order for declared rings")
      ->check(CLI::IsMember({"grevlex", "lex"}))
      ->capture_default_str();
  app.add_option("--budget-gb-steps", budget.gb_steps,
                 "Reduction steps allowed per Groebner basis")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget-regular-candidates", budget.regular_candidates,
                 "Candidates tried in regular element searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-poset-vars", budget.max_poset_vars,
                 "Largest variable count for which the prime poset is built")
      ->check(CLI::Range(std::size_t{1}, catenary::MonomialPrime::max_vars))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  std::string text;
  if (!script_text.empty()) {
    text = script_text;
  } else if (file.empty() || file == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "catenary: cannot read " << file << "\n";
      return usage;
    }
    text = read_all(in);
  }

  const auto format = *catenary::parse_format(format_name);
  const auto order =
      order_name == "lex" ? catenary::MonomialOrder::lex() : catenary::MonomialOrder::grevlex();

  std::vector<catenary::CommandResult> results;
  int code = ok;
  try {
    catenary::Script script = catenary::parse(text, order);
    for (const auto* command : script.commands()) {
      results.push_back(catenary::execute(*command, budget));
    }
  } catch (const catenary::ParseError& e) {
    std::cerr << (file.empty() ? "<input>" : file) << ":" << e.what() << "\n";
    code = usage;
  } catch (const catenary::Error& e) {
    std::cerr << "catenary: " << catenary::to_string(e.kind()) << ": " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "catenary: internal error: " << e.what() << "\n";
    code = internal;
  }

  if (!results.empty()) {
    try {
      std::cout << catenary::emit(results, format);
    } catch (const catenary::Error& e) {
      std::cerr << "catenary: " << catenary::to_string(e.kind()) << ": " << e.what() << "\n";
      if (code == ok) code = exit_code(e.kind());
    }
  }
  return code;
}
