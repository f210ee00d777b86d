// Command-line front end: invariants of virtual and twisted link
// diagrams, double covering diagrams, comparisons, and randomized
// self-checks. Exit status: 0 success, 1 usage or parse error,
// 2 semantic or validation error.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistlink/covering.hpp"
#include "twistlink/diagram.hpp"
#include "twistlink/invariant.hpp"
#include "twistlink/laurent.hpp"
#include "twistlink/moves.hpp"
#include "twistlink/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;

struct CliFailure {
  int code;
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kExitUsage, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

twistlink::TwistedDiagram load_diagram(const std::string& path) {
  try {
    return twistlink::parse_diagram(slurp(path));
  } catch (const twistlink::DiagramParseError& e) {
    throw CliFailure{kExitUsage, path + ": " + e.what()};
  } catch (const twistlink::SemanticError& e) {
    throw CliFailure{kExitSemantic, path + ": " + e.what()};
  }
}

struct ComputeOptions {
  std::vector<std::string> files;
  bool raw = false;
  bool canonical = false;
  bool virtual_invariant = false;
};

struct ComputedLine {
  std::string text;
  std::vector<std::string> warnings;
};

ComputedLine compute_one(const ComputeOptions& opt, const std::string& path) {
  twistlink::TwistedDiagram d = load_diagram(path);
  ComputedLine out;
  twistlink::InvariantValue value;
  try {
    value = opt.virtual_invariant ? twistlink::jkss(d, &out.warnings)
                                  : twistlink::twisted_jkss(d, &out.warnings);
  } catch (const twistlink::SemanticError& e) {
    throw CliFailure{kExitSemantic, path + ": " + e.what()};
  }
  out.text = twistlink::render_poly(opt.raw ? value.raw : value.canonical);
  return out;
}

int run_compute(const ComputeOptions& opt) {
  std::vector<std::string> files = opt.files;
  if (files.empty()) files.push_back("-");

  std::vector<ComputedLine> lines(files.size());
  if (files.size() == 1) {
    lines[0] = compute_one(opt, files[0]);
  } else {
    // Independent diagrams may be evaluated concurrently; output order
    // still follows the input order.
    std::vector<std::future<ComputedLine>> futures;
    futures.reserve(files.size());
    for (const auto& f : files)
      futures.push_back(std::async(std::launch::async, compute_one, opt, f));
    for (std::size_t i = 0; i < futures.size(); ++i) lines[i] = futures[i].get();
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (const auto& w : lines[i].warnings) {
      std::cerr << "warning: ";
      if (files.size() > 1) std::cerr << files[i] << ": ";
      std::cerr << w << "\n";
    }
    std::cout << lines[i].text << "\n";
  }
  return kExitOk;
}

int run_cover(const std::string& file, const std::string& output) {
  twistlink::TwistedDiagram d = load_diagram(file);
  std::string text = twistlink::render_diagram(twistlink::double_cover(d));
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw CliFailure{kExitUsage, "cannot write '" + output + "'"};
    out << text;
  }
  return kExitOk;
}

int run_compare(const std::string& file1, const std::string& file2) {
  twistlink::TwistedDiagram d1 = load_diagram(file1);
  twistlink::TwistedDiagram d2 = load_diagram(file2);
  twistlink::LaurentPoly v1 = twistlink::twisted_jkss(d1).canonical;
  twistlink::LaurentPoly v2 = twistlink::twisted_jkss(d2).canonical;
  std::cout << (v1 == v2 ? "EQUAL_UP_TO_X_POWER" : "DISTINCT") << "\n";
  return kExitOk;
}

int run_random(int crossings, int bars, std::uint64_t seed) {
  std::cout << twistlink::render_diagram(
      twistlink::random_diagram(crossings, bars, seed));
  return kExitOk;
}

int run_walk(const std::string& file, int steps, std::uint64_t seed) {
  twistlink::TwistedDiagram d = load_diagram(file);
  std::cout << twistlink::render_diagram(twistlink::random_walk(d, steps, seed));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant invariants of virtual and twisted link diagrams"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  auto* compute = app.add_subcommand(
      "compute", "Print the twisted invariant of each diagram (stdin if no "
                 "file is given)");
  compute->add_option("files", compute_opt.files, "diagram files ('-' = stdin)");
  compute->add_flag("--raw", compute_opt.raw, "print the raw value");
  compute->add_flag("--canonical", compute_opt.canonical,
                    "print the canonical value (default)");
  compute->add_flag("--virtual", compute_opt.virtual_invariant,
                    "compute the virtual invariant (bar-free diagrams)");

  std::string cover_file, cover_output;
  auto* cover =
      app.add_subcommand("cover", "Write the double covering diagram");
  cover->add_option("file", cover_file, "diagram file ('-' = stdin)");
  cover->add_option("-o,--output", cover_output, "output file (default stdout)");

  std::string cmp1, cmp2;
  auto* compare = app.add_subcommand(
      "compare", "Compare canonical twisted invariants of two diagrams");
  compare->add_option("file1", cmp1)->required();
  compare->add_option("file2", cmp2)->required();

  int rnd_crossings = 0, rnd_bars = 0;
  std::uint64_t rnd_seed = 0;
  auto* random = app.add_subcommand("random", "Generate a random diagram");
  random->add_option("--crossings", rnd_crossings, "number of crossings")
      ->required();
  random->add_option("--bars", rnd_bars, "number of bars");
  random->add_option("--seed", rnd_seed, "random seed");

  std::string walk_file;
  int walk_steps = 0;
  std::uint64_t walk_seed = 0;
  auto* walk = app.add_subcommand(
      "walk", "Rewrite a diagram by a random sequence of moves");
  walk->add_option("file", walk_file, "diagram file ('-' = stdin)");
  walk->add_option("--steps", walk_steps, "number of moves")->required();
  walk->add_option("--seed", walk_seed, "random seed");

  twistlink::SelftestOptions selftest_opt;
  auto* selftest =
      app.add_subcommand("selftest", "Run the randomized property suite");
  selftest->add_option("--seed", selftest_opt.seed, "random seed");
  selftest->add_option("--count", selftest_opt.count, "cases per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (compute_opt.raw && compute_opt.canonical)
        throw CliFailure{kExitUsage, "--raw and --canonical are exclusive"};
      return run_compute(compute_opt);
    }
    if (cover->parsed())
      return run_cover(cover_file.empty() ? "-" : cover_file, cover_output);
    if (compare->parsed()) return run_compare(cmp1, cmp2);
    if (random->parsed()) return run_random(rnd_crossings, rnd_bars, rnd_seed);
    if (walk->parsed())
      return run_walk(walk_file.empty() ? "-" : walk_file, walk_steps,
                      walk_seed);
    if (selftest->parsed()) {
      int failures = twistlink::run_selftest(selftest_opt, std::cout);
      return failures == 0 ? kExitOk : kExitSemantic;
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const twistlink::DiagramParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const twistlink::PolyParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const twistlink::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
