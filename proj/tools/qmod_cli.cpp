// qmod: command-line front end. Exit status 0 on success, 1 on a domain
// error, 2 on a parse error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qmod/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw qmod::Error(qmod::ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modules over path algebras: skeleta, charts, stability, degenerations, moduli verdicts"};
  std::string command, input, field, candidates;
  std::uint64_t seed = 1, max_sweep = 1u << 16;
  bool as_json = false, render = false;
  if (const char* env = std::getenv("QMOD_SEED")) seed = std::strtoull(env, nullptr, 10);

  app.add_option("command", command, "algebra-info | skeleta | chart | point | orbit | stability | stable-factors | "
                                     "maxdeg-test | limit | moduli-report")
      ->required()
      ->check(CLI::IsMember(qmod::command_names()));
  app.add_option("input", input, "input document ('-' for stdin)")->required();
  app.add_option("--field", field, "ground field: Q or F<p> (overrides the document)");
  app.add_option("--seed", seed, "seed for randomized subroutines");
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_option("--max-sweep", max_sweep, "budget for finite-field enumerations");
  app.add_option("--candidates", candidates, "file with point blocks to test");
  app.add_flag("--render", render, "print the canonical form of the input and exit");
  CLI11_PARSE(app, argc, argv);

  qmod::InputDocument doc;
  try {
    doc = qmod::parse_input(slurp(input));
    if (render) {
      std::cout << qmod::render_document(doc);
      return 0;
    }
    qmod::CommandOptions opts;
    opts.field = field;
    opts.seed = seed;
    opts.max_sweep = max_sweep;
    if (!candidates.empty()) {
      opts.candidates = qmod::parse_candidates(doc, slurp(candidates));
      opts.have_candidates = true;
    }
    const auto report = qmod::run_command(doc, command, opts);
    std::cout << (as_json ? qmod::render_json(report) : qmod::render_text(report));
    return 0;
  } catch (const qmod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_parse_error() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
