// Command line front end: check, unfold, cutelim, translate, render, search, corpus.
// Exit codes: 0 success, 1 logical failure, 2 malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cotrans/calculus.hpp"
#include "cotrans/grz/cut.hpp"
#include "cotrans/grz/io.hpp"
#include "cotrans/oracle.hpp"
#include "cotrans/translate.hpp"

namespace fs = std::filesystem;
using namespace cotrans;
using namespace cotrans::grz;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kMalformed = 2;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::SyntaxError, "cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

GraphFile load(const std::string& path) { return parse_graph_file(read_input(path)); }

const Calculus<Sequent>& calculus_of(const GraphFile& f) {
  const auto* c = calculus_named(f.calculus);
  if (!c) throw Error(Errc::SyntaxError, "unknown calculus '" + f.calculus + "'");
  return *c;
}

std::string describe(const Finding& f, const std::vector<std::string>& names) {
  std::string out = "state " + (f.state < names.size() ? names[f.state] : "s" + std::to_string(f.state)) + " node " +
                    to_string(f.violation.node) + " condition " + condition_name(f.violation.condition);
  if (f.violation.child) out += " child " + std::to_string(*f.violation.child);
  return out + "  # " + f.violation.detail;
}

int check_file(const std::string& path, bool quiet) {
  GraphFile f = load(path);
  GraphReport r = check_proof_graph(calculus_of(f), f.graph);
  for (const auto& finding : r.findings) std::cout << describe(finding, f.state_names) << "\n";
  if (!r.ok()) {
    if (quiet) std::cout << "FAIL " << path << "\n";
    return kFail;
  }
  if (quiet)
    std::cout << "ok " << path << "\n";
  else
    std::cout << "ok: " << r.states_checked << " states, conclusion " << to_string(f.graph.conclusion()) << "\n";
  return kOk;
}

// Checks the input against its calculus; prints findings and returns false on failure.
bool require_valid(const GraphFile& f) {
  GraphReport r = check_proof_graph(calculus_of(f), f.graph);
  for (const auto& finding : r.findings) std::cout << describe(finding, f.state_names) << "\n";
  return r.ok();
}

int emit_result(const ExtendResult<Sequent>& result, const Calculus<Sequent>& target, std::size_t depth) {
  GraphReport r = check_expanded(target, result);
  std::vector<std::string> header{std::string("closed: ") + (result.closed() ? "yes" : "no"),
                                  "states: " + std::to_string(result.states())};
  if (result.closed()) {
    header.push_back("cuts: " + std::to_string(count_cuts(result.graph)));
    std::cout << print_graph_file(result.graph, target.name(), header);
  } else {
    header.push_back("open: " + std::to_string(result.open.size()));
    header.push_back("unfolding to depth " + std::to_string(depth));
    for (const auto& h : header) std::cout << "# " << h << "\n";
    auto u = unfold(result.graph.graph(), result.graph.root, UnfoldBudget{depth, 1000000}, &result.open);
    std::cout << print_unfolding(u.tree);
  }
  for (const auto& finding : r.findings) std::cerr << to_string(finding) << "\n";
  return r.ok() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular non-wellfounded proofs: checking, unfolding and cut elimination"};
  app.require_subcommand(1);

  std::string file;
  std::string dir;
  std::size_t depth = 3;
  std::size_t max_states = 200;
  std::size_t height = 8;
  std::string step_name = "cutelim";
  std::string sequent_text;
  bool with_cut = false;
  bool no_memo = false;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t count = 10;

  auto* check = app.add_subcommand("check", "Check a proof graph file against its calculus");
  check->add_option("file", file, "Proof graph file, or - for standard input");
  check->add_option("--all", dir, "Check every .proof file in a directory");

  auto* unfold_cmd = app.add_subcommand("unfold", "Print the unfolding of a proof graph to a fragment depth");
  unfold_cmd->add_option("file", file)->required();
  unfold_cmd->add_option("--depth", depth, "Fragments along each root-path")->check(CLI::PositiveNumber);

  auto* cutelim = app.add_subcommand("cutelim", "Eliminate cuts from a grz+cut proof");
  cutelim->add_option("file", file)->required();
  cutelim->add_option("--max-states", max_states, "Expanded states before giving up on closure")->check(CLI::PositiveNumber);
  cutelim->add_option("--depth", depth, "Unfolding depth printed when the output does not close")->check(CLI::PositiveNumber);
  cutelim->add_flag("--no-memo", no_memo, "Do not identify bisimilar successor proofs");

  auto* translate = app.add_subcommand("translate", "Run a translation step corecursively");
  translate->add_option("file", file)->required();
  translate->add_option("--step", step_name, "identity, cutelim or staged")
      ->check(CLI::IsMember({"identity", "cutelim", "staged"}));
  translate->add_option("--max-states", max_states)->check(CLI::PositiveNumber);
  translate->add_option("--depth", depth)->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Render a proof graph");
  render->add_option("file", file)->required();
  render->add_flag("--dot", dot, "Graphviz output (the only format)");

  auto* search_cmd = app.add_subcommand("search", "Search for a proof of a sequent");
  search_cmd->add_option("--sequent", sequent_text, "e.g. \"box p0 |- p0\"")->required();
  search_cmd->add_option("--height", height, "Maximal fragment height")->check(CLI::PositiveNumber);
  search_cmd->add_option("--states", max_states, "Maximal number of states")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--cut", with_cut, "Allow cuts on subformulas");

  auto* corpus = app.add_subcommand("corpus", "Write generated grz+cut proofs to a directory");
  corpus->add_option("--seed", seed);
  corpus->add_option("--count", count);
  corpus->add_option("--out", dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*check) {
      if (!dir.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
          if (entry.path().extension() == ".proof") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        int worst = kOk;
        for (const auto& p : files) {
          int code = kOk;
          try {
            code = check_file(p.string(), true);
          } catch (const Error& e) {
            std::cout << "MALFORMED " << p.string() << ": " << e.what() << "\n";
            code = kMalformed;
          }
          worst = std::max(worst, code);
        }
        return worst;
      }
      if (file.empty()) throw Error(Errc::SyntaxError, "check needs a file or --all DIR");
      return check_file(file, false);
    }

    if (*unfold_cmd) {
      GraphFile f = load(file);
      Graph g = make_graph(restrict_to(f.graph.graph(), f.graph.root), 0);
      auto u = unfold(g.graph(), g.root, UnfoldBudget{depth, 1000000});
      std::cout << print_unfolding(u.tree);
      return kOk;
    }

    if (*cutelim) {
      GraphFile f = load(file);
      if (!require_valid(f)) return kFail;
      ExtendOptions opt;
      opt.max_states = max_states;
      opt.memo = !no_memo;
      if (no_memo) opt.max_depth = depth;
      return emit_result(cut_elim(f.graph, opt), grz_calculus(), depth);
    }

    if (*translate) {
      GraphFile f = load(file);
      if (!require_valid(f)) return kFail;
      const auto& calc = calculus_of(f);
      ExtendOptions opt;
      opt.max_states = max_states;
      if (step_name == "identity") return emit_result(extend(identity_step(calc), f.graph, opt), calc, depth);
      if (step_name == "cutelim") return emit_result(cut_elim(f.graph, opt), grz_calculus(), depth);
      StagedStep<Sequent> staged{identity_step(grz_cut_calculus()), cut_elimination_step(),
                                 [](const Graph&) { return true; }};
      return emit_result(extend_staged(staged, f.graph, opt), grz_cut_calculus(), depth);
    }

    if (*render) {
      GraphFile f = load(file);
      std::cout << render_dot(f.graph);
      return kOk;
    }

    if (*search_cmd) {
      Sequent goal = parse_sequent(sequent_text);
      SearchBudget budget{height, max_states, std::nullopt};
      if (with_cut) budget.cut_formulas = subformula_cuts(goal);
      auto found = search(goal, budget);
      if (!found) {
        std::cout << "not found within budget\n";
        return kFail;
      }
      std::cout << print_graph_file(*found, with_cut ? "grz+cut" : "grz");
      return kOk;
    }

    if (*corpus) {
      fs::create_directories(dir);
      auto graphs = generate_corpus(seed, count);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::string name = "gen_" + std::to_string(seed) + "_" + (i < 10 ? "0" : "") + std::to_string(i) + ".proof";
        std::ofstream out(fs::path(dir) / name);
        out << print_graph_file(graphs[i], "grz+cut", {"generated, seed " + std::to_string(seed) + " index " + std::to_string(i)});
      }
      std::cout << graphs.size() << " files written to " << dir << "\n";
      return graphs.size() == count ? kOk : kFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::BudgetExceeded:
      case Errc::StepContractViolation:
      case Errc::CompatibilityViolation:
      case Errc::MeasureViolation:
        return kFail;
      default:
        return kMalformed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
