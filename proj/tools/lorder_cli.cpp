// lorder: word problems, subgroup foldings and positive-cone refutations.

#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "lorder/claims.hpp"
#include "lorder/gamma.hpp"
#include "lorder/scenario.hpp"
#include "lorder/stallings.hpp"

using namespace lorder;

namespace {

ReportFormat format_of(const std::string& s) { return s == "json" ? ReportFormat::json : ReportFormat::text; }

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

int cmd_fold(const std::vector<std::string>& alphabet, const std::vector<std::string>& gens,
             const std::string& queries_path) {
  const auto alpha = Alphabet::make(alphabet);
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(Word::parse(alpha, g));
  const SubgroupGraph graph = SubgroupGraph::build(words);
  std::cout << "vertices " << graph.vertex_count() << "\n";
  std::cout << "edges " << graph.edges().size() << "\n";
  std::cout << "rank " << graph.rank() << "\n";
  if (queries_path.empty()) return 0;
  std::ifstream in(queries_path);
  if (!in) throw ParseError("cannot open query file '" + queries_path + "'");
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    Word w(alpha);
    try {
      w = Word::parse(alpha, line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, std::max(1, e.column()));
    }
    std::cout << w.str() << " : ";
    if (graph.contains(w)) {
      std::cout << "member " << graph.express(w).str() << "\n";
    } else {
      std::cout << "not a member\n";
    }
  }
  return 0;
}

std::map<std::string, Scenario (*)()> builtin_scenarios() {
  return {
      {"free-hnn", [] { return free_hnn_scenario(); }},
      {"free-hnn-tampered", [] { return tampered_free_hnn_scenario(); }},
      {"gamma-hnn", [] { return gamma_hnn_scenario(12); }},
      {"polycyclic-gamma", [] { return gamma_example_scenario(); }},
      {"klein-bottle", [] { return klein_bottle_scenario(); }},
      {"bs12", [] { return bs12_scenario(); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problems, subgroup foldings and positive-cone refutations"};
  app.require_subcommand(1);

  std::vector<std::string> alphabet{"a", "b"};
  std::vector<std::string> gens;
  std::string queries;
  auto* fold = app.add_subcommand("fold", "Fold a finitely generated subgroup of a free group");
  fold->add_option("--alphabet", alphabet, "generator names")->delimiter(',');
  fold->add_option("--gen", gens, "subgroup generator word (repeatable)")->required();
  fold->add_option("--queries", queries, "file with one word per line to test for membership");

  auto* gamma = app.add_subcommand("gamma", "Arithmetic in Gamma_n = <s, x>");
  gamma->require_subcommand(1);
  int n = 12;
  std::string w1, w2;
  auto* canon = gamma->add_subcommand("canon", "Canonical form (shift; p_0..p_n-1) of a word");
  canon->add_option("n", n)->required()->check(CLI::Range(2, 1 << 20));
  canon->add_option("word", w1)->required();
  auto* cmp = gamma->add_subcommand("cmp", "Compare two words in the left order");
  cmp->add_option("n", n)->required()->check(CLI::Range(2, 1 << 20));
  cmp->add_option("w1", w1)->required();
  cmp->add_option("w2", w2)->required();

  std::string path, format = "text";
  std::optional<int> depth;
  unsigned threads = default_threads();
  std::uint64_t seed = 1;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", path)->required();
  run->add_option("--depth", depth, "override the search depth")->check(CLI::PositiveNumber);
  run->add_option("--threads", threads)->check(CLI::PositiveNumber);
  run->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  run->add_option("--seed", seed, "accepted for symmetry; scenario runs are not randomised");

  int claim_n = 12;
  int claim_depth = 6;
  auto* verify = app.add_subcommand("verify-paper", "Run the full claim regression suite");
  verify->add_option("--n", claim_n, "modulus for Gamma_n")->check(CLI::Range(12, 64));
  verify->add_option("--depth", claim_depth, "search depth for the cone searches")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed);

  std::string builtin;
  auto* emit = app.add_subcommand("scenario", "Print a built-in scenario in file form");
  emit->add_option("name", builtin)->required()->check(CLI::IsMember({"free-hnn", "free-hnn-tampered", "gamma-hnn",
                                                                      "polycyclic-gamma", "klein-bottle", "bs12"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*fold) return cmd_fold(alphabet, gens, queries);
    if (*canon) {
      std::cout << gamma_eval(n, Word::parse(gamma_alphabet(), w1)).str() << "\n";
      return 0;
    }
    if (*cmp) {
      const auto a = gamma_eval(n, Word::parse(gamma_alphabet(), w1));
      const auto b = gamma_eval(n, Word::parse(gamma_alphabet(), w2));
      const auto c = gamma_compare(a, b);
      std::cout << (c < 0 ? "<" : c > 0 ? ">" : "=") << "\n";
      return 0;
    }
    if (*run) {
      const Scenario sc = load_scenario(path);
      const Report report = run_scenario(sc, {.depth = depth, .threads = threads});
      std::cout << render(report, format_of(format));
      return exit_code(report);
    }
    if (*verify) {
      Report report = verify_claims({.n = claim_n, .seed = seed, .threads = threads, .depth = claim_depth});
      std::cout << render(report, format_of(format));
      return report.all_passed() ? 0 : 1;
    }
    if (*emit) {
      std::cout << to_text(builtin_scenarios().at(builtin)());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
