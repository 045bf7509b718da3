#pragma once

// Scenario files: a base group, optional HNN data, an element list and the
// cone-search request. Line-oriented grammar:
//
//   # comment
//   scenario <name>
//   group free | gamma | polycyclic | hnn-free | hnn-gamma | hnn-cyclic
//   alphabet a b             free, hnn-free, hnn-cyclic (one letter)
//   n 12                     gamma, hnn-gamma
//   A <word>                 subgroup generators; A_i is paired with B_i
//   B <word>
//   element <name> = <word>  HNN words use the stable letter t
//   depth 6
//   mode bfs | verify | construct
//   witness + - + + : 0 2 2 1     indices or element names after ':'
//   expect NOT-LEFT-ORDERABLE | INCONCLUSIVE | CHECKS-ONLY

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorder/cone.hpp"
#include "lorder/report.hpp"

namespace lorder {

enum class GroupKind { free, gamma, polycyclic, hnn_free, hnn_gamma, hnn_cyclic };

std::string to_string(GroupKind kind);
std::optional<GroupKind> parse_group_kind(std::string_view text);

struct Scenario {
  struct Entry {
    std::string text;
    int line = 0;
  };
  struct NamedEntry {
    std::string name;
    std::string text;
    int line = 0;
  };
  struct WitnessEntry {
    SignVector signs;
    std::vector<std::string> product;  // indices or element names
    int line = 0;
  };

  std::string name = "unnamed";
  GroupKind kind = GroupKind::free;
  std::vector<std::string> alphabet;
  int n = 0;
  std::vector<Entry> a_gens;
  std::vector<Entry> b_gens;
  std::vector<NamedEntry> elements;
  int depth = 6;
  SearchMode mode = SearchMode::bfs;
  std::vector<WitnessEntry> witnesses;
  std::optional<Verdict> expect;
};

/// Throws ParseError carrying the offending line and column.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);
std::string to_text(const Scenario& scenario);

struct RunOptions {
  std::optional<int> depth;  // overrides the scenario depth
  unsigned threads = 1;
};

/// Runs group checks and the cone search. Input problems (unparsable words,
/// identity elements, inconsistent declarations) throw ParseError or
/// InvalidArgument.
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Defining relations of Gamma_n and of G, evaluated in normal-form arithmetic.
void add_gamma_relation_checks(int n, Report& report);
void add_polycyclic_relation_checks(Report& report);

/// 0 expected outcome, 1 failed check or rejected witness, 2 INCONCLUSIVE
/// where a refutation was expected.
int exit_code(const Report& report);

inline constexpr int kExitInputError = 3;

}  // namespace lorder
