#pragma once

// Refutation side of the positive-cone criterion for left orders: for a list
// g_1..g_k of nontrivial elements and every sign vector e, look for a product
// g_{i_1}^{e_{i_1}} ... g_{i_L}^{e_{i_L}} equal to the identity. A table with a
// verified witness for every e shows that no left order exists. A row that
// is `exhausted` says nothing about orderability.

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "lorder/groups.hpp"

namespace lorder {

enum class SearchMode { bfs, verify, construct };

enum class RowStatus {
  found,      // breadth-first search produced a witness
  verified,   // a provided or constructed witness replayed to the identity
  exhausted,  // no witness of length <= depth
  missing,    // verify mode without a provided witness
  rejected,   // a provided witness does not multiply to the identity
};

std::string to_string(SearchMode mode);
std::string to_string(RowStatus status);
std::optional<SearchMode> parse_search_mode(std::string_view text);

using SignVector = std::vector<int>;
using IndexSequence = std::vector<std::size_t>;

struct ConeRow {
  SignVector signs;
  RowStatus status = RowStatus::exhausted;
  IndexSequence witness;
  std::string source;  // "bfs", "provided", "constructed"
  bool reported_only = false;

  bool has_witness() const { return status == RowStatus::found || status == RowStatus::verified; }
};

enum class Verdict { not_left_orderable, inconclusive, checks_only };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

struct ConeReport {
  std::vector<std::string> names;
  int depth = 0;
  SearchMode mode = SearchMode::bfs;
  std::vector<ConeRow> rows;

  std::size_t witnessed() const;
  std::size_t rejected() const;
  Verdict verdict() const;
};

/// Sign vector number `index` of 2^k in canonical order: bit k-1-i set means
/// element i is inverted, so index 0 is all-positive.
SignVector assignment(std::size_t index, std::size_t k);

/// "+ - + +"
std::string format_signs(std::span<const int> signs);

using WitnessTable = std::map<SignVector, IndexSequence>;
using Constructor = std::function<std::optional<IndexSequence>(std::span<const int>)>;

template <WordProblemGroup G>
struct ElementList {
  std::vector<typename G::Element> elements;
  std::vector<std::string> names;
};

/// Throws InvalidArgument when the list is empty or holds the identity.
template <WordProblemGroup G>
void validate(const G& group, const ElementList<G>& list) {
  if (list.elements.empty()) throw InvalidArgument("element list must not be empty");
  if (list.names.size() != list.elements.size()) throw InvalidArgument("every element needs a name");
  for (std::size_t i = 0; i < list.elements.size(); ++i) {
    if (group.is_identity(list.elements[i])) {
      throw InvalidArgument("element '" + list.names[i] + "' is the identity");
    }
  }
}

template <WordProblemGroup G>
bool verify_witness(const G& group, const ElementList<G>& list, std::span<const int> signs,
                    std::span<const std::size_t> witness) {
  if (witness.empty() || signs.size() != list.elements.size()) return false;
  auto acc = group.identity();
  for (std::size_t i : witness) {
    if (i >= list.elements.size()) return false;
    const auto& g = list.elements[i];
    acc = group.mul(acc, signs[i] > 0 ? g : group.inv(g));
  }
  return group.is_identity(acc);
}

/// Breadth-first search over semigroup products of length <= depth, pruning
/// states by group.key. Returns a shortest witness.
template <WordProblemGroup G>
std::optional<IndexSequence> bfs_witness(const G& group, const ElementList<G>& list, std::span<const int> signs,
                                         int depth) {
  using Elem = typename G::Element;
  std::vector<Elem> letters;
  for (std::size_t i = 0; i < list.elements.size(); ++i) {
    letters.push_back(signs[i] > 0 ? list.elements[i] : group.inv(list.elements[i]));
  }
  struct Node {
    Elem value;
    std::size_t parent;
    std::size_t letter;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  auto unwind = [&](std::size_t node, std::size_t last) {
    IndexSequence out{last};
    for (std::size_t cur = node; cur != kRoot; cur = nodes[cur].parent) out.push_back(nodes[cur].letter);
    return IndexSequence(out.rbegin(), out.rend());
  };

  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < letters.size() && depth >= 1; ++i) {
    const std::string k = group.key(letters[i]);
    if (seen.emplace(k, nodes.size()).second) {
      frontier.push_back(nodes.size());
      nodes.push_back({letters[i], kRoot, i});
    }
  }
  for (int level = 2; level <= depth; ++level) {
    std::vector<std::size_t> next;
    for (std::size_t node : frontier) {
      for (std::size_t i = 0; i < letters.size(); ++i) {
        Elem value = group.mul(nodes[node].value, letters[i]);
        if (group.is_identity(value)) return unwind(node, i);
        if (level == depth) continue;
        const std::string k = group.key(value);
        if (seen.emplace(k, nodes.size()).second) {
          next.push_back(nodes.size());
          nodes.push_back({std::move(value), node, i});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

struct ConeOptions {
  int depth = 6;
  SearchMode mode = SearchMode::bfs;
  unsigned threads = 1;
  const WitnessTable* provided = nullptr;
  Constructor constructor;
};

template <WordProblemGroup G>
ConeRow evaluate_assignment(const G& group, const ElementList<G>& list, const SignVector& signs,
                            const ConeOptions& opt) {
  ConeRow row;
  row.signs = signs;
  auto try_search = [&] {
    row.source = "bfs";
    if (auto w = bfs_witness(group, list, signs, opt.depth)) {
      row.witness = std::move(*w);
      row.status = verify_witness(group, list, signs, row.witness) ? RowStatus::found : RowStatus::rejected;
    } else {
      row.status = RowStatus::exhausted;
    }
  };
  switch (opt.mode) {
    case SearchMode::bfs:
      try_search();
      break;
    case SearchMode::verify: {
      row.source = "provided";
      const auto it = opt.provided ? opt.provided->find(signs) : WitnessTable::const_iterator{};
      if (!opt.provided || it == opt.provided->end()) {
        row.status = RowStatus::missing;
        break;
      }
      row.witness = it->second;
      row.status = verify_witness(group, list, signs, row.witness) ? RowStatus::verified : RowStatus::rejected;
      break;
    }
    case SearchMode::construct: {
      std::optional<IndexSequence> w;
      if (opt.constructor) w = opt.constructor(signs);
      if (w) {
        row.source = "constructed";
        row.witness = std::move(*w);
        row.status = verify_witness(group, list, signs, row.witness) ? RowStatus::verified : RowStatus::rejected;
      } else {
        row.reported_only = static_cast<bool>(opt.constructor);
        try_search();
      }
      break;
    }
  }
  return row;
}

/// Evaluates all 2^k sign vectors; rows come back in canonical order
/// whatever the thread count.
template <WordProblemGroup G>
ConeReport cone_refute(const G& group, const ElementList<G>& list, const ConeOptions& opt) {
  validate(group, list);
  if (opt.depth < 1) throw InvalidArgument("search depth must be >= 1");
  const std::size_t k = list.elements.size();
  if (k > 20) throw InvalidArgument("at most 20 elements are supported");
  const std::size_t total = std::size_t{1} << k;

  ConeReport report;
  report.names = list.names;
  report.depth = opt.depth;
  report.mode = opt.mode;
  report.rows.resize(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      try {
        report.rows[i] = evaluate_assignment(group, list, assignment(i, k), opt);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

/// Builds witnesses t A_j^e t^-1 * B_j^-e for HNN element lists that contain
/// each base generator g together with its conjugate t g t^-1. A witness is
/// chosen when A_j^e is a positive word in the signs assigned to the
/// conjugates and B_j^-e is a positive word in the signs assigned to the
/// generators themselves; the smallest j, then e = +1, wins.
struct PairingConstructor {
  std::vector<Word> a_words;
  std::vector<Word> b_words;
  // Per base generator: list index of g and of t g t^-1, or -1.
  std::vector<int> base_index;
  std::vector<int> conj_index;

  std::optional<IndexSequence> operator()(std::span<const int> signs) const;
};

}  // namespace lorder
