#pragma once

// Subgroup graphs of finitely generated subgroups of free groups.
//
// Every edge carries, besides its generator label, a word over the symbols
// U1..Uk naming the original subgroup generators. Folding maintains the
// invariant  eval(lambda(e)) = pi(from) * label(e) * pi(to)^-1  for a vertex
// potential pi with pi(base) = 1, so the lambda-product along any closed
// path at the base evaluates to the path's label. That is what `express`
// reads off.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lorder/word.hpp"

namespace lorder {

class SubgroupGraph {
 public:
  struct Edge {
    int from = 0;
    int to = 0;
    int gen = 0;
    Word provenance;
  };

  /// Folds the bouquet of `generators` into a core graph. Throws
  /// InvalidArgument on an identity generator or an empty list, and
  /// MismatchError when the words use different alphabets.
  static SubgroupGraph build(std::span<const Word> generators);

  std::int64_t rank() const;
  bool contains(const Word& w) const;

  /// A word over U1..Uk whose substitution by the generators reduces to `w`.
  /// Throws NotAMember when `w` is outside the subgroup.
  Word express(const Word& w) const;

  /// Substitutes the original generators into a word over U1..Uk.
  Word evaluate(const Word& coords) const;

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const AlphabetPtr& symbol_alphabet() const { return symbols_; }
  const std::vector<Word>& generators() const { return generators_; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int base() const { return 0; }

  /// True when no vertex has two outgoing or two incoming edges sharing a label.
  bool is_folded() const;

 private:
  struct Step {
    int edge;
    bool forward;
    int target;
  };

  std::optional<Step> step(int vertex, int gen, int sign) const;
  std::optional<std::pair<int, Word>> trace(const Word& w) const;

  AlphabetPtr alphabet_;
  AlphabetPtr symbols_;
  std::vector<Word> generators_;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  // Per vertex: out_[v][gen] / in_[v][gen] hold an edge index or -1.
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

}  // namespace lorder
