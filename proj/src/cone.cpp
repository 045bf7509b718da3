#include "lorder/cone.hpp"

#include <algorithm>

namespace lorder {

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::bfs:
      return "bfs";
    case SearchMode::verify:
      return "verify";
    case SearchMode::construct:
      return "construct";
  }
  return "?";
}

std::optional<SearchMode> parse_search_mode(std::string_view text) {
  if (text == "bfs") return SearchMode::bfs;
  if (text == "verify") return SearchMode::verify;
  if (text == "construct") return SearchMode::construct;
  return std::nullopt;
}

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::found:
      return "found";
    case RowStatus::verified:
      return "verified";
    case RowStatus::exhausted:
      return "exhausted";
    case RowStatus::missing:
      return "missing";
    case RowStatus::rejected:
      return "rejected";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::not_left_orderable:
      return "NOT-LEFT-ORDERABLE";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
    case Verdict::checks_only:
      return "CHECKS-ONLY";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "NOT-LEFT-ORDERABLE") return Verdict::not_left_orderable;
  if (text == "INCONCLUSIVE") return Verdict::inconclusive;
  if (text == "CHECKS-ONLY") return Verdict::checks_only;
  return std::nullopt;
}

std::size_t ConeReport::witnessed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ConeRow& r) { return r.has_witness(); }));
}

std::size_t ConeReport::rejected() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ConeRow& r) { return r.status == RowStatus::rejected; }));
}

Verdict ConeReport::verdict() const {
  return !rows.empty() && witnessed() == rows.size() ? Verdict::not_left_orderable : Verdict::inconclusive;
}

SignVector assignment(std::size_t index, std::size_t k) {
  SignVector signs(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    if ((index >> (k - 1 - i)) & 1U) signs[i] = -1;
  }
  return signs;
}

std::string format_signs(std::span<const int> signs) {
  std::string out;
  for (int s : signs) {
    if (!out.empty()) out += ' ';
    out += s > 0 ? '+' : '-';
  }
  return out;
}

std::optional<IndexSequence> PairingConstructor::operator()(std::span<const int> signs) const {
  auto subset_for = [&](const std::vector<int>& index) {
    std::vector<SignedGen> subset;
    for (std::size_t g = 0; g < index.size(); ++g) {
      if (index[g] >= 0) subset.push_back({static_cast<int>(g), signs[static_cast<std::size_t>(index[g])]});
    }
    return subset;
  };
  const auto conj_subset = subset_for(conj_index);
  const auto base_subset = subset_for(base_index);
  auto spell = [](const Word& w, const std::vector<int>& index, IndexSequence& out) {
    for (const auto& s : w.syllables()) {
      const auto count = s.exp > 0 ? s.exp : -s.exp;
      for (std::int64_t c = 0; c < count; ++c) out.push_back(static_cast<std::size_t>(index[static_cast<std::size_t>(s.gen)]));
    }
  };
  for (std::size_t j = 0; j < a_words.size() && j < b_words.size(); ++j) {
    for (int e : {1, -1}) {
      const Word a = a_words[j].pow(e);
      const Word b = b_words[j].pow(-e);
      if (!is_positive_word(a, conj_subset) || !is_positive_word(b, base_subset)) continue;
      IndexSequence witness;
      spell(a, conj_index, witness);
      spell(b, base_index, witness);
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace lorder
