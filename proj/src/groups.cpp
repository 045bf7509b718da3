#include "lorder/groups.hpp"

#include <map>
#include <mutex>

namespace lorder {

AlphabetPtr symbol_alphabet(std::size_t k) {
  static std::mutex mutex;
  static std::map<std::size_t, AlphabetPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (!slot) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("U" + std::to_string(i));
    slot = Alphabet::make(std::move(names));
  }
  return slot;
}

Word LatticeOracle::coords(const GammaElement& g) const {
  const auto c = basis_.coords(g);
  std::vector<Syllable> raw;
  for (std::size_t i = 0; i < c.size(); ++i) raw.push_back({static_cast<int>(i), c[i]});
  return Word::reduce(symbols_, raw);
}

GammaElement LatticeOracle::evaluate(const Word& coords) const {
  if (coords.alphabet()->size() != basis_.generators().size()) {
    throw MismatchError("coordinate word uses the wrong number of symbols");
  }
  GammaElement out(basis_.n());
  for (const auto& s : coords.syllables()) out = out * basis_.generators()[static_cast<std::size_t>(s.gen)].pow(s.exp);
  return out;
}

std::int64_t CyclicGroup::parse(std::string_view text) const {
  const Word w = Word::parse(alphabet_, text);
  std::int64_t sum = 0;
  for (const auto& s : w.syllables()) sum = checked::add(sum, s.exp);
  return sum;
}

CyclicOracle::CyclicOracle(std::int64_t generator) : generator_(generator), symbols_(symbol_alphabet(1)) {
  if (generator == 0) throw InvalidArgument("cyclic subgroup generator must be nonzero");
}

Word CyclicOracle::coords(std::int64_t a) const {
  if (!contains(a)) throw NotAMember(std::to_string(a) + " is not a multiple of " + std::to_string(generator_));
  return Word::generator(symbols_, 0, a / generator_);
}

std::int64_t CyclicOracle::evaluate(const Word& coords) const {
  if (coords.alphabet()->size() != 1) throw MismatchError("cyclic coordinates use a single symbol");
  std::int64_t k = 0;
  for (const auto& s : coords.syllables()) k = checked::add(k, s.exp);
  return checked::mul(k, generator_);
}

}  // namespace lorder
