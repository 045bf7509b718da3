#include "lorder/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace lorder {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgument("alphabet must not be empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw InvalidArgument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument("duplicate generator name '" + n + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

int Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw InvalidArgument("word needs an alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Syllable> syllables)
    : alphabet_(std::move(alphabet)), syllables_(std::move(syllables)) {}

namespace {

// Appends one syllable to an already reduced stack, cancelling and merging.
void push_reduced(std::vector<Syllable>& out, Syllable s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp = checked::add(out.back().exp, s.exp);
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

}  // namespace

Word Word::reduce(AlphabetPtr alphabet, std::span<const Syllable> raw) {
  if (!alphabet) throw InvalidArgument("word needs an alphabet");
  std::vector<Syllable> out;
  out.reserve(raw.size());
  const auto n = static_cast<int>(alphabet->size());
  for (const auto& s : raw) {
    if (s.gen < 0 || s.gen >= n) throw InvalidArgument("generator index out of range");
    push_reduced(out, s);
  }
  return Word(std::move(alphabet), std::move(out));
}

Word Word::generator(AlphabetPtr alphabet, int gen, std::int64_t exp) {
  Syllable s{gen, exp};
  return reduce(std::move(alphabet), std::span<const Syllable>(&s, 1));
}

std::int64_t Word::length() const {
  std::int64_t len = 0;
  for (const auto& s : syllables_) len = checked::add(len, s.exp < 0 ? -s.exp : s.exp);
  return len;
}

bool Word::same_alphabet(const Word& other) const {
  return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
}

bool Word::operator==(const Word& other) const {
  return same_alphabet(other) && syllables_ == other.syllables_;
}

Word Word::operator*(const Word& rhs) const {
  if (!same_alphabet(rhs)) throw MismatchError("cannot multiply words over different alphabets");
  std::vector<Syllable> out = syllables_;
  out.reserve(syllables_.size() + rhs.syllables_.size());
  for (const auto& s : rhs.syllables_) push_reduced(out, s);
  return Word(alphabet_, std::move(out));
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    out.push_back({it->gen, -it->exp});
  }
  return Word(alphabet_, std::move(out));
}

Word Word::pow(std::int64_t k) const {
  Word base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Word result(alphabet_);
  // Square-and-multiply keeps conjugate-shaped words short.
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += alphabet_->name(static_cast<std::size_t>(s.gen));
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

namespace {

class WordParser {
 public:
  WordParser(const AlphabetPtr& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  std::vector<Syllable> parse() {
    std::vector<Syllable> out = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  std::vector<Syllable> sequence() {
    std::vector<Syllable> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      char c = text_[pos_];
      if (c == '*' || c == '.') {
        ++pos_;
        continue;
      }
      if (c == '1' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        ++pos_;
        continue;
      }
      if (c == '(') {
        ++pos_;
        std::vector<Syllable> inner = sequence();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
        std::int64_t k = exponent();
        append_power(out, inner, k);
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected character '" + std::string(1, c) + "'");
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      int gen = alphabet_->find(name);
      if (gen < 0) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      out.push_back({gen, exponent()});
    }
    return out;
  }

  std::int64_t exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail("expected exponent after '^'");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return neg ? -value : value;
  }

  static void append_power(std::vector<Syllable>& out, const std::vector<Syllable>& inner, std::int64_t k) {
    if (k >= 0) {
      for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), inner.begin(), inner.end());
      return;
    }
    for (std::int64_t i = 0; i < -k; ++i) {
      for (auto it = inner.rbegin(); it != inner.rend(); ++it) out.push_back({it->gen, -it->exp});
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in word '" + std::string(text_) + "'", 1, static_cast<int>(pos_) + 1);
  }

  const AlphabetPtr& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  if (!alphabet) throw InvalidArgument("word needs an alphabet");
  std::vector<Syllable> raw = WordParser(alphabet, text).parse();
  return reduce(std::move(alphabet), raw);
}

Word multiply(const Word& lhs, const Word& rhs) { return lhs * rhs; }

Word invert(const Word& w) { return w.inverse(); }

bool is_positive_word(const Word& w, std::span<const SignedGen> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i].sign != 1 && subset[i].sign != -1) throw InvalidArgument("subset sign must be +1 or -1");
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i].gen == subset[j].gen && subset[i].sign != subset[j].sign) {
        throw InvalidArgument("subset contains a generator together with its inverse");
      }
    }
  }
  if (w.is_identity()) return false;
  for (const auto& s : w.syllables()) {
    const int sign = s.exp > 0 ? 1 : -1;
    const bool allowed = std::any_of(subset.begin(), subset.end(),
                                     [&](const SignedGen& g) { return g.gen == s.gen && g.sign == sign; });
    if (!allowed) return false;
  }
  return true;
}

std::vector<SignedGen> parse_subset(const Alphabet& alphabet, std::string_view text) {
  auto shared = std::make_shared<const Alphabet>(alphabet);
  std::vector<SignedGen> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ',') ++end;
    Word letter = Word::parse(shared, text.substr(pos, end - pos));
    if (letter.syllables().size() != 1 || (letter.syllables()[0].exp != 1 && letter.syllables()[0].exp != -1)) {
      throw ParseError("subset members must be single letters or their inverses");
    }
    out.push_back({letter.syllables()[0].gen, static_cast<int>(letter.syllables()[0].exp)});
    pos = end;
  }
  return out;
}

Word substitute(const Word& w, std::span<const Word> images, AlphabetPtr target) {
  if (images.size() != w.alphabet()->size()) throw MismatchError("substitution needs one image per generator");
  Word out(std::move(target));
  for (const auto& s : w.syllables()) out = out * images[static_cast<std::size_t>(s.gen)].pow(s.exp);
  return out;
}

}  // namespace lorder
