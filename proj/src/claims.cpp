#include "lorder/claims.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lorder/gamma.hpp"
#include "lorder/heisenberg.hpp"
#include "lorder/hnn.hpp"
#include "lorder/stallings.hpp"
#include "lorder/unipotent.hpp"

namespace lorder {

FreeExponents FreeExponents::standard() {
  FreeExponents e;
  for (int i = 0; i < 8; ++i) e.p[i] = e.q[i] = e.r[i] = e.s[i] = i + 1;
  return e;
}

bool FreeExponents::strictly_increasing() const {
  for (const auto* seq : {&p, &q, &r, &s}) {
    if ((*seq)[0] < 1) return false;
    for (int i = 1; i < 8; ++i) {
      if ((*seq)[i] <= (*seq)[i - 1]) return false;
    }
  }
  return true;
}

namespace {

AlphabetPtr ab_alphabet() {
  static const AlphabetPtr ab = Alphabet::make({"a", "b"});
  return ab;
}

Word ab_word(std::int64_t ea, std::int64_t eb) {
  return Word::generator(ab_alphabet(), 0, ea) * Word::generator(ab_alphabet(), 1, eb);
}

Word sx(const std::string& text) { return Word::parse(gamma_alphabet(), text); }

GammaElement gamma_with(int n, std::int64_t shift, const std::vector<std::pair<int, std::int64_t>>& entries) {
  std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
  for (auto [i, v] : entries) exps[static_cast<std::size_t>(((i % n) + n) % n)] += v;
  return GammaElement(n, shift, std::move(exps));
}

std::string word_list(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : ", ") + w.str();
  return out;
}

}  // namespace

std::vector<Word> u_words(const FreeExponents& e) {
  std::vector<Word> out;
  for (int i = 0; i < 8; ++i) out.push_back(ab_word(e.p[i], i < 4 ? e.q[i] : -e.q[i]));
  return out;
}

std::vector<Word> v_words(const FreeExponents& e) {
  std::vector<Word> out;
  for (int i = 0; i < 8; ++i) {
    const int sa = (i % 4) < 2 ? 1 : -1;
    const int sb = (i % 2) == 0 ? 1 : -1;
    out.push_back(ab_word(sa * e.r[i], sb * e.s[i]));
  }
  return out;
}

std::vector<Word> f_words(int n) {
  const auto p = [](int k) { return std::to_string(k); };
  return {sx("s^" + p(n - 1) + " x s"), sx("s^" + p(n - 2) + " (x s)^2"), sx("s^" + p(n - 4) + " (x s)^4"),
          sx("s^" + p(n - 8) + " (x s)^8")};
}

std::vector<Word> g_words(int n) {
  const auto p = [](int k) { return std::to_string(k); };
  return {sx("s^" + p(n - 1) + " x s"), sx("s^" + p(n - 2) + " (x^-1 s)^2"), sx("s^" + p(4 - n) + " (x s^-1)^4"),
          sx("s^" + p(8 - n) + " (x^-1 s^-1)^8")};
}

std::vector<GammaElement> f_expected(int n) {
  std::vector<GammaElement> out;
  for (int width : {1, 2, 4, 8}) {
    std::vector<std::pair<int, std::int64_t>> entries;
    for (int i = n - width; i < n; ++i) entries.push_back({i, 1});
    out.push_back(gamma_with(n, n, entries));
  }
  return out;
}

std::vector<GammaElement> g_expected(int n) {
  return {gamma_with(n, n, {{n - 1, 1}}), gamma_with(n, n, {{n - 2, -1}, {n - 1, -1}}),
          gamma_with(n, -n, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}),
          gamma_with(n, -n, {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}, {7, -1}, {8, -1}})};
}

// ---------------------------------------------------------------------------
// Scenarios

namespace {

void add_conjugate_list(Scenario& sc, const std::string& g1, const std::string& g2) {
  sc.elements = {{g1, g1, 0},
                 {g2, g2, 0},
                 {"t" + g1 + "T", "t " + g1 + " t^-1", 0},
                 {"t" + g2 + "T", "t " + g2 + " t^-1", 0}};
}

}  // namespace

Scenario free_hnn_scenario(const FreeExponents& e) {
  if (!e.strictly_increasing()) throw InvalidArgument("exponent sequences must be positive and strictly increasing");
  Scenario sc;
  sc.name = "free-hnn";
  sc.kind = GroupKind::hnn_free;
  sc.alphabet = {"a", "b"};
  for (const auto& w : u_words(e)) sc.a_gens.push_back({w.str(), 0});
  for (const auto& w : v_words(e)) sc.b_gens.push_back({w.str(), 0});
  add_conjugate_list(sc, "a", "b");
  sc.depth = 4;
  sc.mode = SearchMode::construct;
  sc.expect = Verdict::not_left_orderable;
  return sc;
}

Scenario gamma_hnn_scenario(int n, int depth) {
  if (n < 12) throw InvalidArgument("the Gamma_n construction needs n >= 12");
  Scenario sc;
  sc.name = "gamma-hnn-" + std::to_string(n);
  sc.kind = GroupKind::hnn_gamma;
  sc.n = n;
  for (const auto& w : f_words(n)) sc.a_gens.push_back({w.str(), 0});
  for (const auto& w : g_words(n)) sc.b_gens.push_back({w.str(), 0});
  add_conjugate_list(sc, "s", "x");
  sc.depth = depth;
  sc.mode = SearchMode::construct;
  return sc;
}

Scenario gamma_example_scenario(int depth) {
  Scenario sc;
  sc.name = "polycyclic-gamma";
  sc.kind = GroupKind::polycyclic;
  sc.elements = {{"t", "t", 0}, {"y", "y", 0}, {"tx2", "t x^2", 0}, {"txm2", "t x^-2", 0}};
  sc.depth = depth;
  sc.mode = SearchMode::bfs;
  sc.expect = Verdict::not_left_orderable;
  return sc;
}

Scenario klein_bottle_scenario(int depth) {
  Scenario sc;
  sc.name = "klein-bottle";
  sc.kind = GroupKind::hnn_cyclic;
  sc.alphabet = {"b"};
  sc.a_gens = {{"b", 0}};
  sc.b_gens = {{"b^-1", 0}};
  sc.elements = {{"a", "t", 0}, {"b", "b", 0}};
  sc.depth = depth;
  sc.mode = SearchMode::bfs;
  sc.expect = Verdict::inconclusive;
  return sc;
}

Scenario bs12_scenario(int depth) {
  Scenario sc;
  sc.name = "bs12";
  sc.kind = GroupKind::hnn_cyclic;
  sc.alphabet = {"a"};
  sc.a_gens = {{"a", 0}};
  sc.b_gens = {{"a^2", 0}};
  sc.elements = {{"t", "t", 0}, {"a", "a", 0}, {"tat", "t a t^-1 a^-1", 0}};
  sc.depth = depth;
  sc.mode = SearchMode::bfs;
  sc.expect = Verdict::inconclusive;
  return sc;
}

Scenario tampered_free_hnn_scenario(const FreeExponents& e) {
  const Scenario good = free_hnn_scenario(e);
  const Report built = run_scenario(good);
  Scenario sc = good;
  sc.name = "free-hnn-tampered";
  std::rotate(sc.b_gens.begin(), sc.b_gens.begin() + 1, sc.b_gens.end());
  sc.mode = SearchMode::verify;
  for (const auto& row : built.cone->rows) {
    Scenario::WitnessEntry w;
    w.signs = row.signs;
    for (std::size_t i : row.witness) w.product.push_back(std::to_string(i));
    sc.witnesses.push_back(std::move(w));
  }
  return sc;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

std::string count_of(std::size_t got, std::size_t total) { return std::to_string(got) + "/" + std::to_string(total); }

}  // namespace

Report certify_free_hnn(const FreeExponents& e, unsigned threads) {
  Report r = run_scenario(free_hnn_scenario(e), {.depth = std::nullopt, .threads = threads});
  if (!r.cone) return r;
  std::size_t constructed = 0;
  for (const auto& row : r.cone->rows) constructed += row.source == "constructed" && row.status == RowStatus::verified;
  r.add({"constructed certificates", "the extension of F(a,b) pairing u_i with v_i is not left-orderable",
         constructed == r.cone->rows.size(), count_of(constructed, r.cone->rows.size()) + " verified by Britton reduction"});
  return r;
}

Report certify_gamma_hnn(int n, int depth, unsigned threads) {
  Report r = run_scenario(gamma_hnn_scenario(n, depth), {.depth = std::nullopt, .threads = threads});
  if (!r.cone) return r;
  std::size_t unmixed = 0, unmixed_ok = 0, mixed = 0, mixed_found = 0, mixed_flagged = 0;
  for (const auto& row : r.cone->rows) {
    if (row.signs[2] == row.signs[3]) {
      ++unmixed;
      unmixed_ok += row.source == "constructed" && row.status == RowStatus::verified;
    } else {
      ++mixed;
      mixed_found += row.has_witness();
      mixed_flagged += row.reported_only;
    }
  }
  r.add({"equal-sign conjugates refuted", "t f_i t^-1 share a sign while the g_i take both signs",
         unmixed_ok == unmixed && unmixed == 8, count_of(unmixed_ok, unmixed) + " constructed and verified"});
  r.add({"mixed-sign conjugates reported", "", mixed_flagged == mixed && mixed == 8,
         count_of(mixed_found, mixed) + " found by search at depth " + std::to_string(r.cone->depth) +
             ", the rest exhausted; no verdict asserted"});
  return r;
}

Report certify_gamma_example(int depth, unsigned threads) {
  Report r = run_scenario(gamma_example_scenario(depth), {.depth = std::nullopt, .threads = threads});
  if (!r.cone) return r;
  std::size_t longest = 0;
  for (const auto& row : r.cone->rows) longest = std::max(longest, row.witness.size());
  r.add({"all assignments witnessed", "Gamma = <t, x^2, y> is not left-orderable",
         r.cone->witnessed() == r.cone->rows.size(),
         count_of(r.cone->witnessed(), r.cone->rows.size()) + ", longest witness " + std::to_string(longest)});
  return r;
}

// ---------------------------------------------------------------------------
// Property suites

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Word random_word(Rng& rng, const AlphabetPtr& alphabet, int max_syllables, int max_exp) {
  std::vector<Syllable> raw;
  const auto count = uniform(rng, 0, max_syllables);
  for (std::int64_t i = 0; i < count; ++i) {
    std::int64_t e = uniform(rng, 1, max_exp);
    if (uniform(rng, 0, 1)) e = -e;
    raw.push_back({static_cast<int>(uniform(rng, 0, static_cast<std::int64_t>(alphabet->size()) - 1)), e});
  }
  return Word::reduce(alphabet, raw);
}

// Letter-level free reduction, independent of the syllable code.
std::vector<SignedGen> letters_of(std::span<const Syllable> syllables) {
  std::vector<SignedGen> stack;
  for (const auto& s : syllables) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) {
      if (!stack.empty() && stack.back().gen == s.gen && stack.back().sign == -sign) {
        stack.pop_back();
      } else {
        stack.push_back({s.gen, sign});
      }
    }
  }
  return stack;
}

Check pass_or_first(std::string name, std::string claim, const std::string& failure, const std::string& ok_detail) {
  return {std::move(name), std::move(claim), failure.empty(), failure.empty() ? ok_detail : failure};
}

}  // namespace

Check word_property_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const auto alphabet = Alphabet::make({"a", "b", "c"});
  std::string failure;
  for (int i = 0; i < cases && failure.empty(); ++i) {
    std::vector<Syllable> raw;
    for (std::int64_t j = uniform(rng, 0, 20); j > 0; --j) {
      raw.push_back({static_cast<int>(uniform(rng, 0, 2)), uniform(rng, -3, 3)});
    }
    const Word u = Word::reduce(alphabet, raw);
    const Word v = random_word(rng, alphabet, 20, 3);
    const Word w = random_word(rng, alphabet, 20, 3);
    const auto lu = letters_of(u.syllables());
    bool reduced = letters_of(raw) == lu;
    for (std::size_t k = 0; k < u.syllables().size(); ++k) {
      if (u.syllables()[k].exp == 0 || (k > 0 && u.syllables()[k - 1].gen == u.syllables()[k].gen)) reduced = false;
    }
    if (!reduced) failure = "reduction of case " + std::to_string(i) + " gave " + u.str();
    else if (!(Word::reduce(alphabet, u.syllables()) == u)) failure = "reduce not idempotent on " + u.str();
    else if (!(Word::parse(alphabet, u.str()) == u)) failure = "parse/str round trip failed on " + u.str();
    else if (!((u * v) * w == u * (v * w))) failure = "associativity failed on " + u.str() + " | " + v.str() + " | " + w.str();
    else if (!(u * u.inverse()).is_identity() || !(u.inverse() * u).is_identity()) failure = "u u^-1 != 1 for " + u.str();
    else if (!((u * v).inverse() == v.inverse() * u.inverse())) failure = "(uv)^-1 != v^-1 u^-1 for " + u.str();
  }
  return pass_or_first("free reduction properties", "words reduce to a unique normal form", failure,
                       std::to_string(cases) + " random cases");
}

Check stallings_express_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const auto gens = u_words(FreeExponents::standard());
  const SubgroupGraph graph = SubgroupGraph::build(gens);
  const auto symbols = graph.symbol_alphabet();
  std::string failure;
  for (int i = 0; i < cases && failure.empty(); ++i) {
    const Word c = random_word(rng, symbols, 5, 2);
    const Word w = graph.evaluate(c);
    if (!graph.contains(w)) {
      failure = "member " + w.str() + " not recognised";
    } else if (!(graph.express(w) == c)) {
      failure = "express(" + w.str() + ") = " + graph.express(w).str() + ", expected " + c.str();
    }
  }
  return pass_or_first("membership coordinates round trip", "A = <u_1..u_8> is free on the u_i", failure,
                       std::to_string(cases) + " random members of <u_1..u_8>");
}

namespace {

GammaElement random_gamma(Rng& rng, int n) {
  std::vector<std::int64_t> exps(static_cast<std::size_t>(n), 0);
  for (auto& e : exps) e = uniform(rng, 0, 1) ? uniform(rng, -3, 3) : 0;
  std::int64_t shift = uniform(rng, -2 * n, 2 * n);
  const auto mode = uniform(rng, 0, 3);
  if (mode >= 2) {
    std::int64_t sum = 0;
    for (auto e : exps) sum += e;
    exps[static_cast<std::size_t>(uniform(rng, 0, n - 1))] -= sum;
  }
  if (mode == 3) shift = 0;
  return GammaElement(n, shift, std::move(exps));
}

}  // namespace

Check gamma_order_suite(int n, std::uint64_t seed, int cases) {
  Rng rng(seed);
  std::string failure;
  for (int i = 0; i < cases && failure.empty(); ++i) {
    const GammaElement g = random_gamma(rng, n), h = random_gamma(rng, n), f = random_gamma(rng, n);
    const int states = int(g.is_identity()) + int(!g.is_identity() && gamma_positive(g)) +
                       int(!g.is_identity() && gamma_positive(g.inverse()));
    if (states != 1) {
      failure = "trichotomy fails for " + g.str();
    } else if (!g.is_identity() && !h.is_identity() && gamma_positive(g) && gamma_positive(h) &&
               !gamma_positive(g * h)) {
      failure = "cone not closed: " + g.str() + " * " + h.str();
    } else if (gamma_compare(g, h) != gamma_compare(f * g, f * h)) {
      failure = "left invariance fails for f=" + f.str() + ", g=" + g.str() + ", h=" + h.str();
    } else if (gamma_compare(g, h) < 0 && gamma_compare(h, f) < 0 && !(gamma_compare(g, f) < 0)) {
      failure = "transitivity fails on " + g.str() + " < " + h.str() + " < " + f.str();
    }
  }
  return pass_or_first("Gamma_" + std::to_string(n) + " left order", "Gamma_n is left-orderable", failure,
                       std::to_string(cases) + " random triples");
}

Check gamma_torsion_suite(int n, std::uint64_t seed, int elements, int max_power) {
  Rng rng(seed);
  std::string failure;
  for (int i = 0; i < elements && failure.empty(); ++i) {
    GammaElement g = random_gamma(rng, n);
    if (g.is_identity()) g = GammaElement::x(n);
    GammaElement p = g;
    for (int k = 1; k <= max_power; ++k, p = p * g) {
      if (p.is_identity()) {
        failure = g.str() + "^" + std::to_string(k) + " = 1";
        break;
      }
    }
  }
  return pass_or_first("Gamma_" + std::to_string(n) + " torsion sample", "Gamma_n is torsion-free", failure,
                       std::to_string(elements) + " elements, powers 1.." + std::to_string(max_power));
}

Check heisenberg_identity_suite() {
  const GElement t = GElement::t(), x = GElement::x(), y = GElement::y(), z = GElement::z();
  auto sq = [](const GElement& g) { return g_mul(g, g); };
  std::string failure;
  int count = 0;
  if (!(sq(t) == z)) failure = "t^2 = " + sq(t).str();
  for (int n = -8; n <= 8 && failure.empty(); n += 2, ++count) {
    const GElement g = g_mul(t, g_pow(x, n));
    if (!(sq(g) == z)) failure = "(t x^" + std::to_string(n) + ")^2 = " + sq(g).str();
  }
  for (int n = -6; n <= 6 && failure.empty(); ++n) {
    for (int m = -6; m <= 6 && failure.empty(); ++m, ++count) {
      const GElement g = g_mul(g_mul(t, g_pow(x, n)), g_pow(y, m));
      if (!(sq(g) == g_pow(z, m * n + 1))) failure = "(t x^n y^m)^2 = " + sq(g).str() + " for n,m = " +
                                                     std::to_string(n) + "," + std::to_string(m);
    }
  }
  for (int p = -5; p <= 5 && failure.empty(); ++p) {
    for (int q = -5; q <= 5 && failure.empty(); ++q) {
      for (int r = -5; r <= 5 && failure.empty(); ++r, ++count) {
        const GElement g = g_mul(g_mul(g_mul(t, g_pow(x, 2 * p)), g_pow(y, q)), g_pow(z, r));
        const std::int64_t e = 2 * p * q + 2 * r + 1;
        if (!(sq(g) == g_pow(z, e)) || sq(g).is_identity()) failure = "(t x^2p y^q z^r)^2 = " + sq(g).str();
      }
    }
  }
  return pass_or_first("square identities in G", "(t x^n y^m)^2 = z^(mn+1), never trivial on Gamma", failure,
                       std::to_string(count + 1) + " identities");
}

namespace {

// t^d M with M in U_3; t acts by conjugation with diag(1,-1,1) and t^2 = Z.
struct PairModel {
  int d = 0;
  UnipotentMatrix m{3};
};

UnipotentMatrix flip(const UnipotentMatrix& a) {
  UnipotentMatrix out = a;
  out.set(1, 2, -a.at(1, 2));
  out.set(2, 3, -a.at(2, 3));
  return out;
}

PairModel pair_mul(const PairModel& a, const PairModel& b) {
  PairModel out;
  out.d = (a.d + b.d) % 2;
  out.m = (b.d ? flip(a.m) : a.m) * b.m;
  if (a.d && b.d) out.m = UnipotentMatrix::elementary(3, 1, 3) * out.m;
  return out;
}

UnipotentMatrix normal_form_matrix(const GElement& g) {
  UnipotentMatrix out(3);
  out.set(1, 2, Rational(g.m));
  out.set(2, 3, Rational(g.q));
  out.set(1, 3, Rational(g.m * g.q + g.r));
  return out;
}

}  // namespace

Check heisenberg_matrix_crosscheck(std::uint64_t seed, int words) {
  Rng rng(seed);
  const auto alphabet = heisenberg_alphabet();
  PairModel letter[4][2];
  letter[0][0] = {1, UnipotentMatrix(3)};
  letter[0][1] = {1, UnipotentMatrix::elementary(3, 1, 3, -1)};
  for (int g = 1; g < 4; ++g) {
    const int i = g == 2 ? 2 : 1;
    const int j = g == 1 ? 2 : 3;
    letter[g][0] = {0, UnipotentMatrix::elementary(3, i, j, 1)};
    letter[g][1] = {0, UnipotentMatrix::elementary(3, i, j, -1)};
  }
  std::string failure;
  for (int w = 0; w < words && failure.empty(); ++w) {
    const Word word = random_word(rng, alphabet, 10, 3);
    PairModel acc;
    for (const auto& s : word.syllables()) {
      for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) acc = pair_mul(acc, letter[s.gen][s.exp < 0]);
    }
    const GElement g = g_eval(word);
    if (acc.d != g.tbit || !(acc.m == normal_form_matrix(g))) {
      failure = "word " + word.str() + ": normal form " + g.str() + ", matrices give t^" + std::to_string(acc.d) +
                " " + acc.m.str();
    }
  }
  return pass_or_first("G against its matrix model", "H embeds in U_3(Z) with [x,y] = z", failure,
                       std::to_string(words) + " random words");
}

namespace {

UnipotentMatrix random_unipotent(Rng& rng, int m) {
  UnipotentMatrix out(m);
  const bool sparse = uniform(rng, 0, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (sparse && uniform(rng, 0, 2) != 0) continue;
      out.set(i, j, Rational(uniform(rng, -2, 2)));
    }
  }
  return out;
}

}  // namespace

Check unipotent_order_suite(std::uint64_t seed, int cases, int max_size) {
  Rng rng(seed);
  std::string failure;
  for (int i = 0; i < cases && failure.empty(); ++i) {
    const int m = static_cast<int>(uniform(rng, 2, max_size));
    const auto g = random_unipotent(rng, m), h = random_unipotent(rng, m), f = random_unipotent(rng, m);
    const bool gi = g.is_identity();
    const int states = int(gi) + int(!gi && u_positive(g)) + int(!gi && u_positive(g.inverse()));
    const auto c = u_compare(g, h);
    if (states != 1) {
      failure = "trichotomy fails for " + g.str();
    } else if (!gi && !h.is_identity() && u_positive(g) && u_positive(h) && !u_positive(g * h)) {
      failure = "cone not closed: " + g.str() + " * " + h.str();
    } else if (c != u_compare(f * g, f * h) || c != u_compare(g * f, h * f)) {
      failure = "bi-invariance fails for f=" + f.str() + ", g=" + g.str() + ", h=" + h.str();
    } else if (c < 0 && u_compare(h, f) < 0 && !(u_compare(g, f) < 0)) {
      failure = "transitivity fails on " + g.str() + " < " + h.str() + " < " + f.str();
    }
  }
  return pass_or_first("U_m bi-order", "torsion-free nilpotent groups are bi-orderable", failure,
                       std::to_string(cases) + " random triples, m <= " + std::to_string(max_size));
}

namespace {

template <class Hnn>
std::string relator_failure(const Hnn& hnn, const typename Hnn::BaseElement& a,
                            const typename Hnn::BaseElement& image) {
  const auto& base = hnn.base();
  typename Hnn::Element w{{base.identity(), a, base.inv(image)}, {1, -1}};
  if (!hnn.is_identity(w)) return "t a t^-1 phi(a)^-1 != 1 for a = " + base.format(a);
  if (!(hnn.britton_reduce(typename Hnn::Element{{base.identity(), a, base.identity()}, {1, -1}}) ==
        hnn.from_base(image))) {
    return "t a t^-1 does not reduce to phi(a) for a = " + base.format(a);
  }
  return {};
}

}  // namespace

Check britton_relator_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  const FreeExponents e = FreeExponents::standard();
  const auto ab = ab_alphabet();
  const auto ug = u_words(e), vg = v_words(e);
  SubgroupGraph ga = SubgroupGraph::build(ug), gb = SubgroupGraph::build(vg);
  const FreeHnn free_hnn{FreeGroup(ab), FreeSubgroupOracle(ga), FreeSubgroupOracle(gb)};

  const int n = 12;
  std::vector<GammaElement> fe, ge;
  for (const auto& w : f_words(n)) fe.push_back(gamma_eval(n, w));
  for (const auto& w : g_words(n)) ge.push_back(gamma_eval(n, w));
  const LatticeBasis la = LatticeBasis::build(fe), lb = LatticeBasis::build(ge);
  const GammaHnn gamma_hnn{GammaGroup(n), LatticeOracle(la), LatticeOracle(lb)};

  const CyclicHnn bs(CyclicGroup("a"), CyclicOracle(1), CyclicOracle(2));

  std::string failure;
  const auto symbols8 = ga.symbol_alphabet();
  const auto symbols4 = symbol_alphabet(4);
  for (int i = 0; i < cases && failure.empty(); ++i) {
    const Word c8 = random_word(rng, symbols8, 4, 2);
    failure = relator_failure(free_hnn, ga.evaluate(c8), gb.evaluate(c8));
    if (!failure.empty()) break;
    const Word c4 = random_word(rng, symbols4, 4, 3);
    failure = relator_failure(gamma_hnn, LatticeOracle(la).evaluate(c4), LatticeOracle(lb).evaluate(c4));
    if (!failure.empty()) break;
    const std::int64_t k = uniform(rng, -50, 50);
    failure = relator_failure(bs, k, 2 * k);
  }
  return pass_or_first("HNN relators reduce to 1", "t a t^-1 = phi(a) for every a in A", failure,
                       std::to_string(cases) + " instances on each of the free, lattice and cyclic oracles");
}

Check bs12_word_problem() {
  const CyclicHnn bs(CyclicGroup("a"), CyclicOracle(1), CyclicOracle(2));
  const bool rel = bs.is_identity(bs.parse("t a t^-1 a^-2"));
  const bool conj = !bs.is_identity(bs.parse("t^-1 a t"));
  const bool reduced = bs.format(bs.britton_reduce(bs.parse("t^-1 a^2 t"))) == "a";
  std::ostringstream detail;
  detail << "t a t^-1 a^-2 = 1: " << (rel ? "yes" : "no") << ", t^-1 a t != 1: " << (conj ? "yes" : "no")
         << ", t^-1 a^2 t -> " << bs.format(bs.britton_reduce(bs.parse("t^-1 a^2 t")));
  return {"BS(1,2) word problem", "Britton reduction decides the word problem of <t,a | t a t^-1 = a^2>",
          rel && conj && reduced, detail.str()};
}

// ---------------------------------------------------------------------------
// Aggregate

namespace {

void add_free_rank_checks(Report& r) {
  const FreeExponents e = FreeExponents::standard();
  const auto ra = SubgroupGraph::build(u_words(e)).rank();
  const auto rb = SubgroupGraph::build(v_words(e)).rank();
  const std::vector<Word> small{ab_word(2, 0), ab_word(3, 0)};
  const auto rs = SubgroupGraph::build(small).rank();
  r.add({"rank <u_1..u_8>", "the u_i generate a free group of rank 8", ra == 8, "rank " + std::to_string(ra)});
  r.add({"rank <v_1..v_8>", "the v_i generate a free group of rank 8", rb == 8, "rank " + std::to_string(rb)});
  r.add({"rank <a^2, a^3>", "", rs == 1, "rank " + std::to_string(rs)});
}

void add_gamma_checks(Report& r, int n) {
  const auto fw = f_words(n), gw = g_words(n);
  std::vector<GammaElement> fe, ge;
  for (const auto& w : fw) fe.push_back(gamma_eval(n, w));
  for (const auto& w : gw) ge.push_back(gamma_eval(n, w));
  auto forms = [](const std::vector<GammaElement>& v) {
    std::string out;
    for (const auto& g : v) out += (out.empty() ? "" : " ") + g.str();
    return out;
  };
  r.add({"canonical forms of f_1..f_4", "", fe == f_expected(n), forms(fe)});
  r.add({"canonical forms of g_1..g_4", "", ge == g_expected(n), forms(ge)});

  auto commuting = [](const std::vector<GammaElement>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!(v[i] * v[j] == v[j] * v[i])) return false;
      }
    }
    return true;
  };
  auto rank_of = [](const std::vector<GammaElement>& v) -> std::string {
    try {
      return std::to_string(LatticeBasis::build(v).rank());
    } catch (const Error& e) {
      return e.what();
    }
  };
  const std::string rf = rank_of(fe), rg = rank_of(ge);
  r.add({"<f_1..f_4> is Z^4", "<f_1..f_4> is isomorphic to Z^4", commuting(fe) && rf == "4",
         "pairwise commuting: " + std::string(commuting(fe) ? "yes" : "no") + ", rank " + rf});
  r.add({"<g_1..g_4> is Z^4", "<g_1..g_4> is isomorphic to Z^4", commuting(ge) && rg == "4",
         "pairwise commuting: " + std::string(commuting(ge) ? "yes" : "no") + ", rank " + rg});

  bool outside = true;
  for (const auto& g : fe) outside = outside && g.shift() != 0;
  r.add({"f_i lie in N_n", "", false,
         outside ? "every f_i has shift " + std::to_string(n) + ", so they lie in s^n N_n, not N_n; the Z^4 claim is unaffected"
                 : "some f_i has shift 0",
         false});

  const auto sx_alpha = gamma_alphabet();
  const std::array<std::string, 4> labels{"s x", "s^-1 x", "s x^-1", "s^-1 x^-1"};
  auto positive_in = [&](const Word& w, int label) {
    const auto subset = parse_subset(*sx_alpha, labels[static_cast<std::size_t>(label)]);
    return is_positive_word(w, subset);
  };
  bool f_ok = true;
  for (const auto& w : fw) f_ok = f_ok && positive_in(w, 0);
  r.add({"f_i positive in {s, x}", "f_1..f_4 are positive words in S_1", f_ok, word_list(fw)});

  std::string as_labelled, swapped;
  const std::array<int, 4> swap{0, 2, 1, 3};
  bool labelled_ok = true, swapped_ok = true;
  for (int i = 0; i < 4; ++i) {
    const bool a = positive_in(gw[static_cast<std::size_t>(i)], i);
    const bool b = positive_in(gw[static_cast<std::size_t>(i)], swap[static_cast<std::size_t>(i)]);
    labelled_ok = labelled_ok && a;
    swapped_ok = swapped_ok && b;
    as_labelled += " g" + std::to_string(i + 1) + (a ? "+" : "-");
  }
  r.add({"g_i positive in S_i as labelled", "", labelled_ok,
         "S_2 = {s^-1, x}, S_3 = {s, x^-1}:" + as_labelled + "; g_2 and g_3 fit the other label", false});
  r.add({"g_i positive in S_1, S_3, S_2, S_4", "each g_i is positive in a distinct S_j, covering all four",
         swapped_ok, word_list(gw)});

  add_gamma_relation_checks(n, r);
}

}  // namespace

Report verify_claims(const ClaimOptions& opt) {
  Report r;
  r.name = "verify-paper n=" + std::to_string(opt.n);
  r.seed = opt.seed;
  std::uint64_t seed = opt.seed;
  auto next_seed = [&] { return seed++; };

  r.add(word_property_suite(next_seed(), 10000));
  add_free_rank_checks(r);
  r.add(stallings_express_suite(next_seed(), 1000));

  add_gamma_checks(r, opt.n);
  r.add(gamma_order_suite(opt.n, next_seed(), 10000));
  r.add(gamma_torsion_suite(opt.n, next_seed(), 1000, 20));

  r.add(heisenberg_identity_suite());
  const TorsionReport tor = g_is_torsion_free_sample(3);
  r.add({"Gamma torsion sample", "Gamma is torsion-free", tor.violations.empty(),
         std::to_string(tor.elements_checked) + " elements, " + std::to_string(tor.powers_checked) + " powers"});
  r.add(heisenberg_matrix_crosscheck(next_seed(), 1000));

  r.add(bs12_word_problem());
  r.add(britton_relator_suite(next_seed(), 1000));

  r.add(unipotent_order_suite(next_seed(), 10000, 6));
  {
    Rng rng(next_seed());
    int tried = 0, broken = 0;
    for (int i = 0; i < 2000; ++i) {
      const int m = static_cast<int>(uniform(rng, 3, 6));
      const auto g = random_unipotent(rng, m), h = random_unipotent(rng, m);
      if (g.is_identity() || h.is_identity() || (g * h).is_identity()) continue;
      if (!u_positive(g, OrderRule::anti_diagonal) || !u_positive(h, OrderRule::anti_diagonal)) continue;
      ++tried;
      broken += !u_positive(g * h, OrderRule::anti_diagonal);
    }
    r.add({"anti-diagonal rule closure", "", broken == 0,
           std::to_string(broken) + " of " + std::to_string(tried) + " positive pairs have a non-positive product",
           false});
  }

  auto expect_child = [&](Report child, const std::string& what) {
    const bool ok = child.expected ? child.verdict == *child.expected : true;
    r.add({what + " verdict", "", ok,
           to_string(child.verdict) + (child.expected ? " (expected " + to_string(*child.expected) + ")" : "")});
    r.children.push_back(std::move(child));
  };
  expect_child(certify_free_hnn(FreeExponents::standard(), opt.threads), "free-group extension");
  expect_child(certify_gamma_example(opt.depth, opt.threads), "polycyclic Gamma");
  expect_child(certify_gamma_hnn(opt.n, opt.depth, opt.threads), "Gamma_n extension");
  expect_child(run_scenario(klein_bottle_scenario(10), {.depth = std::nullopt, .threads = opt.threads}),
               "Klein bottle");

  const Report tampered = run_scenario(tampered_free_hnn_scenario(), {.depth = std::nullopt, .threads = opt.threads});
  const std::size_t rejected = tampered.cone ? tampered.cone->rejected() : 0;
  r.add({"tampered pairing is caught", "", rejected > 0 && exit_code(tampered) == 1,
         std::to_string(rejected) + " of 16 certificates rejected after rotating the v_i, exit code " +
             std::to_string(exit_code(tampered))});

  r.verdict = Verdict::checks_only;
  return r;
}

}  // namespace lorder
