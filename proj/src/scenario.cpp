#include "lorder/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "lorder/hnn.hpp"

namespace lorder {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::free:
      return "free";
    case GroupKind::gamma:
      return "gamma";
    case GroupKind::polycyclic:
      return "polycyclic";
    case GroupKind::hnn_free:
      return "hnn-free";
    case GroupKind::hnn_gamma:
      return "hnn-gamma";
    case GroupKind::hnn_cyclic:
      return "hnn-cyclic";
  }
  return "?";
}

std::optional<GroupKind> parse_group_kind(std::string_view text) {
  for (auto k : {GroupKind::free, GroupKind::gamma, GroupKind::polycyclic, GroupKind::hnn_free, GroupKind::hnn_gamma,
                 GroupKind::hnn_cyclic}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

bool is_hnn(GroupKind k) { return k == GroupKind::hnn_free || k == GroupKind::hnn_gamma || k == GroupKind::hnn_cyclic; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& text, int line, int col, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" + text + "'", line, col);
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  bool have_group = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    const std::size_t kw_end = raw.find_first_of(" \t\r", start);
    const std::string keyword = raw.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
    std::size_t value_start = kw_end == std::string::npos ? raw.size() : raw.find_first_not_of(" \t\r", kw_end);
    if (value_start == std::string::npos) value_start = raw.size();
    const std::string value = trim(std::string_view(raw).substr(value_start));
    const int col = static_cast<int>(value_start) + 1;
    auto need_value = [&] {
      if (value.empty()) throw ParseError("'" + keyword + "' needs a value", line, col);
    };

    if (keyword == "scenario") {
      need_value();
      sc.name = value;
    } else if (keyword == "group") {
      auto kind = parse_group_kind(value);
      if (!kind) throw ParseError("unknown group kind '" + value + "'", line, col);
      sc.kind = *kind;
      have_group = true;
    } else if (keyword == "alphabet") {
      sc.alphabet = split_ws(value);
      if (sc.alphabet.empty()) throw ParseError("alphabet must not be empty", line, col);
      for (const auto& name : sc.alphabet) {
        if (!Alphabet::valid_name(name)) throw ParseError("invalid generator name '" + name + "'", line, col);
      }
    } else if (keyword == "n") {
      need_value();
      sc.n = parse_int(value, line, col, "n");
    } else if (keyword == "A" || keyword == "B") {
      need_value();
      (keyword == "A" ? sc.a_gens : sc.b_gens).push_back({value, line});
    } else if (keyword == "element") {
      const auto eq = value.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'element <name> = <word>'", line, col);
      const std::string name = trim(std::string_view(value).substr(0, eq));
      const std::string word = trim(std::string_view(value).substr(eq + 1));
      if (!Alphabet::valid_name(name)) throw ParseError("invalid element name '" + name + "'", line, col);
      for (const auto& e : sc.elements) {
        if (e.name == name) throw ParseError("duplicate element name '" + name + "'", line, col);
      }
      sc.elements.push_back({name, word, line});
    } else if (keyword == "depth") {
      need_value();
      sc.depth = parse_int(value, line, col, "depth");
      if (sc.depth < 1) throw ParseError("depth must be >= 1", line, col);
    } else if (keyword == "mode") {
      auto mode = parse_search_mode(value);
      if (!mode) throw ParseError("unknown mode '" + value + "'", line, col);
      sc.mode = *mode;
    } else if (keyword == "witness") {
      const auto colon = value.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'witness <signs> : <product>'", line, col);
      Scenario::WitnessEntry w;
      w.line = line;
      for (char c : value.substr(0, colon)) {
        if (c == '+') {
          w.signs.push_back(1);
        } else if (c == '-') {
          w.signs.push_back(-1);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          throw ParseError(std::string("unexpected sign character '") + c + "'", line, col);
        }
      }
      w.product = split_ws(std::string_view(value).substr(colon + 1));
      if (w.product.empty()) throw ParseError("witness product must not be empty", line, col);
      sc.witnesses.push_back(std::move(w));
    } else if (keyword == "expect") {
      auto v = parse_verdict(value);
      if (!v) throw ParseError("unknown verdict '" + value + "'", line, col);
      sc.expect = *v;
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line, static_cast<int>(start) + 1);
    }
  }
  if (!have_group) throw ParseError("scenario has no 'group' line", line, 1);
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_text(const Scenario& sc) {
  std::ostringstream out;
  out << "scenario " << sc.name << "\n";
  out << "group " << to_string(sc.kind) << "\n";
  if (!sc.alphabet.empty()) {
    out << "alphabet";
    for (const auto& a : sc.alphabet) out << " " << a;
    out << "\n";
  }
  if (sc.n != 0) out << "n " << sc.n << "\n";
  for (const auto& a : sc.a_gens) out << "A " << a.text << "\n";
  for (const auto& b : sc.b_gens) out << "B " << b.text << "\n";
  for (const auto& e : sc.elements) out << "element " << e.name << " = " << e.text << "\n";
  out << "depth " << sc.depth << "\n";
  out << "mode " << to_string(sc.mode) << "\n";
  for (const auto& w : sc.witnesses) {
    out << "witness " << format_signs(w.signs) << " :";
    for (const auto& p : w.product) out << " " << p;
    out << "\n";
  }
  if (sc.expect) out << "expect " << to_string(*sc.expect) << "\n";
  return out.str();
}

namespace {

// Word parsers report positions inside the word; rebase them onto the file line.
std::string strip_position(const std::string& what) {
  const auto pos = what.find(": ");
  if (pos == std::string::npos) return what;
  const std::string head = what.substr(0, pos);
  if (head.find_first_not_of("0123456789:") != std::string::npos) return what;
  return what.substr(pos + 2);
}

template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(strip_position(e.what()), line, std::max(1, e.column()));
  } catch (const MismatchError& e) {
    throw ParseError(e.what(), line, 1);
  }
}

WitnessTable resolve_witnesses(const Scenario& sc) {
  WitnessTable table;
  const std::size_t k = sc.elements.size();
  for (const auto& w : sc.witnesses) {
    if (w.signs.size() != k) {
      throw ParseError("witness has " + std::to_string(w.signs.size()) + " signs for " + std::to_string(k) + " elements",
                       w.line, 1);
    }
    IndexSequence seq;
    for (const auto& tok : w.product) {
      std::optional<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i) {
        if (sc.elements[i].name == tok) idx = i;
      }
      if (!idx) {
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(tok, &used);
          if (used == tok.size() && v < k) idx = v;
        } catch (const std::exception&) {
        }
      }
      if (!idx) throw ParseError("witness refers to unknown element '" + tok + "'", w.line, 1);
      seq.push_back(*idx);
    }
    if (!table.emplace(w.signs, std::move(seq)).second) {
      throw ParseError("duplicate witness for sign vector " + format_signs(w.signs), w.line, 1);
    }
  }
  return table;
}

template <WordProblemGroup G>
ElementList<G> parse_elements(const Scenario& sc, const G& group) {
  ElementList<G> list;
  for (const auto& e : sc.elements) {
    auto value = at_line(e.line, [&] { return group.parse(e.text); });
    list.elements.push_back(group.mul(group.identity(), value));
    list.names.push_back(e.name);
  }
  return list;
}

template <WordProblemGroup G>
void run_cone(const Scenario& sc, const G& group, const ElementList<G>& list, const RunOptions& opt, Report& report,
              Constructor constructor = {}) {
  if (list.elements.empty()) {
    report.verdict = Verdict::checks_only;
    return;
  }
  const WitnessTable provided = resolve_witnesses(sc);
  ConeOptions co;
  co.depth = opt.depth.value_or(sc.depth);
  co.mode = sc.mode;
  co.threads = opt.threads;
  co.provided = &provided;
  co.constructor = std::move(constructor);
  report.cone = cone_refute(group, list, co);
  report.verdict = report.cone->verdict();
  if (report.cone->rejected() > 0) {
    report.add({"witness replay", "every certificate multiplies to the identity", false,
                std::to_string(report.cone->rejected()) + " witness(es) do not evaluate to the identity"});
  }
}

std::vector<Word> parse_words(const std::vector<Scenario::Entry>& entries, const AlphabetPtr& alphabet) {
  std::vector<Word> out;
  for (const auto& e : entries) out.push_back(at_line(e.line, [&] { return Word::parse(alphabet, e.text); }));
  return out;
}

void require_pairing(const Scenario& sc) {
  if (sc.a_gens.empty()) throw InvalidArgument("HNN scenarios need at least one A generator");
  if (sc.a_gens.size() != sc.b_gens.size()) {
    throw InvalidArgument("A and B must list equally many generators (phi pairs them by position)");
  }
}

AlphabetPtr base_alphabet(const Scenario& sc) {
  if (sc.alphabet.empty()) throw InvalidArgument("scenario needs an 'alphabet' line");
  if (is_hnn(sc.kind)) {
    for (const auto& a : sc.alphabet) {
      if (a == "t") throw InvalidArgument("'t' is reserved for the stable letter");
    }
  }
  return Alphabet::make(sc.alphabet);
}

template <class Hnn>
Constructor pairing_constructor(const Hnn& hnn, const ElementList<Hnn>& list, std::vector<Word> a_words,
                                std::vector<Word> b_words, const std::vector<typename Hnn::BaseElement>& generators) {
  PairingConstructor pc;
  pc.a_words = std::move(a_words);
  pc.b_words = std::move(b_words);
  std::vector<std::string> keys;
  for (const auto& e : list.elements) keys.push_back(hnn.key(hnn.britton_reduce(e)));
  auto find = [&](const typename Hnn::Element& e) {
    const std::string k = hnn.key(hnn.britton_reduce(e));
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == k) return static_cast<int>(i);
    }
    return -1;
  };
  for (const auto& g : generators) {
    const auto base = hnn.from_base(g);
    pc.base_index.push_back(find(base));
    pc.conj_index.push_back(find(hnn.mul(hnn.mul(hnn.stable_letter(1), base), hnn.stable_letter(-1))));
  }
  return pc;
}

Report run_free(const Scenario& sc, const RunOptions& opt, Report report) {
  const FreeGroup group(base_alphabet(sc));
  run_cone(sc, group, parse_elements(sc, group), opt, report);
  return report;
}

Report run_gamma(const Scenario& sc, const RunOptions& opt, Report report) {
  if (sc.n < 2) throw InvalidArgument("gamma scenarios need 'n' >= 2");
  const GammaGroup group(sc.n);
  add_gamma_relation_checks(sc.n, report);
  run_cone(sc, group, parse_elements(sc, group), opt, report);
  return report;
}

Report run_polycyclic(const Scenario& sc, const RunOptions& opt, Report report) {
  const PolycyclicGroup group;
  add_polycyclic_relation_checks(report);
  const auto list = parse_elements(sc, group);
  std::string outside;
  for (std::size_t i = 0; i < list.elements.size(); ++i) {
    if (!list.elements[i].in_gamma()) outside += (outside.empty() ? "" : ", ") + list.names[i];
  }
  report.add({"elements lie in Gamma = <t, x^2, y>", "Gamma is a subgroup of G generated by t, x^2, y", outside.empty(),
              outside.empty() ? "every element has even x-exponent" : "outside Gamma: " + outside});
  run_cone(sc, group, list, opt, report);
  return report;
}

Report run_hnn_free(const Scenario& sc, const RunOptions& opt, Report report) {
  require_pairing(sc);
  const auto alphabet = base_alphabet(sc);
  auto a_words = parse_words(sc.a_gens, alphabet);
  auto b_words = parse_words(sc.b_gens, alphabet);
  auto build = [&](const std::vector<Word>& words, const std::vector<Scenario::Entry>& entries) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].is_identity()) throw ParseError("subgroup generator is the identity", entries[i].line, 1);
    }
    return SubgroupGraph::build(words);
  };
  SubgroupGraph ga = build(a_words, sc.a_gens);
  SubgroupGraph gb = build(b_words, sc.b_gens);
  const auto k = static_cast<std::int64_t>(a_words.size());
  const bool a_free = ga.rank() == k;
  const bool b_free = gb.rank() == k;
  report.add({"A is free of rank " + std::to_string(k), "the u_i generate a free group of rank 8", a_free,
              "rank(A) = " + std::to_string(ga.rank()) + ", folded vertices " + std::to_string(ga.vertex_count())});
  report.add({"B is free of rank " + std::to_string(k), "the v_i generate a free group of rank 8", b_free,
              "rank(B) = " + std::to_string(gb.rank()) + ", folded vertices " + std::to_string(gb.vertex_count())});
  if (!a_free || !b_free) {
    report.verdict = Verdict::inconclusive;
    return report;
  }
  const FreeHnn hnn(FreeGroup(alphabet), FreeSubgroupOracle(std::move(ga)), FreeSubgroupOracle(std::move(gb)));
  const auto list = parse_elements(sc, hnn);
  Constructor ctor;
  if (sc.mode == SearchMode::construct && !list.elements.empty()) {
    std::vector<Word> gens;
    for (std::size_t g = 0; g < alphabet->size(); ++g) gens.push_back(Word::generator(alphabet, static_cast<int>(g)));
    ctor = pairing_constructor(hnn, list, std::move(a_words), std::move(b_words), gens);
  }
  run_cone(sc, hnn, list, opt, report, std::move(ctor));
  return report;
}

Report run_hnn_gamma(const Scenario& sc, const RunOptions& opt, Report report) {
  require_pairing(sc);
  if (sc.n < 2) throw InvalidArgument("hnn-gamma scenarios need 'n' >= 2");
  add_gamma_relation_checks(sc.n, report);
  const auto sx = gamma_alphabet();
  auto a_words = parse_words(sc.a_gens, sx);
  auto b_words = parse_words(sc.b_gens, sx);
  std::vector<GammaElement> a_elems, b_elems;
  for (const auto& w : a_words) a_elems.push_back(gamma_eval(sc.n, w));
  for (const auto& w : b_words) b_elems.push_back(gamma_eval(sc.n, w));
  auto build = [&](const std::vector<GammaElement>& elems, const char* label) -> std::optional<LatticeBasis> {
    const std::size_t k = elems.size();
    try {
      LatticeBasis b = LatticeBasis::build(elems);
      const bool ok = b.rank() == k;
      report.add({std::string(label) + " is free abelian of rank " + std::to_string(k),
                  "generate a subgroup isomorphic to Z^4", ok,
                  "pairwise commuting, lattice rank " + std::to_string(b.rank())});
      if (!ok) return std::nullopt;
      return b;
    } catch (const InvalidArgument& e) {
      report.add({std::string(label) + " is free abelian of rank " + std::to_string(k),
                  "generate a subgroup isomorphic to Z^4", false, e.what()});
      return std::nullopt;
    }
  };
  auto la = build(a_elems, "A");
  auto lb = build(b_elems, "B");
  if (!la || !lb) {
    report.verdict = Verdict::inconclusive;
    return report;
  }
  const GammaHnn hnn(GammaGroup(sc.n), LatticeOracle(std::move(*la)), LatticeOracle(std::move(*lb)));
  const auto list = parse_elements(sc, hnn);
  Constructor ctor;
  if (sc.mode == SearchMode::construct && !list.elements.empty()) {
    ctor = pairing_constructor(hnn, list, std::move(a_words), std::move(b_words),
                               std::vector<GammaElement>{GammaElement::s(sc.n), GammaElement::x(sc.n)});
  }
  run_cone(sc, hnn, list, opt, report, std::move(ctor));
  return report;
}

Report run_hnn_cyclic(const Scenario& sc, const RunOptions& opt, Report report) {
  require_pairing(sc);
  if (sc.a_gens.size() != 1) throw InvalidArgument("hnn-cyclic scenarios pair exactly one A and one B generator");
  const auto alphabet = base_alphabet(sc);
  if (alphabet->size() != 1) throw InvalidArgument("hnn-cyclic scenarios use a one-letter alphabet");
  const CyclicGroup base(alphabet->name(0));
  const auto a = at_line(sc.a_gens[0].line, [&] { return base.parse(sc.a_gens[0].text); });
  const auto b = at_line(sc.b_gens[0].line, [&] { return base.parse(sc.b_gens[0].text); });
  if (a == 0 || b == 0) throw InvalidArgument("cyclic subgroup generators must be nontrivial");
  const CyclicHnn hnn(base, CyclicOracle(a), CyclicOracle(b));
  run_cone(sc, hnn, parse_elements(sc, hnn), opt, report);
  return report;
}

}  // namespace

void add_gamma_relation_checks(int n, Report& report) {
  const auto sx = gamma_alphabet();
  const GammaElement s = GammaElement::s(n);
  const GammaElement x = GammaElement::x(n);
  auto comm = [](const GammaElement& a, const GammaElement& b) { return a.inverse() * b.inverse() * a * b; };
  bool ok = comm(s.pow(n), x).is_identity();
  for (int i = 1; i < n && ok; ++i) ok = comm(x, s.pow(i) * x * s.pow(-i)).is_identity();
  report.add({"Gamma_" + std::to_string(n) + " defining relations", "[s^n,x]=1, [x, s^i x s^-i]=1 for 1<=i<=n-1", ok,
              ok ? "all relators evaluate to the identity" : "a relator is nontrivial"});
}

void add_polycyclic_relation_checks(Report& report) {
  const GElement t = GElement::t(), x = GElement::x(), y = GElement::y(), z = GElement::z();
  auto prod = [](std::initializer_list<GElement> fs) {
    GElement acc;
    for (const auto& f : fs) acc = g_mul(acc, f);
    return acc;
  };
  auto comm = [&](const GElement& a, const GElement& b) { return prod({g_inv(a), g_inv(b), a, b}); };
  const bool ok = comm(x, y) == z && comm(z, x).is_identity() && comm(z, y).is_identity() && g_mul(t, t) == z &&
                  prod({t, x, g_inv(t)}) == g_inv(x) && prod({t, y, g_inv(t)}) == g_inv(y);
  report.add({"G defining relations", "[x,y]=z, [z,x]=[z,y]=1, t^2=z, txt^-1=x^-1, tyt^-1=y^-1", ok,
              ok ? "all relations hold in normal-form arithmetic" : "a relation fails"});
}

Report run_scenario(const Scenario& sc, const RunOptions& opt) {
  Report report;
  report.name = sc.name;
  report.expected = sc.expect;
  switch (sc.kind) {
    case GroupKind::free:
      return run_free(sc, opt, std::move(report));
    case GroupKind::gamma:
      return run_gamma(sc, opt, std::move(report));
    case GroupKind::polycyclic:
      return run_polycyclic(sc, opt, std::move(report));
    case GroupKind::hnn_free:
      return run_hnn_free(sc, opt, std::move(report));
    case GroupKind::hnn_gamma:
      return run_hnn_gamma(sc, opt, std::move(report));
    case GroupKind::hnn_cyclic:
      return run_hnn_cyclic(sc, opt, std::move(report));
  }
  return report;
}

int exit_code(const Report& report) {
  if (!report.all_passed()) return 1;
  if (report.expected && *report.expected != report.verdict) {
    return *report.expected == Verdict::not_left_orderable && report.verdict == Verdict::inconclusive ? 2 : 1;
  }
  return 0;
}

}  // namespace lorder
