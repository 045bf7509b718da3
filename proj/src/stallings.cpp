#include "lorder/stallings.hpp"

#include <map>
#include <string>

namespace lorder {

namespace {

struct WorkEdge {
  int from;
  int to;
  int gen;
  Word lam;
  bool alive = true;
};

class Folder {
 public:
  Folder(AlphabetPtr symbols) : symbols_(std::move(symbols)) {}

  int add_vertex() {
    incident_.emplace_back();
    alive_.push_back(true);
    return static_cast<int>(alive_.size()) - 1;
  }

  void add_edge(int from, int to, int gen, Word lam) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({from, to, gen, std::move(lam)});
    incident_[static_cast<std::size_t>(from)].push_back(id);
    if (to != from) incident_[static_cast<std::size_t>(to)].push_back(id);
  }

  void add_generator(const Word& w, int index) {
    std::vector<std::pair<int, int>> letters;  // (gen, sign)
    for (const auto& s : w.syllables()) {
      const int sign = s.exp > 0 ? 1 : -1;
      for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) letters.emplace_back(s.gen, sign);
    }
    const Word symbol = Word::generator(symbols_, index);
    const Word one(symbols_);
    int prev = 0;
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const bool last = j + 1 == letters.size();
      const int next = last ? 0 : add_vertex();
      const auto [gen, sign] = letters[j];
      if (sign > 0) {
        add_edge(prev, next, gen, last ? symbol : one);
      } else {
        add_edge(next, prev, gen, last ? symbol.inverse() : one);
      }
      prev = next;
    }
  }

  void fold() {
    std::vector<int> work;
    for (int v = 0; v < static_cast<int>(alive_.size()); ++v) work.push_back(v);
    while (!work.empty()) {
      const int v = work.back();
      work.pop_back();
      if (!alive_[static_cast<std::size_t>(v)]) continue;
      std::map<std::pair<int, int>, int> star;
      bool folded = false;
      for (int id : live_incident(v)) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        for (int dir : {1, -1}) {
          if ((dir == 1 && e.from != v) || (dir == -1 && e.to != v)) continue;
          auto [it, inserted] = star.emplace(std::make_pair(e.gen, dir), id);
          if (!inserted) {
            const int survivor = fold_pair(v, it->second, id, dir);
            work.push_back(v);
            if (survivor != v) work.push_back(survivor);
            folded = true;
            break;
          }
        }
        if (folded) break;
      }
    }
  }

  void prune(int base) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < static_cast<int>(alive_.size()); ++v) {
        if (v == base || !alive_[static_cast<std::size_t>(v)]) continue;
        auto live = live_incident(v);
        int degree = 0;
        for (int id : live) {
          const auto& e = edges_[static_cast<std::size_t>(id)];
          degree += (e.from == v) + (e.to == v);
        }
        if (degree <= 1) {
          for (int id : live) edges_[static_cast<std::size_t>(id)].alive = false;
          alive_[static_cast<std::size_t>(v)] = false;
          changed = true;
        }
      }
    }
  }

  const std::vector<WorkEdge>& edges() const { return edges_; }
  const std::vector<bool>& alive() const { return alive_; }

 private:
  std::vector<int> live_incident(int v) {
    auto& list = incident_[static_cast<std::size_t>(v)];
    std::vector<int> live;
    for (int id : list) {
      const auto& e = edges_[static_cast<std::size_t>(id)];
      if (e.alive && (e.from == v || e.to == v)) live.push_back(id);
    }
    list = live;
    return live;
  }

  // Identifies two edges with the same label and direction at v. Returns the
  // surviving far endpoint.
  int fold_pair(int v, int keep, int drop, int dir) {
    auto far = [&](int id) {
      const auto& e = edges_[static_cast<std::size_t>(id)];
      return dir == 1 ? e.to : e.from;
    };
    int w = far(keep);
    int w_drop = far(drop);
    if (w == w_drop) {
      // Parallel edges: the cycle they form evaluates to the identity.
      edges_[static_cast<std::size_t>(drop)].alive = false;
      return w;
    }
    if (w_drop == 0) {
      std::swap(keep, drop);
      std::swap(w, w_drop);
    }
    const Word& lk = edges_[static_cast<std::size_t>(keep)].lam;
    const Word& ld = edges_[static_cast<std::size_t>(drop)].lam;
    const Word delta = dir == 1 ? lk.inverse() * ld : lk * ld.inverse();
    const Word delta_inv = delta.inverse();
    edges_[static_cast<std::size_t>(drop)].alive = false;

    for (int id : live_incident(w_drop)) {
      auto& f = edges_[static_cast<std::size_t>(id)];
      const bool touches_w = f.from == w || f.to == w;
      if (f.from == w_drop) {
        f.lam = delta * f.lam;
        f.from = w;
      }
      if (f.to == w_drop) {
        f.lam = f.lam * delta_inv;
        f.to = w;
      }
      if (!touches_w) incident_[static_cast<std::size_t>(w)].push_back(id);
    }
    incident_[static_cast<std::size_t>(w_drop)].clear();
    alive_[static_cast<std::size_t>(w_drop)] = false;
    (void)v;
    return w;
  }

  AlphabetPtr symbols_;
  std::vector<WorkEdge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> alive_;
};

AlphabetPtr make_symbols(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("U" + std::to_string(i));
  return Alphabet::make(std::move(names));
}

}  // namespace

SubgroupGraph SubgroupGraph::build(std::span<const Word> generators) {
  if (generators.empty()) throw InvalidArgument("subgroup needs at least one generator");
  SubgroupGraph g;
  g.alphabet_ = generators.front().alphabet();
  g.symbols_ = make_symbols(generators.size());
  Folder folder(g.symbols_);
  folder.add_vertex();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Word& w = generators[i];
    if (!w.same_alphabet(generators.front())) throw MismatchError("subgroup generators use different alphabets");
    if (w.is_identity()) {
      throw InvalidArgument("subgroup generator " + std::to_string(i + 1) + " is the identity");
    }
    g.generators_.push_back(w);
    folder.add_generator(w, static_cast<int>(i));
  }
  folder.fold();
  folder.prune(0);

  std::vector<int> renumber(folder.alive().size(), -1);
  int next = 0;
  for (std::size_t v = 0; v < folder.alive().size(); ++v) {
    if (folder.alive()[v]) renumber[v] = next++;
  }
  g.vertex_count_ = static_cast<std::size_t>(next);
  const std::size_t ngen = g.alphabet_->size();
  g.out_.assign(g.vertex_count_, std::vector<int>(ngen, -1));
  g.in_.assign(g.vertex_count_, std::vector<int>(ngen, -1));
  for (const auto& e : folder.edges()) {
    if (!e.alive) continue;
    const int id = static_cast<int>(g.edges_.size());
    Edge edge{renumber[static_cast<std::size_t>(e.from)], renumber[static_cast<std::size_t>(e.to)], e.gen, e.lam};
    g.out_[static_cast<std::size_t>(edge.from)][static_cast<std::size_t>(edge.gen)] = id;
    g.in_[static_cast<std::size_t>(edge.to)][static_cast<std::size_t>(edge.gen)] = id;
    g.edges_.push_back(std::move(edge));
  }
  return g;
}

std::int64_t SubgroupGraph::rank() const {
  return static_cast<std::int64_t>(edges_.size()) - static_cast<std::int64_t>(vertex_count_) + 1;
}

bool SubgroupGraph::is_folded() const {
  std::map<std::tuple<int, int, int>, int> seen;
  for (const auto& e : edges_) {
    if (++seen[{e.from, e.gen, 1}] > 1) return false;
    if (++seen[{e.to, e.gen, -1}] > 1) return false;
  }
  return true;
}

std::optional<SubgroupGraph::Step> SubgroupGraph::step(int vertex, int gen, int sign) const {
  const auto& table = sign > 0 ? out_ : in_;
  const int id = table[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(gen)];
  if (id < 0) return std::nullopt;
  const Edge& e = edges_[static_cast<std::size_t>(id)];
  return Step{id, sign > 0, sign > 0 ? e.to : e.from};
}

std::optional<std::pair<int, Word>> SubgroupGraph::trace(const Word& w) const {
  if (!w.same_alphabet(generators_.front())) throw MismatchError("word and subgroup use different alphabets");
  int v = base();
  Word acc(symbols_);
  for (const auto& s : w.syllables()) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < (s.exp > 0 ? s.exp : -s.exp); ++k) {
      auto st = step(v, s.gen, sign);
      if (!st) return std::nullopt;
      const Word& lam = edges_[static_cast<std::size_t>(st->edge)].provenance;
      acc = acc * (st->forward ? lam : lam.inverse());
      v = st->target;
    }
  }
  return std::make_pair(v, std::move(acc));
}

bool SubgroupGraph::contains(const Word& w) const {
  auto t = trace(w);
  return t && t->first == base();
}

Word SubgroupGraph::express(const Word& w) const {
  auto t = trace(w);
  if (!t || t->first != base()) throw NotAMember("word " + w.str() + " is not in the subgroup");
  return std::move(t->second);
}

Word SubgroupGraph::evaluate(const Word& coords) const {
  if (!(*coords.alphabet() == *symbols_)) throw MismatchError("coordinate word uses the wrong symbols");
  return substitute(coords, generators_, alphabet_);
}

}  // namespace lorder
