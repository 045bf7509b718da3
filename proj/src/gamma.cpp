#include "lorder/gamma.hpp"

#include <algorithm>
#include <numeric>

namespace lorder {

namespace {

std::size_t mod_index(std::int64_t k, int n) {
  const std::int64_t r = k % n;
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

void require_same_n(const GammaElement& g, const GammaElement& h) {
  if (g.n() != h.n()) {
    throw MismatchError("Gamma_n modulus mismatch: " + std::to_string(g.n()) + " vs " + std::to_string(h.n()));
  }
}

}  // namespace

GammaElement::GammaElement(int n) : n_(n), exps_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
  if (n < 2) throw InvalidArgument("Gamma_n needs n >= 2");
}

GammaElement::GammaElement(int n, std::int64_t shift, std::vector<std::int64_t> exps)
    : n_(n), shift_(shift), exps_(std::move(exps)) {
  if (n < 2) throw InvalidArgument("Gamma_n needs n >= 2");
  if (exps_.size() != static_cast<std::size_t>(n)) throw InvalidArgument("exponent vector length must equal n");
}

GammaElement GammaElement::s(int n) { return GammaElement(n, 1, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

GammaElement GammaElement::x(int n) {
  GammaElement g(n);
  g.exps_[0] = 1;
  return g;
}

bool GammaElement::is_identity() const {
  return shift_ == 0 && std::all_of(exps_.begin(), exps_.end(), [](std::int64_t p) { return p == 0; });
}

// (i,p)(j,q) = (i+j, sigma^{-j}(p) + q) with (sigma^{-j}p)_k = p_{(k+j) mod n}.
GammaElement GammaElement::operator*(const GammaElement& rhs) const {
  require_same_n(*this, rhs);
  std::vector<std::int64_t> out(exps_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = checked::add(exps_[mod_index(static_cast<std::int64_t>(k) + rhs.shift_, n_)], rhs.exps_[k]);
  }
  return GammaElement(n_, checked::add(shift_, rhs.shift_), std::move(out));
}

// (i,p)^-1 = (-i, -sigma^{i}(p)) with (sigma^{i}p)_k = p_{(k-i) mod n}.
GammaElement GammaElement::inverse() const {
  std::vector<std::int64_t> out(exps_.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = -exps_[mod_index(static_cast<std::int64_t>(k) - shift_, n_)];
  }
  return GammaElement(n_, -shift_, std::move(out));
}

GammaElement GammaElement::pow(std::int64_t k) const {
  GammaElement base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  GammaElement result(n_);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string GammaElement::str() const {
  std::string out = "(" + std::to_string(shift_) + ";";
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    out += (k == 0 ? " " : ",") + std::to_string(exps_[k]);
  }
  return out + ")";
}

Word GammaElement::to_word(const AlphabetPtr& sx) const {
  std::vector<Syllable> raw;
  raw.push_back({0, shift_});
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (k > 0) raw.push_back({0, 1});
    raw.push_back({1, exps_[k]});
  }
  raw.push_back({0, -static_cast<std::int64_t>(exps_.size()) + 1});
  return Word::reduce(sx, raw);
}

AlphabetPtr gamma_alphabet() {
  static const AlphabetPtr sx = Alphabet::make({"s", "x"});
  return sx;
}

GammaElement gamma_eval(int n, const Word& w) {
  const auto& names = w.alphabet()->names();
  if (names != std::vector<std::string>{"s", "x"}) {
    throw MismatchError("Gamma_n words must use exactly the alphabet {s, x}");
  }
  GammaElement g(n);
  for (const auto& syl : w.syllables()) {
    GammaElement letter(n);
    if (syl.gen == 0) {
      letter = GammaElement(n, syl.exp, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    } else {
      std::vector<std::int64_t> p(static_cast<std::size_t>(n), 0);
      p[0] = syl.exp;
      letter = GammaElement(n, 0, std::move(p));
    }
    g = g * letter;
  }
  return g;
}

GammaElement gamma_mul(const GammaElement& g, const GammaElement& h) { return g * h; }
GammaElement gamma_inv(const GammaElement& g) { return g.inverse(); }
GammaElement gamma_pow(const GammaElement& g, std::int64_t k) { return g.pow(k); }

std::int64_t exps_sum(const GammaElement& g) {
  std::int64_t total = 0;
  for (std::int64_t p : g.exps()) total = checked::add(total, p);
  return total;
}

std::int64_t sigma(const GammaElement& g) { return checked::add(g.shift(), exps_sum(g)); }

bool gamma_positive(const GammaElement& g) {
  const std::int64_t sum = exps_sum(g);
  if (sum != 0) return sum > 0;
  if (g.shift() != 0) return g.shift() > 0;
  for (std::int64_t p : g.exps()) {
    if (p != 0) return p > 0;
  }
  return false;
}

std::strong_ordering gamma_compare(const GammaElement& g, const GammaElement& h) {
  const GammaElement d = g.inverse() * h;
  if (d.is_identity()) return std::strong_ordering::equal;
  return gamma_positive(d) ? std::strong_ordering::less : std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// LatticeBasis

namespace {

using Row = std::vector<std::int64_t>;

// Returns g = gcd(a, b) >= 0 and x, y with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = checked::sub(old_r, checked::mul(q, r));
    old_r = r;
    r = tmp;
    tmp = checked::sub(old_s, checked::mul(q, s));
    old_s = s;
    s = tmp;
    tmp = checked::sub(old_t, checked::mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Row combine(std::int64_t a, const Row& r1, std::int64_t b, const Row& r2) {
  Row out(r1.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked::add(checked::mul(a, r1[k]), checked::mul(b, r2[k]));
  return out;
}

Row to_row(const GammaElement& g) {
  Row r;
  r.reserve(g.exps().size() + 1);
  r.push_back(g.shift());
  r.insert(r.end(), g.exps().begin(), g.exps().end());
  return r;
}

}  // namespace

LatticeBasis LatticeBasis::build(std::span<const GammaElement> generators) {
  if (generators.empty()) throw InvalidArgument("lattice needs at least one generator");
  LatticeBasis b;
  b.n_ = generators.front().n();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    require_same_n(generators[i], generators.front());
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const GammaElement& g = generators[i];
      const GammaElement& h = generators[j];
      if (!(g * h == h * g)) {
        throw InvalidArgument("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " do not commute: " + g.str() + ", " + h.str());
      }
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].shift() % b.n_ != 0) {
      throw InvalidArgument("generator " + std::to_string(i + 1) + " " + generators[i].str() +
                            " has shift not divisible by n");
    }
  }
  b.generators_.assign(generators.begin(), generators.end());

  const std::size_t rows = generators.size();
  const std::size_t cols = static_cast<std::size_t>(b.n_) + 1;
  std::vector<Row> h;
  std::vector<Row> u;
  for (std::size_t i = 0; i < rows; ++i) {
    h.push_back(to_row(generators[i]));
    Row e(rows, 0);
    e[i] = 1;
    u.push_back(std::move(e));
  }

  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (h[i][col] == 0) continue;
      const std::int64_t a = h[row][col];
      const std::int64_t c = h[i][col];
      std::int64_t x = 0, y = 0;
      const std::int64_t g = ext_gcd(a, c, x, y);
      // [x y; -c/g a/g] has determinant 1.
      Row hr = combine(x, h[row], y, h[i]);
      Row hi = combine(-c / g, h[row], a / g, h[i]);
      Row ur = combine(x, u[row], y, u[i]);
      Row ui = combine(-c / g, u[row], a / g, u[i]);
      h[row] = std::move(hr);
      h[i] = std::move(hi);
      u[row] = std::move(ur);
      u[i] = std::move(ui);
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) {
      for (auto& v : h[row]) v = -v;
      for (auto& v : u[row]) v = -v;
    }
    const std::int64_t pivot = h[row][col];
    for (std::size_t k = 0; k < row; ++k) {
      std::int64_t q = h[k][col] / pivot;
      if (h[k][col] - q * pivot < 0) --q;
      if (q == 0) continue;
      h[k] = combine(1, h[k], -q, h[row]);
      u[k] = combine(1, u[k], -q, u[row]);
    }
    b.pivots_.push_back(col);
    ++row;
  }
  b.rank_ = row;
  h.resize(row);
  u.resize(row);
  b.hnf_ = std::move(h);
  b.transform_ = std::move(u);
  return b;
}

bool LatticeBasis::solve(const GammaElement& g, std::vector<std::int64_t>* coords) const {
  if (g.n() != n_) throw MismatchError("lattice and element use different n");
  if (g.shift() % n_ != 0) return false;
  Row v = to_row(g);
  std::vector<std::int64_t> y(rank_, 0);
  for (std::size_t j = 0; j < rank_; ++j) {
    const std::size_t col = pivots_[j];
    const std::int64_t pivot = hnf_[j][col];
    if (v[col] % pivot != 0) return false;
    y[j] = v[col] / pivot;
    if (y[j] != 0) v = combine(1, v, -y[j], hnf_[j]);
  }
  if (std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e != 0; })) return false;
  if (coords) {
    coords->assign(generators_.size(), 0);
    for (std::size_t j = 0; j < rank_; ++j) {
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        (*coords)[i] = checked::add((*coords)[i], checked::mul(y[j], transform_[j][i]));
      }
    }
  }
  return true;
}

bool LatticeBasis::contains(const GammaElement& g) const { return solve(g, nullptr); }

std::vector<std::int64_t> LatticeBasis::coords(const GammaElement& g) const {
  std::vector<std::int64_t> c;
  if (!solve(g, &c)) throw NotAMember("element " + g.str() + " is not in the lattice");
  return c;
}

GammaElement LatticeBasis::evaluate(std::span<const std::int64_t> coords) const {
  if (coords.size() != generators_.size()) throw InvalidArgument("coordinate vector has wrong length");
  GammaElement out(n_);
  for (std::size_t i = 0; i < coords.size(); ++i) out = out * generators_[i].pow(coords[i]);
  return out;
}

LatticeBasis lattice_build(std::span<const GammaElement> generators) { return LatticeBasis::build(generators); }
bool lattice_contains(const LatticeBasis& b, const GammaElement& g) { return b.contains(g); }
std::vector<std::int64_t> lattice_coords(const LatticeBasis& b, const GammaElement& g) { return b.coords(g); }

}  // namespace lorder
