#include "lorder/heisenberg.hpp"

namespace lorder {

using checked::add;
using checked::mul;

std::string GElement::str() const {
  return "t^" + std::to_string(tbit) + " x^" + std::to_string(m) + " y^" + std::to_string(q) + " z^" +
         std::to_string(r);
}

// x^m y^q t = t x^-m y^-q, and y^q x^m' = x^m' y^q z^{-q m'}.
GElement g_mul(const GElement& a, const GElement& b) {
  if (b.tbit == 0) {
    return {a.tbit, add(a.m, b.m), add(a.q, b.q), checked::sub(add(a.r, b.r), mul(a.q, b.m))};
  }
  return {(a.tbit + 1) % 2, checked::sub(b.m, a.m), checked::sub(b.q, a.q),
          add(add(add(a.r, b.r), a.tbit), mul(a.q, b.m))};
}

GElement g_inv(const GElement& g) {
  if (g.tbit == 0) return {0, -g.m, -g.q, checked::sub(-g.r, mul(g.q, g.m))};
  return {1, g.m, g.q, checked::sub(checked::sub(-g.r, 1), mul(g.q, g.m))};
}

GElement g_pow(const GElement& g, std::int64_t k) {
  GElement base = k < 0 ? g_inv(g) : g;
  if (k < 0) k = -k;
  GElement result;
  while (k > 0) {
    if (k & 1) result = g_mul(result, base);
    k >>= 1;
    if (k > 0) base = g_mul(base, base);
  }
  return result;
}

AlphabetPtr heisenberg_alphabet() {
  static const AlphabetPtr txyz = Alphabet::make({"t", "x", "y", "z"});
  return txyz;
}

GElement g_eval(const Word& w) {
  if (w.alphabet()->names() != heisenberg_alphabet()->names()) {
    throw MismatchError("G words must use exactly the alphabet {t, x, y, z}");
  }
  static const GElement letters[] = {GElement::t(), GElement::x(), GElement::y(), GElement::z()};
  GElement out;
  for (const auto& s : w.syllables()) out = g_mul(out, g_pow(letters[s.gen], s.exp));
  return out;
}

GElement g_parse(std::string_view text) { return g_eval(Word::parse(heisenberg_alphabet(), text)); }

std::int64_t g_square_exponent(std::int64_t n, std::int64_t m) {
  const GElement g{1, n, m, 0};
  const GElement sq = g_mul(g, g);
  const std::int64_t expected = add(mul(m, n), 1);
  if (!(sq == GElement{0, 0, 0, expected})) {
    throw Error("(t x^" + std::to_string(n) + " y^" + std::to_string(m) + ")^2 = " + sq.str() + ", expected z^" +
                std::to_string(expected));
  }
  return expected;
}

TorsionReport g_is_torsion_free_sample(std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("torsion sample bound must be >= 1");
  TorsionReport report;
  report.bound = bound;
  for (int tbit = 0; tbit <= 1; ++tbit) {
    for (std::int64_t m = -bound; m <= bound; ++m) {
      if (m % 2 != 0) continue;
      for (std::int64_t q = -bound; q <= bound; ++q) {
        for (std::int64_t r = -bound; r <= bound; ++r) {
          const GElement g{tbit, m, q, r};
          if (g.is_identity()) continue;
          ++report.elements_checked;
          GElement power;
          for (std::int64_t k = 1; k <= 2 * bound; ++k) {
            power = g_mul(power, g);
            ++report.powers_checked;
            if (power.is_identity()) report.violations.emplace_back(g, k);
          }
        }
      }
    }
  }
  return report;
}

}  // namespace lorder
