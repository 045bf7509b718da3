#pragma once

// Reference models used only by the tests. None of them share code with the
// library arithmetic they are compared against.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "lorder/word.hpp"

namespace oracle {

using i64 = std::int64_t;

// Free reduction one letter at a time.
struct Letter {
  int gen;
  int sign;
  bool operator==(const Letter&) const = default;
};

inline std::vector<Letter> expand(const std::vector<lorder::Syllable>& syllables) {
  std::vector<Letter> out;
  for (const auto& s : syllables) {
    for (i64 i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.push_back({s.gen, s.exp > 0 ? 1 : -1});
  }
  return out;
}

inline std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> st;
  for (const auto& l : in) {
    if (!st.empty() && st.back().gen == l.gen && st.back().sign == -l.sign) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return st;
}

// Gamma_n as affine maps of Z^n with a counter: s = (cyclic shift e_k -> e_k+1,
// counter + 1), x = translation by e_0. Faithful, and independent of the
// (shift; exps) formulas.
struct Affine {
  int n;
  i64 counter = 0;  // the power of the shift matrix
  std::vector<i64> b;

  explicit Affine(int n_) : n(n_), b(static_cast<std::size_t>(n_), 0) {}

  // this * (s or x)^sign, acting on the right of the word
  void apply(int gen, int sign) {
    if (gen == 0) {
      counter += sign;
    } else {
      // A e_0 = e_(counter mod n)
      const auto k = static_cast<std::size_t>(((counter % n) + n) % n);
      b[k] += sign;
    }
  }

  // canonical exponents p with b = P^counter p
  std::vector<i64> exps() const {
    std::vector<i64> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>((((j + counter) % n) + n) % n)];
    return p;
  }
};

inline Affine gamma_affine(int n, const lorder::Word& w) {
  Affine a(n);
  for (const auto& l : expand(w.syllables())) a.apply(l.gen, l.sign);
  return a;
}

// G = <t,x,y,z> as pairs (d, M) = t^d M with M a 3x3 integer unitriangular
// matrix, x = I+E12, y = I+E23, z = I+E13; t conjugates by diag(1,-1,1).
using M3 = std::array<std::array<i64, 3>, 3>;

inline M3 identity3() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

inline M3 mul3(const M3& a, const M3& b) {
  M3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline M3 flip3(M3 a) {
  a[0][1] = -a[0][1];
  a[1][2] = -a[1][2];
  return a;
}

struct GPair {
  int d = 0;
  M3 m = identity3();
  bool operator==(const GPair&) const = default;
};

inline GPair gmul(const GPair& a, const GPair& b) {
  GPair out;
  out.d = (a.d + b.d) % 2;
  out.m = mul3(b.d ? flip3(a.m) : a.m, b.m);
  if (a.d && b.d) out.m[0][2] += 1;  // t^2 = z is central
  return out;
}

inline GPair gletter(int gen, int sign) {
  GPair p;
  if (gen == 0) {
    p.d = 1;
    if (sign < 0) p.m[0][2] = -1;
  } else if (gen == 1) {
    p.m[0][1] = sign;
  } else if (gen == 2) {
    p.m[1][2] = sign;
  } else {
    p.m[0][2] = sign;
  }
  return p;
}

// word over {t, x, y, z}
inline GPair g_model(const lorder::Word& w) {
  GPair acc;
  for (const auto& l : expand(w.syllables())) acc = gmul(acc, gletter(l.gen, l.sign));
  return acc;
}

inline GPair g_normal(int d, i64 m, i64 q, i64 r) {
  GPair p;
  p.d = d;
  p.m[0][1] = m;
  p.m[1][2] = q;
  p.m[0][2] = m * q + r;
  return p;
}

inline lorder::Word random_word(std::mt19937_64& rng, const lorder::AlphabetPtr& alphabet, int max_syllables,
                                int max_exp) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(alphabet->size()) - 1);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::vector<lorder::Syllable> raw;
  for (int i = len(rng); i > 0; --i) raw.push_back({gen(rng), ex(rng)});
  return lorder::Word::reduce(alphabet, raw);
}

}  // namespace oracle
