#pragma once

// HNN extensions (G, A, B, t, phi) with phi(A_i) = B_i, and Britton reduction.
//
// phi is never tabulated: phi(a) is computed as B.evaluate(A.coords(a)), and
// phi^-1 symmetrically, so A and B may be infinite.

#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorder/groups.hpp"

namespace lorder {

/// b_0 t^e_1 b_1 ... t^e_k b_k with every e_i in {+1, -1}.
template <class E>
struct HnnWord {
  std::vector<E> bases;
  std::vector<int> t_signs;

  std::size_t t_length() const { return t_signs.size(); }
  bool operator==(const HnnWord&) const = default;
};

/// Raised when an oracle reports membership but cannot produce coordinates.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

template <BaseGroup Base, class Oracle>
  requires SubgroupOracle<Oracle, typename Base::Element>
class HnnExtension {
 public:
  using BaseElement = typename Base::Element;
  using Element = HnnWord<BaseElement>;

  HnnExtension(Base base, Oracle a, Oracle b) : base_(std::move(base)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.generator_count() != b_.generator_count()) {
      throw InvalidArgument("phi pairs generators by position; A and B need equally many generators");
    }
  }

  const Base& base() const { return base_; }
  const Oracle& subgroup_a() const { return a_; }
  const Oracle& subgroup_b() const { return b_; }

  Element identity() const { return Element{{base_.identity()}, {}}; }
  Element from_base(const BaseElement& g) const { return Element{{g}, {}}; }
  Element stable_letter(int sign = 1) const {
    return Element{{base_.identity(), base_.identity()}, {sign > 0 ? 1 : -1}};
  }

  BaseElement phi(const BaseElement& a) const { return b_.evaluate(checked_coords(a_, a)); }
  BaseElement phi_inverse(const BaseElement& b) const { return a_.evaluate(checked_coords(b_, b)); }

  /// Removes pinches t a t^-1 (a in A) and t^-1 b t (b in B), leftmost first,
  /// merging neighbouring base elements, until none remain.
  Element britton_reduce(const Element& w) const {
    check_shape(w);
    Element out{{w.bases.front()}, {}};
    for (std::size_t i = 0; i < w.t_signs.size(); ++i) append(out, w.t_signs[i], w.bases[i + 1]);
    return out;
  }

  Element mul(const Element& lhs, const Element& rhs) const {
    check_shape(lhs);
    check_shape(rhs);
    Element out = britton_reduce(lhs);
    out.bases.back() = base_.mul(out.bases.back(), rhs.bases.front());
    for (std::size_t i = 0; i < rhs.t_signs.size(); ++i) append(out, rhs.t_signs[i], rhs.bases[i + 1]);
    return out;
  }

  Element inv(const Element& w) const {
    check_shape(w);
    Element out;
    for (auto it = w.bases.rbegin(); it != w.bases.rend(); ++it) out.bases.push_back(base_.inv(*it));
    for (auto it = w.t_signs.rbegin(); it != w.t_signs.rend(); ++it) out.t_signs.push_back(-*it);
    return britton_reduce(out);
  }

  /// Britton's lemma: a reduced word containing t is never trivial.
  bool is_identity(const Element& w) const {
    const Element r = britton_reduce(w);
    return r.t_signs.empty() && base_.is_identity(r.bases.front());
  }

  std::string format(const Element& w) const {
    std::string out;
    auto emit = [&](const std::string& piece) {
      if (!out.empty()) out += ' ';
      out += piece;
    };
    for (std::size_t i = 0; i < w.bases.size(); ++i) {
      if (!base_.is_identity(w.bases[i])) emit(base_.format(w.bases[i]));
      if (i < w.t_signs.size()) emit(w.t_signs[i] > 0 ? "t" : "t^-1");
    }
    return out.empty() ? "1" : out;
  }

  /// Equal keys imply equal elements; callers pass reduced words so that
  /// equal reduced forms collide.
  std::string key(const Element& r) const {
    std::string out = base_.key(r.bases.front());
    for (std::size_t i = 0; i < r.t_signs.size(); ++i) {
      out += r.t_signs[i] > 0 ? "|t|" : "|T|";
      out += base_.key(r.bases[i + 1]);
    }
    return out;
  }

  /// Parses base words interleaved with `t`, `t^-1` or `t^k`, e.g. `t a^2 t^-1 b`.
  Element parse(std::string_view text) const {
    Element out = identity();
    std::string segment;
    auto flush = [&] {
      if (segment.empty()) return;
      out.bases.back() = base_.mul(out.bases.back(), base_.parse(segment));
      segment.clear();
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t end = pos;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) break;
      const std::string_view token = text.substr(pos, end - pos);
      if (auto k = stable_power(token)) {
        flush();
        const int sign = *k > 0 ? 1 : -1;
        for (long long i = 0; i < (*k > 0 ? *k : -*k); ++i) {
          out.t_signs.push_back(sign);
          out.bases.push_back(base_.identity());
        }
      } else {
        if (!segment.empty()) segment += ' ';
        segment += token;
      }
      pos = end;
    }
    flush();
    return out;
  }

 private:
  static std::optional<long long> stable_power(std::string_view token) {
    if (token == "t") return 1;
    if (token.size() < 3 || token[0] != 't' || token[1] != '^') return std::nullopt;
    long long k = 0;
    auto body = token.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
    return k;
  }

  static Word checked_coords(const Oracle& o, const BaseElement& e) {
    try {
      return o.coords(e);
    } catch (const NotAMember& ex) {
      throw OracleInconsistency(std::string("subgroup oracle rejected a claimed member: ") + ex.what());
    }
  }

  void check_shape(const Element& w) const {
    if (w.bases.size() != w.t_signs.size() + 1) throw InvalidArgument("malformed HNN word");
    for (int s : w.t_signs) {
      if (s != 1 && s != -1) throw InvalidArgument("stable letter exponents must be +1 or -1");
    }
  }

  // Appends t^sign * next to an already reduced word.
  void append(Element& acc, int sign, const BaseElement& next) const {
    if (!acc.t_signs.empty() && acc.t_signs.back() == -sign) {
      const BaseElement& middle = acc.bases.back();
      const bool pinch = sign < 0 ? a_.contains(middle) : b_.contains(middle);
      if (pinch) {
        const BaseElement image = sign < 0 ? phi(middle) : phi_inverse(middle);
        acc.t_signs.pop_back();
        acc.bases.pop_back();
        acc.bases.back() = base_.mul(base_.mul(acc.bases.back(), image), next);
        return;
      }
    }
    acc.t_signs.push_back(sign);
    acc.bases.push_back(next);
  }

  Base base_;
  Oracle a_;
  Oracle b_;
};

using FreeHnn = HnnExtension<FreeGroup, FreeSubgroupOracle>;
using GammaHnn = HnnExtension<GammaGroup, LatticeOracle>;
using CyclicHnn = HnnExtension<CyclicGroup, CyclicOracle>;

}  // namespace lorder
