#include "lorder/unipotent.hpp"

#include <cctype>

namespace lorder {

UnipotentMatrix::UnipotentMatrix(int m) : m_(m) {
  if (m < 2 || m > kMaxSize) throw InvalidArgument("unipotent size must lie in [2, 12]");
  entries_.assign(static_cast<std::size_t>(m * m), Rational(0));
}

UnipotentMatrix UnipotentMatrix::elementary(int m, int i, int j, const Rational& value) {
  UnipotentMatrix a(m);
  a.set(i, j, value);
  return a;
}

Rational UnipotentMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > m_ || j > m_) throw InvalidArgument("matrix index out of range");
  if (i == j) return Rational(1);
  if (i > j) return Rational(0);
  return entries_[index(i, j)];
}

void UnipotentMatrix::set(int i, int j, const Rational& value) {
  if (i < 1 || j > m_ || i >= j) throw InvalidArgument("only strictly upper entries can be set");
  entries_[index(i, j)] = value;
}

bool UnipotentMatrix::is_identity() const {
  for (const auto& e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

UnipotentMatrix UnipotentMatrix::operator*(const UnipotentMatrix& rhs) const {
  if (m_ != rhs.m_) throw MismatchError("unipotent size mismatch");
  UnipotentMatrix out(m_);
  for (int i = 1; i <= m_; ++i) {
    for (int j = i + 1; j <= m_; ++j) {
      Rational sum = entries_[index(i, j)] + rhs.entries_[index(i, j)];
      for (int k = i + 1; k < j; ++k) sum += entries_[index(i, k)] * rhs.entries_[index(k, j)];
      out.entries_[index(i, j)] = sum;
    }
  }
  return out;
}

// Back substitution: (A X)_{ij} = 0 for i < j gives
// X_ij = -(A_ij + sum_{i<k<j} A_ik X_kj).
UnipotentMatrix UnipotentMatrix::inverse() const {
  UnipotentMatrix out(m_);
  for (int j = 2; j <= m_; ++j) {
    for (int i = j - 1; i >= 1; --i) {
      Rational sum = entries_[index(i, j)];
      for (int k = i + 1; k < j; ++k) sum += entries_[index(i, k)] * out.entries_[index(k, j)];
      out.entries_[index(i, j)] = -sum;
    }
  }
  return out;
}

std::string UnipotentMatrix::str() const {
  std::string out = "[";
  for (int i = 1; i <= m_; ++i) {
    out += i == 1 ? "[" : ", [";
    for (int j = 1; j <= m_; ++j) {
      if (j > 1) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

UnipotentMatrix UnipotentMatrix::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg + " in matrix literal", 1, static_cast<int>(pos) + 1);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  expect('[');
  for (;;) {
    expect('[');
    std::vector<Rational> row;
    for (;;) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '-' ||
                                   text[pos] == '+' || text[pos] == '/')) {
        ++pos;
      }
      if (start == pos) fail("expected a rational entry");
      std::string literal(text.substr(start, pos - start));
      if (!literal.empty() && literal[0] == '+') literal.erase(0, 1);
      try {
        row.emplace_back(literal);
      } catch (const std::exception&) {
        pos = start;
        fail("bad rational '" + literal + "'");
      }
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip();
  if (pos != text.size()) fail("trailing characters");

  const int m = static_cast<int>(rows.size());
  UnipotentMatrix a(m);
  for (int i = 1; i <= m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != m) throw ParseError("matrix literal is not square");
    for (int j = 1; j <= m; ++j) {
      const Rational& v = row[static_cast<std::size_t>(j - 1)];
      if (i == j && v != 1) throw ParseError("diagonal entries must be 1");
      if (i > j && v != 0) throw ParseError("entries below the diagonal must be 0");
      if (i < j) a.set(i, j, v);
    }
  }
  return a;
}

UnipotentMatrix u_mul(const UnipotentMatrix& a, const UnipotentMatrix& b) { return a * b; }
UnipotentMatrix u_inv(const UnipotentMatrix& a) { return a.inverse(); }

bool u_positive(const UnipotentMatrix& a, OrderRule rule) {
  const int m = a.size();
  if (rule == OrderRule::lower_central) {
    for (int k = 1; k < m; ++k) {
      for (int i = 1; i + k <= m; ++i) {
        const Rational v = a.at(i, i + k);
        if (v != 0) return v > 0;
      }
    }
  } else {
    for (int d = 3; d <= 2 * m - 1; ++d) {
      for (int i = 1; i <= m; ++i) {
        const int j = d - i;
        if (j <= i || j > m) continue;
        const Rational v = a.at(i, j);
        if (v != 0) return v > 0;
      }
    }
  }
  throw InvalidArgument("the identity matrix has no sign");
}

std::strong_ordering u_compare(const UnipotentMatrix& a, const UnipotentMatrix& b, OrderRule rule) {
  const UnipotentMatrix d = a.inverse() * b;
  if (d.is_identity()) return std::strong_ordering::equal;
  return u_positive(d, rule) ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace lorder
