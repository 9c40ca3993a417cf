#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gapvir/error.hpp"
#include "gapvir/lincomb.hpp"
#include "gapvir/scalar.hpp"

namespace gapvir {

enum class GenKind : std::uint8_t { L = 0, I = 1, C = 2 };

/// Basis label of the gap-p Virasoro algebra: L[n], I[n,i] (1 <= i <= p-1)
/// or the central C[j] (0 <= j <= p/2). `index` is i for I, j for C, 0 for L.
struct Gen {
  GenKind kind = GenKind::L;
  int mode = 0;
  int index = 0;

  static constexpr Gen L(int n) { return {GenKind::L, n, 0}; }
  static constexpr Gen I(int n, int i) { return {GenKind::I, n, i}; }

  bool is_central() const { return kind == GenKind::C; }
  bool is_L0() const { return kind == GenKind::L && mode == 0; }
  bool in_cartan() const { return is_central() || is_L0(); }
  /// Spans g_-: L_n (n < 0) and I_n^i (n < 0).
  bool is_lowering() const { return kind != GenKind::C && mode < 0; }
  /// Spans g_+: L_n (n > 0) and I_n^i (n >= 0).
  bool is_raising() const {
    return (kind == GenKind::L && mode > 0) || (kind == GenKind::I && mode >= 0);
  }

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Ordering of lowering factors inside a PBW monomial: all L's left of all
/// I's, L by mode magnitude descending, I by (mode magnitude, i) descending.
/// Smaller key sorts further left.
inline auto factor_key(const Gen& g) {
  struct Key {
    int kind, mode, index;
    auto operator<=>(const Key&) const = default;
  };
  return Key{static_cast<int>(g.kind), g.mode, -g.index};
}

inline bool factor_less(const Gen& a, const Gen& b) { return factor_key(a) < factor_key(b); }

class Element;

/// The gap-p Virasoro algebra for a fixed p >= 2: basis construction with
/// C-index normalisation, the bracket, weights and text I/O.
class GapVirasoro {
 public:
  explicit GapVirasoro(int p) : p_(p) {
    if (p < 2) throw Error(ErrorKind::Configuration, "p must be >= 2, got " + std::to_string(p));
  }

  int p() const { return p_; }
  int half() const { return p_ / 2; }

  Gen L(int n) const { return Gen::L(n); }

  Gen I(int n, int i) const {
    if (i < 1 || i > p_ - 1) {
      throw Error(ErrorKind::Index, "I index " + std::to_string(i) + " outside 1.." + std::to_string(p_ - 1));
    }
    return Gen::I(n, i);
  }

  /// C_j with the alias C_j = C_{p-j} folded so the stored index is <= p/2.
  Gen C(int j) const {
    if (j < 0 || j > p_ - 1) {
      throw Error(ErrorKind::Index, "C index " + std::to_string(j) + " outside 0.." + std::to_string(p_ - 1));
    }
    return {GenKind::C, 0, central_index(j)};
  }

  int central_index(int j) const { return j > p_ / 2 ? p_ - j : j; }

  /// ad L_0 eigenvalue: -n for L_n, -(n + i/p) for I_n^i, 0 for central.
  Rational weight_of(const Gen& g) const {
    switch (g.kind) {
      case GenKind::L: return Rational(-g.mode);
      case GenKind::I: return -(Rational(g.mode) + Rational(g.index, p_));
      case GenKind::C: return Rational(0);
    }
    return Rational(0);
  }

  /// p times weight_of; always an integer.
  int p_level(const Gen& g) const {
    switch (g.kind) {
      case GenKind::L: return -g.mode * p_;
      case GenKind::I: return -(g.mode * p_ + g.index);
      case GenKind::C: return 0;
    }
    return 0;
  }

  inline Element bracket(const Gen& x, const Gen& y) const;

  std::string render(const Gen& g) const {
    switch (g.kind) {
      case GenKind::L: return "L[" + std::to_string(g.mode) + "]";
      case GenKind::I: return "I[" + std::to_string(g.mode) + "," + std::to_string(g.index) + "]";
      case GenKind::C: return "C[" + std::to_string(g.index) + "]";
    }
    return "?";
  }

  inline Gen parse_gen(std::string_view text) const;
  inline Element parse_element(std::string_view text) const;

  friend bool operator==(const GapVirasoro& a, const GapVirasoro& b) { return a.p_ == b.p_; }

 private:
  int p_;
};

/// A finite linear combination of basis elements of one gap-p algebra.
class Element {
 public:
  explicit Element(int p) : p_(p) {}
  Element(int p, const Gen& g, Scalar coeff = Scalar(1)) : p_(p) { terms_.add(g, coeff); }

  int p() const { return p_; }
  const LinComb<Gen>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Gen& g) const { return terms_.coefficient(g); }

  void add(const Gen& g, const Scalar& c) { terms_.add(g, c); }

  Element& operator+=(const Element& o) {
    check_same_p(o);
    terms_ += o.terms_;
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same_p(o);
    terms_ -= o.terms_;
    return *this;
  }
  Element& operator*=(const Scalar& s) {
    terms_ *= s;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }

  void check_same_p(const Element& o) const {
    if (o.p_ != p_) {
      throw Error(ErrorKind::Configuration,
                  "elements of different algebras (p=" + std::to_string(p_) + " vs p=" + std::to_string(o.p_) + ")");
    }
  }

  /// "4*L[0] + 1/2*C[0]"; complex coefficients are parenthesised.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    GapVirasoro alg(p_);
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string coeff = c.to_string();
      if (!c.is_real() && !c.re().is_zero()) coeff = "(" + coeff + ")";
      out += coeff + "*" + alg.render(g);
    }
    return out;
  }

 private:
  int p_;
  LinComb<Gen> terms_;
};

inline Element GapVirasoro::bracket(const Gen& x, const Gen& y) const {
  Element out(p_);
  if (x.is_central() || y.is_central()) return out;
  if (x.kind == GenKind::L && y.kind == GenKind::L) {
    const int m = x.mode;
    const int n = y.mode;
    out.add(Gen::L(m + n), Scalar(m - n));
    if (m + n == 0) {
      long m3 = static_cast<long>(m) * m * m - m;
      out.add(C(0), Scalar(Rational(m3, 12)));
    }
    return out;
  }
  if (x.kind == GenKind::I && y.kind == GenKind::I) {
    if (x.index + y.index == p_ && x.mode + y.mode + 1 == 0) {
      out.add(C(std::min(x.index, p_ - x.index)), Scalar(Rational(x.mode) + Rational(x.index, p_)));
    }
    return out;
  }
  if (x.kind == GenKind::L) {  // [L_m, I_n^i] = -(n + i/p) I_{m+n}^i
    out.add(Gen::I(x.mode + y.mode, y.index), Scalar(-(Rational(y.mode) + Rational(y.index, p_))));
    return out;
  }
  out.add(Gen::I(x.mode + y.mode, x.index), Scalar(Rational(x.mode) + Rational(x.index, p_)));
  return out;
}

/// Bilinear extension of the basis bracket.
inline Element bracket(const Element& x, const Element& y) {
  x.check_same_p(y);
  GapVirasoro alg(x.p());
  Element out(x.p());
  for (const auto& [gx, cx] : x.terms()) {
    for (const auto& [gy, cy] : y.terms()) {
      Element b = alg.bracket(gx, gy);
      for (const auto& [g, c] : b.terms()) out.add(g, c * cx * cy);
    }
  }
  return out;
}

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  return s;
}

inline int parse_int(const std::string& s, std::string_view context) {
  if (s.empty()) throw Error(ErrorKind::Parse, "missing integer in '" + std::string(context) + "'");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::Parse, "malformed integer in '" + std::string(context) + "'");
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw Error(ErrorKind::Parse, "malformed integer in '" + std::string(context) + "'");
  }
  return std::stoi(s);
}

}  // namespace detail

inline Gen GapVirasoro::parse_gen(std::string_view text) const {
  std::string s = detail::strip_spaces(text);
  if (s.size() < 4 || s[1] != '[' || s.back() != ']') {
    throw Error(ErrorKind::Parse, "malformed generator '" + std::string(text) + "'");
  }
  std::string inner = s.substr(2, s.size() - 3);
  switch (s[0]) {
    case 'L': return L(detail::parse_int(inner, text));
    case 'C': return C(detail::parse_int(inner, text));
    case 'I': {
      auto comma = inner.find(',');
      if (comma == std::string::npos) throw Error(ErrorKind::Parse, "I needs [n,i]: '" + std::string(text) + "'");
      return I(detail::parse_int(inner.substr(0, comma), text), detail::parse_int(inner.substr(comma + 1), text));
    }
    default: throw Error(ErrorKind::Parse, "unknown generator '" + std::string(text) + "'");
  }
}

/// Parses the to_string form: terms "[coeff*]X[..]" joined by '+'. A bare
/// leading '-' means coefficient -1.
inline Element GapVirasoro::parse_element(std::string_view text) const {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty element");
  Element out(p_);
  if (s == "0") return out;
  std::vector<std::string> pieces;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == '+' && depth == 0 && !cur.empty() && cur.back() != '*') {
      pieces.push_back(cur);
      cur.clear();
      continue;
    }
    if (ch == '-' && depth == 0 && !cur.empty() && cur.back() != '*' && cur.back() != '+') {
      pieces.push_back(cur);
      cur = "-";
      continue;
    }
    cur.push_back(ch);
  }
  pieces.push_back(cur);
  for (const auto& piece : pieces) {
    auto star = piece.rfind('*');
    Scalar coeff(1);
    std::string gen_text = piece;
    if (star != std::string::npos) {
      std::string c = piece.substr(0, star);
      if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
      coeff = Scalar::parse(c);
      gen_text = piece.substr(star + 1);
    } else if (!piece.empty() && piece[0] == '-') {
      coeff = Scalar(-1);
      gen_text = piece.substr(1);
    }
    out.add(parse_gen(gen_text), coeff);
  }
  return out;
}

}  // namespace gapvir
