#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "gapvir/error.hpp"
#include "gapvir/rational.hpp"

namespace gapvir {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Gaussian rational re + im*i. The ground field for every computation in
/// the library; there is no floating point anywhere.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
    Rational n = norm2();
    return Scalar(re_ / n, -im_ / n);
  }

  std::optional<Scalar> inverse_or_none() const {
    if (is_zero()) return std::nullopt;
    return inverse();
  }

  /// Integer power; negative exponents require a nonzero base.
  Scalar pow(long n) const {
    Scalar base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Scalar result(1);
    while (e > 0) {
      if (e & 1UL) result *= base;
      base *= base;
      e >>= 1UL;
    }
    return result;
  }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "scalar division by zero");
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// "p/q", "r/s*i" or "p/q+r/s*i" (minus sign folded into the joiner).
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag = im_.abs().to_string() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
  }

  /// Inverse of to_string. Zero parts may be omitted, "*" before i is
  /// optional, and "a+-b*i" is accepted.
  static Scalar parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') s.push_back(ch);
    }
    if (s.empty()) throw Error(ErrorKind::Parse, "empty scalar");
    if (s.back() != 'i') return Scalar(Rational::parse(s));

    std::size_t split = std::string::npos;
    for (std::size_t k = s.size() - 1; k > 0; --k) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '+' && s[k - 1] != '-' && s[k - 1] != '/') {
        split = k;
        break;
      }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    if (!im_part.empty() && im_part[0] == '+') im_part.erase(0, 1);
    im_part.pop_back();  // 'i'
    const bool starred = !im_part.empty() && im_part.back() == '*';
    if (starred) im_part.pop_back();
    Rational im;
    if (starred && (im_part.empty() || im_part == "+" || im_part == "-")) {
      throw Error(ErrorKind::Parse, "missing coefficient before '*i' in '" + s + "'");
    } else if (im_part.empty() || im_part == "+") {
      im = Rational(1);
    } else if (im_part == "-") {
      im = Rational(-1);
    } else {
      im = Rational::parse(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : Rational::parse(re_part);
    return Scalar(std::move(re), std::move(im));
  }

 private:
  Rational re_;
  Rational im_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << z.to_string(); }

/// Sign of a real scalar; complex input is a NotReal error.
inline Sign sign_of_real(const Scalar& x) {
  if (!x.is_real()) throw Error(ErrorKind::NotReal, "sign requested for non-real " + x.to_string());
  int s = x.re().sign();
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}

}  // namespace gapvir
