#pragma once

#include <string>
#include <vector>

#include "gapvir/algebra.hpp"

namespace gapvir {

enum class InvolutionKind { Plus, Minus };

/// Conjugate-linear anti-involution theta^{+/-}_{alpha,beta}.
///
/// Plus:  L_n -> alpha^n L_{-n},  I_n^i -> alpha^n beta_{p-i} I_{-n-1}^{p-i},
///        C_0 -> C_0,  C_i -> alpha^{-1} beta_i beta_{p-i} C_i,
///        with alpha real nonzero and conj(beta_i) beta_{p-i} = alpha.
/// Minus: L_n -> -alpha^n L_n,  I_n^i -> alpha^n beta_i I_n^i,
///        C_0 -> -C_0,  C_i -> -alpha^{-1} beta_i beta_{p-i} C_i,
///        with |alpha| = |beta_i| = 1.
class AntiInvolution {
 public:
  static AntiInvolution plus(int p, Scalar alpha, std::vector<Scalar> beta) {
    AntiInvolution t(InvolutionKind::Plus, p, std::move(alpha), std::move(beta));
    if (!t.alpha_.is_real() || t.alpha_.is_zero()) {
      throw Error(ErrorKind::Configuration, "theta+ needs real nonzero alpha, got " + t.alpha_.to_string());
    }
    for (int i = 1; i < p; ++i) {
      if (t.beta(i).conj() * t.beta(p - i) != t.alpha_) {
        throw Error(ErrorKind::Configuration,
                    "theta+ constraint conj(beta_" + std::to_string(i) + ")*beta_" + std::to_string(p - i) +
                        " = alpha violated");
      }
    }
    return t;
  }

  static AntiInvolution minus(int p, Scalar alpha, std::vector<Scalar> beta) {
    AntiInvolution t(InvolutionKind::Minus, p, std::move(alpha), std::move(beta));
    if (t.alpha_.norm2() != Rational(1)) throw Error(ErrorKind::Configuration, "theta- needs |alpha| = 1");
    for (int i = 1; i < p; ++i) {
      if (t.beta(i).norm2() != Rational(1)) {
        throw Error(ErrorKind::Configuration, "theta- needs |beta_" + std::to_string(i) + "| = 1");
      }
    }
    return t;
  }

  /// theta^+_{1,(1,...,1)}, the default form for reducibility questions.
  static AntiInvolution standard(int p) { return plus(p, Scalar(1), std::vector<Scalar>(p - 1, Scalar(1))); }

  InvolutionKind kind() const { return kind_; }
  int p() const { return p_; }
  const Scalar& alpha() const { return alpha_; }
  const std::vector<Scalar>& betas() const { return beta_; }
  /// beta_i for 1 <= i <= p-1.
  const Scalar& beta(int i) const { return beta_.at(static_cast<std::size_t>(i - 1)); }

  Element apply(const Gen& g) const {
    GapVirasoro alg(p_);
    Element out(p_);
    const bool plus_kind = kind_ == InvolutionKind::Plus;
    switch (g.kind) {
      case GenKind::L:
        if (plus_kind) {
          out.add(Gen::L(-g.mode), alpha_.pow(g.mode));
        } else {
          out.add(g, -alpha_.pow(g.mode));
        }
        break;
      case GenKind::I:
        if (plus_kind) {
          out.add(Gen::I(-g.mode - 1, p_ - g.index), alpha_.pow(g.mode) * beta(p_ - g.index));
        } else {
          out.add(g, alpha_.pow(g.mode) * beta(g.index));
        }
        break;
      case GenKind::C:
        if (g.index == 0) {
          out.add(g, Scalar(plus_kind ? 1 : -1));
        } else {
          Scalar c = alpha_.inverse() * beta(g.index) * beta(p_ - g.index);
          out.add(g, plus_kind ? c : -c);
        }
        break;
    }
    return out;
  }

  /// Conjugate-linear extension.
  Element apply(const Element& x) const {
    if (x.p() != p_) throw Error(ErrorKind::Configuration, "involution and element have different p");
    Element out(p_);
    for (const auto& [g, c] : x.terms()) {
      Element img = apply(g);
      Scalar cc = c.conj();
      for (const auto& [h, d] : img.terms()) out.add(h, d * cc);
    }
    return out;
  }

  std::string describe() const {
    std::string s = kind_ == InvolutionKind::Plus ? "theta+" : "theta-";
    s += "(alpha=" + alpha_.to_string() + ", beta=[";
    for (std::size_t k = 0; k < beta_.size(); ++k) {
      if (k > 0) s += ",";
      s += beta_[k].to_string();
    }
    return s + "])";
  }

 private:
  AntiInvolution(InvolutionKind kind, int p, Scalar alpha, std::vector<Scalar> beta)
      : kind_(kind), p_(p), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (p < 2) throw Error(ErrorKind::Configuration, "p must be >= 2");
    if (static_cast<int>(beta_.size()) != p - 1) {
      throw Error(ErrorKind::Configuration,
                  "beta needs p-1 = " + std::to_string(p - 1) + " entries, got " + std::to_string(beta_.size()));
    }
  }

  InvolutionKind kind_;
  int p_;
  Scalar alpha_;
  std::vector<Scalar> beta_;
};

/// Chevalley map: L_n -> -L_{-n}, I_n^i -> -I_{-n-1}^{p-i}, C_j -> -C_j.
/// Linear, involutive and a Lie algebra automorphism (it negates every
/// weight), so x.w = chevalley(x) w turns lowest weight modules into
/// highest weight ones. Its negative is a linear anti-involution.
inline Element chevalley(const Element& x) {
  const int p = x.p();
  Element out(p);
  for (const auto& [g, c] : x.terms()) {
    switch (g.kind) {
      case GenKind::L: out.add(Gen::L(-g.mode), -c); break;
      case GenKind::I: out.add(Gen::I(-g.mode - 1, p - g.index), -c); break;
      case GenKind::C: out.add(g, -c); break;
    }
  }
  return out;
}

}  // namespace gapvir
