#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapvir/linalg.hpp"
#include "gapvir/pbw.hpp"

namespace gapvir {

/// Vector of the Heisenberg Verma module M_{H_J}: monomials use only
/// I-factors with i in J.
using FockVector = LinComb<Monomial>;

struct ShiftedWeight {
  Scalar L0;
  Scalar C0;
};

/// psi(L0) = phi(L0) - sum_{j in J} j(p-j)/(4p^2),  psi(C0) = phi(C0) - |J|.
inline ShiftedWeight shifted_weight(const HighestWeight& w) {
  return {w.L0() - Scalar(w.heisenberg_vacuum_energy()), w.C(0) - Scalar(static_cast<long>(w.J().size()))};
}

/// Oscillator realisation: the Heisenberg module M_{H_J} with I_n^i acting
/// for i in J, C_0 acting by |J|, and L_n acting through the normal-ordered
/// quadratic
///   L_n = sum_{j in J} 1/(2 phi(C_j)) sum_k :I_k^j I_{n-k-1}^{p-j}:
///         + delta_{n,0} sum_{j in J} j(p-j)/(4p^2).
class FockSpace {
 public:
  explicit FockSpace(HighestWeight weight) : weight_(std::move(weight)), J_(weight_.J()) {}

  const HighestWeight& weight() const { return weight_; }
  int p() const { return weight_.p(); }
  const std::vector<int>& J() const { return J_; }
  Sector sector() const { return Sector::make(p(), SectorKind::Heisenberg, J_); }

  std::vector<Monomial> basis(int d) const { return pbw_basis(sector(), d); }

  /// Action of I_n^i or a central element.
  FockVector heis_act(const Gen& g, const FockVector& x) const {
    FockVector out;
    for (const auto& [m, c] : x) out.add_scaled(heis_act(g, m), c);
    return out;
  }

  FockVector heis_act(const Gen& g, const Monomial& m) const {
    const int p = this->p();
    switch (g.kind) {
      case GenKind::L:
        throw Error(ErrorKind::Configuration, "L_n acts through sugawara_L, not heis_act");
      case GenKind::C:
        if (g.index == 0) return FockVector(m, Scalar(static_cast<long>(J_.size())));
        return FockVector(m, weight_.C(g.index));
      case GenKind::I: break;
    }
    if (!weight_.in_J(g.index)) return {};
    if (g.mode < 0) {
      Monomial out = m;
      auto pos = std::upper_bound(out.begin(), out.end(), g, factor_less);
      out.insert(pos, g);
      return FockVector(std::move(out));
    }
    // annihilator: contracts with each factor I_{-(n+1)}^{p-i}
    const Gen partner = Gen::I(-(g.mode + 1), p - g.index);
    const long multiplicity = std::count(m.begin(), m.end(), partner);
    if (multiplicity == 0) return {};
    Monomial rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), partner));
    Scalar coeff = Scalar(Rational(g.mode) + Rational(g.index, p)) * weight_.C(g.index) * Scalar(multiplicity);
    return FockVector(std::move(rest), coeff);
  }

  FockVector sugawara_L(int n, const FockVector& x) const {
    FockVector out;
    for (const auto& [m, c] : x) out.add_scaled(sugawara_L(n, m), c);
    return out;
  }

  const FockVector& sugawara_L(int n, const Monomial& m) const {
    auto key = std::make_pair(n, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    FockVector result = compute_sugawara(n, m);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  FockVector compute_sugawara(int n, const Monomial& m) const {
    const int p = this->p();
    const int d = monomial_level(p, m);
    FockVector x(m);
    FockVector out;
    // terms whose right factor has mode > d/p annihilate x
    const int bound = d / p + std::abs(n) + 1;
    for (int j : J_) {
      const Scalar prefactor = (Scalar(2) * weight_.C(j)).inverse();
      for (int k = n - 1 - bound; k <= bound; ++k) {
        const int l = n - k - 1;
        const Gen left_k = Gen::I(k, j);
        const Gen right_l = Gen::I(l, p - j);
        FockVector term = k < l ? heis_act(left_k, heis_act(right_l, x)) : heis_act(right_l, heis_act(left_k, x));
        out.add_scaled(term, prefactor);
      }
    }
    if (n == 0) out.add(m, Scalar(weight_.heisenberg_vacuum_energy()));
    return out;
  }

  HighestWeight weight_;
  std::vector<int> J_;
  mutable std::map<std::pair<int, Monomial>, FockVector> memo_;
};

struct RelationCheck {
  int m = 0;
  int n = 0;
  int max_level = 0;
  bool pass = true;
  Scalar central_term;                  // delta_{m+n,0} (m^3-m)/12 |J|
  std::optional<Monomial> witness;      // first basis vector where it fails
};

/// [L_m, L_n] = (m-n) L_{m+n} + delta_{m+n,0} (m^3-m)/12 |J| on every Fock
/// basis vector of p-level <= max_level.
inline RelationCheck virasoro_relation_check(const FockSpace& F, int m, int n, int max_level) {
  RelationCheck rc;
  rc.m = m;
  rc.n = n;
  rc.max_level = max_level;
  if (m + n == 0) {
    rc.central_term = Scalar(Rational(static_cast<long>(m) * m * m - m, 12)) * Scalar(static_cast<long>(F.J().size()));
  }
  for (int d = 0; d <= max_level && rc.pass; ++d) {
    for (const auto& x : F.basis(d)) {
      FockVector v(x);
      FockVector lhs = F.sugawara_L(m, F.sugawara_L(n, v)) - F.sugawara_L(n, F.sugawara_L(m, v));
      FockVector rhs = F.sugawara_L(m + n, v) * Scalar(m - n);
      rhs.add(x, rc.central_term);
      if (!(lhs == rhs)) {
        rc.pass = false;
        rc.witness = x;
        break;
      }
    }
  }
  return rc;
}

/// [L_m, I_n^i] = -(n + i/p) I_{m+n}^i on every Fock basis vector of p-level
/// <= max_level.
inline bool mixed_relation_check(const FockSpace& F, int m, int n, int i, int max_level) {
  const Scalar coeff = -(Scalar(n) + Scalar(Rational(i, F.p())));
  for (int d = 0; d <= max_level; ++d) {
    for (const auto& x : F.basis(d)) {
      FockVector v(x);
      FockVector lhs = F.sugawara_L(m, F.heis_act(Gen::I(n, i), v)) - F.heis_act(Gen::I(n, i), F.sugawara_L(m, v));
      FockVector rhs = F.heis_act(Gen::I(m + n, i), v) * coeff;
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

/// Vectors at p-level d killed by every I_n^i (0 <= n <= max_mode, i in J).
inline std::vector<FockVector> fock_singular_vectors(const FockSpace& F, int d, int max_mode = 3) {
  std::vector<Monomial> basis = F.basis(d);
  if (d < 1 || basis.empty()) return {};
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<Gen> ops;
  for (int n = 0; n <= max_mode; ++n) {
    for (int i : F.J()) ops.push_back(Gen::I(n, i));
  }
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t o = 0; o < ops.size(); ++o) {
      for (const auto& [mono, c] : F.heis_act(ops[o], basis[b])) {
        auto [it, inserted] = row_of.try_emplace({o, mono}, row_of.size());
        cols[b].emplace_back(it->second, c);
      }
    }
  }
  Matrix A(row_of.size(), basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (const auto& [r, c] : cols[b]) A(r, b) += c;
  }
  std::vector<FockVector> out;
  for (const auto& coeffs : nullspace(A)) {
    FockVector v;
    for (std::size_t b = 0; b < basis.size(); ++b) v.add(basis[b], coeffs[b]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gapvir
