#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gapvir/fock.hpp"
#include "gapvir/gram.hpp"

namespace gapvir {

/// Vector of M_H (x) M_Vir(psi): pairs (Fock monomial, Virasoro monomial).
using TensorKey = std::pair<Monomial, Monomial>;
using TensorVector = LinComb<TensorKey>;

/// The full Verma module maps onto the tensor product of the Fock space and
/// the Virasoro Verma module of the shifted weight psi: I's act on the first
/// factor and L_n acts as sugawara_L(n) (x) 1 + 1 (x) L_n.
class TensorModel {
 public:
  explicit TensorModel(const HighestWeight& w)
      : weight_(w), fock_(w), vir_(virasoro_host(w)) {
    if (!w.J_is_full()) throw Error(ErrorKind::Unsupported, "tensor model needs every C_i nonzero");
  }

  int p() const { return weight_.p(); }
  const FockSpace& fock() const { return fock_; }
  const VermaModule& virasoro() const { return vir_; }

  /// Tensor basis at p-level d, grouped by the Fock level d1 ascending.
  std::vector<TensorKey> basis(int d) const {
    std::vector<TensorKey> out;
    for (int d1 = 0; d1 <= d; ++d1) {
      for (const auto& a : fock_.basis(d1)) {
        for (const auto& b : pbw_basis(vir_.weight(), d - d1, SectorKind::Virasoro)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  TensorVector act(const Gen& g, const TensorVector& x) const {
    TensorVector out;
    for (const auto& [key, c] : x) {
      const auto& [a, b] = key;
      if (g.kind == GenKind::L) {
        for (const auto& [a2, c2] : fock_.sugawara_L(g.mode, a)) out.add({a2, b}, c * c2);
        for (const auto& [b2, c2] : vir_.act(g, b)) out.add({a, b2}, c * c2);
      } else if (g.kind == GenKind::C && g.index == 0) {
        out.add(key, c * weight_.C(0));
      } else {
        for (const auto& [a2, c2] : fock_.heis_act(g, a)) out.add({a2, b}, c * c2);
      }
    }
    return out;
  }

  /// Image of the PBW monomial m v.
  TensorVector image(const Monomial& m) const {
    TensorVector x(TensorKey{Monomial{}, Monomial{}});
    for (auto it = m.rbegin(); it != m.rend(); ++it) x = act(*it, x);
    return x;
  }

 private:
  static VermaModule virasoro_host(const HighestWeight& w) {
    ShiftedWeight psi = shifted_weight(w);
    std::vector<Scalar> c(static_cast<std::size_t>(w.p() / 2 + 1));
    c[0] = psi.C0;
    return VermaModule(HighestWeight(w.p(), psi.L0, std::move(c)));
  }

  HighestWeight weight_;
  FockSpace fock_;
  VermaModule vir_;
};

struct TensorGramCheck {
  int d = 0;
  Matrix full;           // Gram of the full Verma module
  Matrix assembled;      // P G_T P*
  Matrix projection;     // P: PBW basis -> tensor basis
  bool pass = false;
};

/// Compares the full Gram matrix at p-level d with P G_T P*, where G_T is
/// block diagonal in the Fock level with blocks kron(G_H(d1), G_V(d - d1)).
inline TensorGramCheck tensor_gram_check(const HighestWeight& w, const std::vector<Scalar>& beta, int d) {
  const auto theta = AntiInvolution::plus(w.p(), Scalar(1), beta);
  TensorModel T(w);
  VermaModule M(w);

  TensorGramCheck out;
  out.d = d;
  out.full = gram(M, theta, d).entries;
  const auto pbw = pbw_basis(w, d);
  const auto tbasis = T.basis(d);
  std::map<TensorKey, std::size_t> col_of;
  for (std::size_t t = 0; t < tbasis.size(); ++t) col_of.emplace(tbasis[t], t);

  out.projection = Matrix(pbw.size(), tbasis.size());
  for (std::size_t r = 0; r < pbw.size(); ++r) {
    for (const auto& [key, c] : T.image(pbw[r])) out.projection(r, col_of.at(key)) = c;
  }

  // G_H from the Heisenberg sector of the full module, G_V from the Virasoro host
  const auto std_theta = AntiInvolution::standard(w.p());
  Matrix GT(tbasis.size(), tbasis.size());
  std::size_t offset = 0;
  for (int d1 = 0; d1 <= d; ++d1) {
    const Matrix GH = gram(M, theta, d1, SectorKind::Heisenberg).entries;
    const Matrix GV = gram(T.virasoro(), std_theta, d - d1, SectorKind::Virasoro).entries;
    for (std::size_t a = 0; a < GH.rows(); ++a) {
      for (std::size_t b = 0; b < GV.rows(); ++b) {
        for (std::size_t a2 = 0; a2 < GH.rows(); ++a2) {
          for (std::size_t b2 = 0; b2 < GV.rows(); ++b2) {
            GT(offset + a * GV.rows() + b, offset + a2 * GV.rows() + b2) = GH(a, a2) * GV(b, b2);
          }
        }
      }
    }
    offset += GH.rows() * GV.rows();
  }
  out.assembled = out.projection * GT * out.projection.conj_transpose();
  out.pass = out.assembled == out.full;
  return out;
}

}  // namespace gapvir
