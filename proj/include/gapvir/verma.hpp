#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gapvir/linalg.hpp"
#include "gapvir/pbw.hpp"

namespace gapvir {

using ModuleVector = LinComb<Monomial>;

inline ModuleVector highest_weight_vector() { return ModuleVector(Monomial{}); }

/// Verma module M_{g,phi} = U(g_-) v_phi with PBW straightening.
///
/// A generator acting on a canonical monomial y1*rest is resolved as
///   g y1 rest = y1 (g rest) + [g, y1] rest
/// unless g is lowering and may already stand leftmost. Results are memoised
/// per (generator, monomial); an instance is therefore not safe to share
/// between threads, but separate instances are independent.
class VermaModule {
 public:
  explicit VermaModule(HighestWeight weight) : weight_(std::move(weight)), alg_(weight_.p()) {}

  const HighestWeight& weight() const { return weight_; }
  int p() const { return weight_.p(); }
  const GapVirasoro& algebra() const { return alg_; }

  ModuleVector act(const Gen& g, const Monomial& m) const { return act_monomial(g, m); }

  ModuleVector act(const Gen& g, const ModuleVector& x) const {
    ModuleVector out;
    for (const auto& [m, c] : x) out.add_scaled(act_monomial(g, m), c);
    return out;
  }

  ModuleVector act(const Element& e, const ModuleVector& x) const {
    if (e.p() != p()) throw Error(ErrorKind::Configuration, "element and module have different p");
    ModuleVector out;
    for (const auto& [g, c] : e.terms()) out.add_scaled(act(g, x), c);
    return out;
  }

  /// Applies the word g_1 g_2 ... g_k (g_k acts first) to x.
  ModuleVector act_word(const std::vector<Gen>& word, ModuleVector x) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = act(*it, x);
    return x;
  }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  const ModuleVector& act_monomial(const Gen& g, const Monomial& m) const {
    auto key = std::make_pair(g, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ModuleVector result = compute(g, m);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  ModuleVector compute(const Gen& g, const Monomial& m) const {
    const int level = monomial_level(p(), m);
    if (g.is_central()) return ModuleVector(m, weight_.C(g.index));
    if (g.is_L0()) return ModuleVector(m, weight_.L0() + Scalar(Rational(level, p())));
    if (g.is_raising() && level + alg_.p_level(g) < 0) return {};
    if (m.empty()) {
      if (g.is_raising()) return {};
      return ModuleVector(Monomial{g});
    }
    const Gen& head = m.front();
    if (g.is_lowering() && !factor_less(head, g)) {
      Monomial out;
      out.reserve(m.size() + 1);
      out.push_back(g);
      out.insert(out.end(), m.begin(), m.end());
      return ModuleVector(std::move(out));
    }
    Monomial rest(m.begin() + 1, m.end());
    ModuleVector result = act(head, act_monomial(g, rest));
    Element comm = alg_.bracket(g, head);
    for (const auto& [h, c] : comm.terms()) result.add_scaled(act_monomial(h, rest), c);
    return result;
  }

  HighestWeight weight_;
  GapVirasoro alg_;
  mutable std::map<std::pair<Gen, Monomial>, ModuleVector> memo_;
};

inline long graded_dim(const VermaModule& M, int d, SectorKind kind = SectorKind::Full) {
  return graded_dim(M.weight(), d, kind);
}

/// Finite set of raising operators whose common kernel is the space of
/// singular vectors at p-level d in the given sector.
inline std::vector<Gen> raising_set(const HighestWeight& w, SectorKind kind, int d) {
  const int p = w.p();
  Sector sector = Sector::of(w, kind);
  std::vector<Gen> ops;
  if (sector.has_L) {
    ops.push_back(Gen::L(1));
    ops.push_back(Gen::L(2));
    for (int i = 1; i < p; ++i) {
      if (sector.allowed_i[static_cast<std::size_t>(i)]) ops.push_back(Gen::I(0, i));
    }
  } else {
    // abelian positive part: every mode is needed separately
    for (int n = 0; n * p < d; ++n) {
      for (int i = 1; i < p; ++i) {
        if (sector.allowed_i[static_cast<std::size_t>(i)] && n * p + i <= d) ops.push_back(Gen::I(n, i));
      }
    }
  }
  return ops;
}

/// Basis of the singular vectors at p-level d (annihilated by the raising set).
inline std::vector<ModuleVector> singular_vectors(const VermaModule& M, int d, SectorKind kind = SectorKind::Full,
                                                  std::vector<Gen> ops = {}) {
  if (d < 1) return {};
  std::vector<Monomial> basis = pbw_basis(M.weight(), d, kind);
  if (basis.empty()) return {};
  if (ops.empty()) ops = raising_set(M.weight(), kind, d);

  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (std::size_t o = 0; o < ops.size(); ++o) {
      for (const auto& [mono, c] : M.act(ops[o], basis[b])) {
        auto [it, inserted] = row_of.try_emplace({o, mono}, row_of.size());
        columns[b].emplace_back(it->second, c);
      }
    }
  }
  Matrix A(row_of.size(), basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    for (const auto& [r, c] : columns[b]) A(r, b) += c;
  }
  std::vector<ModuleVector> out;
  for (const auto& coeffs : nullspace(A)) {
    ModuleVector v;
    for (std::size_t b = 0; b < basis.size(); ++b) v.add(basis[b], coeffs[b]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gapvir
