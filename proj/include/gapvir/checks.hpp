#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gapvir/involution.hpp"
#include "gapvir/sampling.hpp"

namespace gapvir {

/// Every generator with mode in [-window, window]: L_n, I_n^i, and C_0..C_{p/2}.
inline std::vector<Gen> basis_window(int p, int window) {
  GapVirasoro alg(p);
  std::vector<Gen> out;
  for (int n = -window; n <= window; ++n) out.push_back(alg.L(n));
  for (int n = -window; n <= window; ++n) {
    for (int i = 1; i < p; ++i) out.push_back(alg.I(n, i));
  }
  for (int j = 0; j <= p / 2; ++j) out.push_back(alg.C(j));
  return out;
}

struct JacobiCheck {
  bool antisymmetry = true;
  bool jacobi = true;
  long pairs = 0;
  long triples = 0;
  std::optional<std::array<Gen, 3>> witness;  // a failing triple (or pair, third repeated)
  bool pass() const { return antisymmetry && jacobi; }
};

/// [x,y] = -[y,x] on all pairs and the Jacobi identity on all triples of
/// distinct window generators (triples with a repeat follow from antisymmetry).
inline JacobiCheck jacobi_check(int p, int window) {
  GapVirasoro alg(p);
  const auto gens = basis_window(p, window);
  JacobiCheck out;
  std::vector<std::vector<Element>> br(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    br[a].reserve(gens.size());
    for (std::size_t b = 0; b < gens.size(); ++b) br[a].push_back(alg.bracket(gens[a], gens[b]));
  }
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      ++out.pairs;
      Element sum = br[a][b];
      sum += br[b][a];
      if (!sum.is_zero() && out.antisymmetry) {
        out.antisymmetry = false;
        out.witness = std::array<Gen, 3>{gens[a], gens[b], gens[b]};
      }
    }
  }
  // [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0, expanding the inner bracket termwise
  auto outer = [&](const Gen& x, const Element& inner, Element& acc) {
    for (const auto& [g, c] : inner.terms()) {
      Element t = alg.bracket(x, g);
      t *= c;
      acc += t;
    }
  };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      for (std::size_t c = b + 1; c < gens.size(); ++c) {
        ++out.triples;
        Element acc(p);
        outer(gens[a], br[b][c], acc);
        outer(gens[b], br[c][a], acc);
        outer(gens[c], br[a][b], acc);
        if (!acc.is_zero() && out.jacobi) {
          out.jacobi = false;
          out.witness = std::array<Gen, 3>{gens[a], gens[b], gens[c]};
        }
      }
    }
  }
  return out;
}

struct InvolutionAxioms {
  bool involutive = true;           // theta^2 = id
  bool conjugate_linear = true;     // theta(a x + y) = conj(a) theta(x) + theta(y)
  bool anti_multiplicative = true;  // theta[x,y] = [theta y, theta x]
  bool virasoro_stable = true;      // theta(span{L_n, C_0}) inside the same span
  bool heisenberg_stable = true;    // theta(span{I_n^i, C_j (j >= 1)}) inside the same span
  std::vector<std::string> failures;
  bool pass() const {
    return involutive && conjugate_linear && anti_multiplicative && virasoro_stable && heisenberg_stable;
  }
};

/// Axioms of a conjugate-linear anti-involution on the window generators;
/// conjugate-linearity uses coefficients drawn from `sampler`.
inline InvolutionAxioms involution_axioms(const AntiInvolution& theta, int window, Sampler& sampler) {
  const int p = theta.p();
  GapVirasoro alg(p);
  const auto gens = basis_window(p, window);
  InvolutionAxioms out;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) out.failures.push_back(what);
    flag = false;
  };
  auto in_virasoro = [](const Gen& g) { return g.kind == GenKind::L || (g.kind == GenKind::C && g.index == 0); };

  for (const auto& g : gens) {
    Element x(p);
    x.add(g, Scalar(1));
    if (!(theta.apply(theta.apply(x)) == x)) fail(out.involutive, "theta^2 != id on " + alg.render(g));
    const Element image = theta.apply(g);
    for (const auto& [h, c] : image.terms()) {
      if (in_virasoro(g) != in_virasoro(h)) {
        fail(in_virasoro(g) ? out.virasoro_stable : out.heisenberg_stable,
             "theta(" + alg.render(g) + ") leaves its subalgebra");
      }
    }
  }
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      Element lhs = theta.apply(alg.bracket(x, y));
      Element tx = theta.apply(x);
      Element ty = theta.apply(y);
      Element rhs = bracket(ty, tx);
      if (!(lhs == rhs)) {
        fail(out.anti_multiplicative, "theta[" + alg.render(x) + "," + alg.render(y) + "] != [theta y, theta x]");
      }
    }
  }
  for (int t = 0; t < 64; ++t) {
    Element x = sampler.element(p, window);
    Element y = sampler.element(p, window);
    Scalar a = sampler.scalar();
    Element ax = x;
    ax *= a;
    ax += y;
    Element rhs = theta.apply(x);
    rhs *= a.conj();
    rhs += theta.apply(y);
    if (!(theta.apply(ax) == rhs)) fail(out.conjugate_linear, "conjugate-linearity fails on " + x.to_string());
  }
  return out;
}

}  // namespace gapvir
