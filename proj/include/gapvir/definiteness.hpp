#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gapvir/linalg.hpp"

namespace gapvir {

enum class Definiteness { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite, NegativeContaining };

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefiniteSingular: return "PositiveSemidefiniteSingular";
    case Definiteness::Indefinite: return "Indefinite";
    case Definiteness::NegativeContaining: return "NegativeContaining";
  }
  return "?";
}

struct DefinitenessVerdict {
  Definiteness kind = Definiteness::PositiveDefinite;
  int kernel_dim = 0;            // meaningful for every kind: n - rank
  std::vector<int> witness;      // Indefinite only: indefinite principal submatrix
  int positive = 0;              // inertia
  int negative = 0;
  int zero = 0;

  bool is_psd() const {
    return kind == Definiteness::PositiveDefinite || kind == Definiteness::PositiveSemidefiniteSingular;
  }
};

/// Exact inertia of a Hermitian matrix by LDL* with complete symmetric
/// pivoting (largest |diagonal| first). When every remaining diagonal entry
/// is zero but an off-diagonal one is not, a 2x2 pivot [[0,a],[conj a,0]]
/// is taken; it carries one positive and one negative eigenvalue.
inline DefinitenessVerdict definiteness(const Matrix& G) {
  if (!G.is_hermitian()) throw Error(ErrorKind::Integrity, "Gram matrix is not Hermitian");
  const std::size_t n = G.rows();
  Matrix A = G;
  std::vector<std::size_t> active(n);
  for (std::size_t k = 0; k < n; ++k) active[k] = k;

  DefinitenessVerdict v;
  std::vector<int> order;
  std::size_t both_signs_at = 0;  // prefix length of `order` when both signs first seen

  auto note_signs = [&]() {
    if (both_signs_at == 0 && v.positive > 0 && v.negative > 0) both_signs_at = order.size();
  };

  while (!active.empty()) {
    std::size_t best = active.size();
    Rational best_abs;
    for (std::size_t a = 0; a < active.size(); ++a) {
      Rational d = A(active[a], active[a]).re().abs();
      if (!d.is_zero() && (best == active.size() || d > best_abs)) {
        best = a;
        best_abs = d;
      }
    }
    if (best != active.size()) {
      const std::size_t k = active[best];
      const Scalar pivot = A(k, k);
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
      (pivot.re().sign() > 0 ? v.positive : v.negative) += 1;
      order.push_back(static_cast<int>(k));
      note_signs();
      const Scalar inv = pivot.inverse();
      for (std::size_t r : active) {
        if (A(r, k).is_zero()) continue;
        Scalar f = A(r, k) * inv;
        for (std::size_t c : active) {
          if (!A(k, c).is_zero()) A(r, c) -= f * A(k, c);
        }
      }
      continue;
    }
    // zero diagonal: look for a nonzero off-diagonal pair
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size() && !found; ++a) {
      for (std::size_t b = a + 1; b < active.size() && !found; ++b) {
        if (!A(active[a], active[b]).is_zero()) {
          pi = a;
          pj = b;
          found = true;
        }
      }
    }
    if (!found) {
      v.zero = static_cast<int>(active.size());
      break;
    }
    const std::size_t i = active[pi];
    const std::size_t j = active[pj];
    const Scalar a = A(i, j);
    const Scalar inv_a = a.inverse();
    const Scalar inv_abar = a.conj().inverse();
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pj));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pi));
    v.positive += 1;
    v.negative += 1;
    order.push_back(static_cast<int>(i));
    order.push_back(static_cast<int>(j));
    note_signs();
    for (std::size_t r : active) {
      for (std::size_t c : active) {
        A(r, c) -= A(r, i) * inv_abar * A(j, c) + A(r, j) * inv_a * A(i, c);
      }
    }
  }

  v.kernel_dim = v.zero;
  if (v.negative == 0) {
    v.kind = v.zero == 0 ? Definiteness::PositiveDefinite : Definiteness::PositiveSemidefiniteSingular;
  } else if (v.positive == 0) {
    v.kind = Definiteness::NegativeContaining;
  } else {
    v.kind = Definiteness::Indefinite;
    v.witness.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(both_signs_at));
    std::sort(v.witness.begin(), v.witness.end());
  }
  return v;
}

}  // namespace gapvir
