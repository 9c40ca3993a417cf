#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapvir/definiteness.hpp"
#include "gapvir/involution.hpp"
#include "gapvir/verma.hpp"

namespace gapvir {

struct GramMatrix {
  int level = 0;
  SectorKind sector = SectorKind::Full;
  std::vector<Monomial> basis;
  Matrix entries;
};

namespace detail {

inline void require_plus(const AntiInvolution& theta) {
  if (theta.kind() != InvolutionKind::Plus) {
    throw Error(ErrorKind::Unsupported, "contravariant Gram forms need a theta+ involution");
  }
}

/// theta~(y) x with theta~(y_1 ... y_k) = theta(y_k) ... theta(y_1).
inline ModuleVector apply_reversed(const VermaModule& M, const AntiInvolution& theta, const Monomial& y,
                                   ModuleVector x) {
  for (const auto& factor : y) {
    x = M.act(theta.apply(factor), x);
    if (x.is_zero()) break;
  }
  return x;
}

}  // namespace detail

/// <x, y> for arbitrary vectors: linear in x, conjugate-linear in y,
/// normalised by <v, v> = 1. Vectors of different p-level pair to zero.
inline Scalar form(const VermaModule& M, const AntiInvolution& theta, const ModuleVector& x, const ModuleVector& y) {
  detail::require_plus(theta);
  Scalar total;
  for (const auto& [my, cy] : y) {
    ModuleVector r = detail::apply_reversed(M, theta, my, x);
    total += r.coefficient(Monomial{}) * cy.conj();
  }
  return total;
}

/// Gram matrix G[x][y] = <x v, y v> on the PBW basis of p-level d.
inline GramMatrix gram(const VermaModule& M, const AntiInvolution& theta, int d,
                       SectorKind sector = SectorKind::Full) {
  detail::require_plus(theta);
  if (theta.p() != M.p()) throw Error(ErrorKind::Configuration, "involution and module have different p");
  GramMatrix G;
  G.level = d;
  G.sector = sector;
  G.basis = pbw_basis(M.weight(), d, sector);
  const std::size_t n = G.basis.size();
  G.entries = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      ModuleVector out = detail::apply_reversed(M, theta, G.basis[c], ModuleVector(G.basis[r]));
      G.entries(r, c) = out.coefficient(Monomial{});
    }
  }
  return G;
}

inline GramMatrix gram(const HighestWeight& w, const AntiInvolution& theta, int d,
                       SectorKind sector = SectorKind::Full) {
  VermaModule M(w);
  return gram(M, theta, d, sector);
}

/// Virasoro factor
///   (h + (a^2-1)(c-13)/24 + (ab-1)/2)(h + (b^2-1)(c-13)/24 + (ab-1)/2) + (a^2-b^2)^2/16.
/// It vanishes exactly when the Virasoro Verma module M(c, h) has a singular
/// vector at level a*b.
inline Scalar phi_virasoro(const Scalar& h, const Scalar& c, long a, long b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::Domain, "phi_virasoro needs a, b >= 1");
  const Scalar c13 = c - Scalar(13);
  const Scalar shared = Scalar(Rational(a * b - 1, 2));
  Scalar first = h + c13 * Scalar(Rational(a * a - 1, 24)) + shared;
  Scalar second = h + c13 * Scalar(Rational(b * b - 1, 24)) + shared;
  const long diff = a * a - b * b;
  return first * second + Scalar(Rational(diff * diff, 16));
}

/// 4 phi(L0) - sum_{j=1}^{p-1} j(p-j)/p^2 + (a^2-1)(phi(C0)-p-12)/6 + 2(ab-1).
inline Scalar phi_gap(const HighestWeight& w, long a, long b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::Domain, "phi_gap needs a, b >= 1");
  const int p = w.p();
  Rational sum;
  for (int j = 1; j < p; ++j) sum += Rational(static_cast<long>(j) * (p - j), static_cast<long>(p) * p);
  return Scalar(4) * w.L0() - Scalar(sum) + (w.C(0) - Scalar(p + 12)) * Scalar(Rational(a * a - 1, 6)) +
         Scalar(2 * (a * b - 1));
}

/// phi_gap(a,b) phi_gap(b,a) + (a^2-b^2)^2.
inline Scalar phi_gap_criterion(const HighestWeight& w, long a, long b) {
  const long diff = a * a - b * b;
  return phi_gap(w, a, b) * phi_gap(w, b, a) + Scalar(diff * diff);
}

using IndexPair = std::pair<long, long>;

/// All (a, b) with a*b <= max_product where the value vanishes.
template <typename Fn>
std::vector<IndexPair> zero_pairs(long max_product, Fn&& value) {
  std::vector<IndexPair> out;
  for (long a = 1; a <= max_product; ++a) {
    for (long b = 1; a * b <= max_product; ++b) {
      if (value(a, b).is_zero()) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::vector<IndexPair> phi_gap_zeros(const HighestWeight& w, long max_product) {
  return zero_pairs(max_product, [&](long a, long b) { return phi_gap_criterion(w, a, b); });
}

inline std::vector<IndexPair> phi_virasoro_zeros(const Scalar& h, const Scalar& c, long max_product) {
  return zero_pairs(max_product, [&](long a, long b) { return phi_virasoro(h, c, a, b); });
}

struct ReducibilityLevel {
  int d = 0;
  long dim = 0;
  std::optional<int> gram_kernel;  // only when the form is Hermitian (real weight)
  int singular_dim = 0;
};

struct ReducibilityReport {
  std::vector<ReducibilityLevel> levels;
  std::optional<int> first_singular_level;
  bool gram_route = false;
  /// kernel >= singular everywhere and equality at the first nonzero level.
  bool routes_agree = true;
};

/// Level-by-level submodule detection, once through singular vectors and
/// once through the radical of the standard form theta^+_{1,1}.
inline ReducibilityReport reducibility_oracle(const HighestWeight& w, int max_level,
                                              SectorKind sector = SectorKind::Full) {
  VermaModule M(w);
  const auto theta = AntiInvolution::standard(w.p());
  ReducibilityReport report;
  report.gram_route = w.is_real();
  bool first_seen = false;
  for (int d = 0; d <= max_level; ++d) {
    ReducibilityLevel lvl;
    lvl.d = d;
    lvl.dim = graded_dim(w, d, sector);
    lvl.singular_dim = d == 0 ? 0 : static_cast<int>(singular_vectors(M, d, sector).size());
    if (report.gram_route) {
      GramMatrix G = gram(M, theta, d, sector);
      lvl.gram_kernel = static_cast<int>(G.entries.rows() - rank(G.entries));
      if (*lvl.gram_kernel < lvl.singular_dim) report.routes_agree = false;
      if (!first_seen && (*lvl.gram_kernel > 0 || lvl.singular_dim > 0)) {
        if (*lvl.gram_kernel != lvl.singular_dim) report.routes_agree = false;
      }
    }
    if (!report.first_singular_level && lvl.singular_dim > 0) report.first_singular_level = d;
    if (lvl.singular_dim > 0 || (lvl.gram_kernel && *lvl.gram_kernel > 0)) first_seen = true;
    report.levels.push_back(lvl);
  }
  return report;
}

/// Which logical reading of "phi = 0" the brute-force search supports.
enum class CriterionDirection { ReducibleIffZero, IrreducibleIffZero, Inconclusive };

inline std::string to_string(CriterionDirection d) {
  switch (d) {
    case CriterionDirection::ReducibleIffZero: return "reducible-iff-phi-zero";
    case CriterionDirection::IrreducibleIffZero: return "irreducible-iff-phi-zero";
    case CriterionDirection::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct KacPoint {
  Scalar c;
  Scalar h;
  bool phi_zero = false;      // some a*b <= max_level with phi_virasoro = 0
  bool has_singular = false;  // singular vector at some Virasoro level <= max_level
};

struct KacScan {
  std::vector<KacPoint> points;
  CriterionDirection direction = CriterionDirection::Inconclusive;
  bool sets_equal = false;
};

/// Virasoro Verma modules M(c, h) over a grid: compares the zero set of
/// phi_virasoro (a*b <= max_level) with the brute-force singular vector
/// search at levels 1..max_level (L_0 units).
inline KacScan kac_scan(const std::vector<Scalar>& cs, const std::vector<Scalar>& hs, int max_level) {
  KacScan scan;
  bool all_same = true;
  bool all_opposite = true;
  for (const auto& c : cs) {
    for (const auto& h : hs) {
      KacPoint pt{c, h};
      pt.phi_zero = !phi_virasoro_zeros(h, c, max_level).empty();
      // p = 2 host; only L-factors are used in the Virasoro sector
      VermaModule M(HighestWeight(2, h, {c, Scalar(0)}));
      for (int n = 1; n <= max_level && !pt.has_singular; ++n) {
        pt.has_singular = !singular_vectors(M, 2 * n, SectorKind::Virasoro).empty();
      }
      all_same = all_same && (pt.phi_zero == pt.has_singular);
      all_opposite = all_opposite && (pt.phi_zero != pt.has_singular);
      scan.points.push_back(std::move(pt));
    }
  }
  scan.sets_equal = all_same;
  scan.direction = all_same ? CriterionDirection::ReducibleIffZero
                            : (all_opposite ? CriterionDirection::IrreducibleIffZero : CriterionDirection::Inconclusive);
  return scan;
}

}  // namespace gapvir
