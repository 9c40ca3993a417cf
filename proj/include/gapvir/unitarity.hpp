#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gapvir/fock.hpp"
#include "gapvir/gram.hpp"
#include "gapvir/series.hpp"

namespace gapvir {

struct HeisenbergClause {
  int i = 0;
  Scalar product;  // beta_i phi(C_i)
  bool real_nonzero = false;
  bool positive = false;
};

struct HeisenbergReport {
  std::vector<HeisenbergClause> clauses;  // one per i in J
  bool real_nonzero = true;               // literal reading: every product in R^x
  bool positive = true;                   // strict reading: every product > 0
};

/// beta_i phi(C_i) for every i in J, read both as "real nonzero" and as "positive".
inline HeisenbergReport heisenberg_condition(const HighestWeight& w, const std::vector<Scalar>& beta) {
  require_unitary_beta(w.p(), beta);
  HeisenbergReport out;
  for (int i : w.J()) {
    HeisenbergClause c;
    c.i = i;
    c.product = beta[static_cast<std::size_t>(i - 1)] * w.C(i);
    c.real_nonzero = c.product.is_real() && !c.product.is_zero();
    c.positive = c.real_nonzero && c.product.re().sign() > 0;
    out.real_nonzero = out.real_nonzero && c.real_nonzero;
    out.positive = out.positive && c.positive;
    out.clauses.push_back(std::move(c));
  }
  return out;
}

struct DiscreteSeriesPoint {
  int m = 2;
  int r = 0;
  int s = 1;
  Scalar c0;
  Scalar l0;
};

/// Points c0 = |J| + 1 - 6/(m(m+1)), l0 = E_J + ((mr+s)^2 - 1)/(4m(m+1)),
/// 0 <= r < s < m, where E_J = sum_{j in J} j(p-j)/(4p^2).
inline std::vector<DiscreteSeriesPoint> discrete_series(int p, const std::vector<int>& J, int m) {
  if (m < 2) throw Error(ErrorKind::Domain, "discrete series needs m >= 2");
  Rational energy;
  for (int j : J) energy += Rational(static_cast<long>(j) * (p - j), 4L * p * p);
  const long mm = static_cast<long>(m) * (m + 1);
  const Rational c0 = Rational(static_cast<long>(J.size()) + 1) - Rational(6, mm);
  std::vector<DiscreteSeriesPoint> out;
  for (int r = 0; r < m; ++r) {
    for (int s = r + 1; s < m; ++s) {
      const long t = static_cast<long>(m) * r + s;
      out.push_back({m, r, s, Scalar(c0), Scalar(energy + Rational(t * t - 1, 4 * mm))});
    }
  }
  return out;
}

struct DiscreteMatch {
  int m = 0;
  int r = 0;
  int s = 0;
};

struct VirasoroClause {
  bool applicable = true;  // false when phi(C0) or phi(L0) is not real
  bool continuum = false;
  std::optional<DiscreteMatch> discrete;
  bool holds() const { return applicable && (continuum || discrete.has_value()); }
};

/// Continuum (psi(C0) >= 1, psi(L0) >= 0) or an exact discrete-series match
/// with m <= max_m, in terms of the shifted weight psi.
inline VirasoroClause virasoro_clause(const HighestWeight& w, int max_m = 50) {
  VirasoroClause out;
  const ShiftedWeight psi = shifted_weight(w);
  if (!psi.C0.is_real() || !psi.L0.is_real()) {
    out.applicable = false;
    return out;
  }
  const Rational c = psi.C0.re();
  const Rational h = psi.L0.re();
  out.continuum = c >= Rational(1) && h >= Rational(0);
  if (c >= Rational(1)) return out;
  for (int m = 2; m <= max_m; ++m) {
    const Rational cm = Rational(1) - Rational(6, static_cast<long>(m) * (m + 1));
    if (cm < c) continue;
    if (cm > c) break;
    for (const auto& pt : discrete_series(w.p(), {}, m)) {
      if (pt.l0 == Scalar(h)) {
        out.discrete = DiscreteMatch{pt.m, pt.r, pt.s};
        break;
      }
    }
    break;
  }
  return out;
}

/// Unitarity of the irreducible Virasoro module L(c, h) for theta^+_1.
inline bool virasoro_unitary(const Rational& c, const Rational& h, int max_m = 50) {
  HighestWeight w(2, Scalar(h), {Scalar(c), Scalar(0)});
  return virasoro_clause(w, max_m).holds();
}

struct OracleLevel {
  int d = 0;
  long dim = 0;
  bool hermitian = true;
  std::optional<DefinitenessVerdict> verdict;  // absent when not Hermitian
  Matrix gram;
};

struct OracleReport {
  std::vector<OracleLevel> levels;
  bool psd = true;  // PD or PSD at every level checked
  std::optional<int> first_failure;
};

/// Definiteness of the contravariant form for theta^+_{1,beta} at p-levels
/// 0..max_level. Stops at the first level that is not PSD.
inline OracleReport unitarity_oracle(const HighestWeight& w, const std::vector<Scalar>& beta, int max_level) {
  require_unitary_beta(w.p(), beta);
  const auto theta = AntiInvolution::plus(w.p(), Scalar(1), beta);
  VermaModule M(w);
  OracleReport out;
  for (int d = 0; d <= max_level; ++d) {
    GramMatrix G = gram(M, theta, d);
    OracleLevel lvl;
    lvl.d = d;
    lvl.dim = static_cast<long>(G.basis.size());
    lvl.hermitian = G.entries.is_hermitian();
    if (lvl.hermitian) lvl.verdict = definiteness(G.entries);
    lvl.gram = std::move(G.entries);
    const bool ok = lvl.hermitian && lvl.verdict->is_psd();
    out.levels.push_back(std::move(lvl));
    if (!ok) {
      out.psd = false;
      out.first_failure = d;
      break;
    }
  }
  return out;
}

struct UnitarityVerdict {
  bool closed_form = false;          // strict reading of the Heisenberg clause
  bool closed_form_literal = false;  // "real nonzero" reading
  HeisenbergReport heisenberg;
  VirasoroClause virasoro;
  std::vector<std::string> notes;
  std::optional<OracleReport> oracle;
  std::optional<bool> agreement;     // closed_form == oracle->psd
  bool variant_discrepancy = false;  // closed_form != closed_form_literal
};

/// Closed-form unitarity of the irreducible highest weight module for
/// theta^+_{1,beta}; runs the oracle too when oracle_level >= 0.
inline UnitarityVerdict highest_weight_unitary(const HighestWeight& w, const std::vector<Scalar>& beta,
                                               int oracle_level = -1, int max_m = 50) {
  UnitarityVerdict v;
  v.heisenberg = heisenberg_condition(w, beta);
  v.virasoro = virasoro_clause(w, max_m);
  if (!v.virasoro.applicable) {
    v.notes.push_back("phi(C0) or phi(L0) is not real; the central charge clause cannot hold");
  }
  v.closed_form = v.heisenberg.positive && v.virasoro.holds();
  v.closed_form_literal = v.heisenberg.real_nonzero && v.virasoro.holds();
  v.variant_discrepancy = v.closed_form != v.closed_form_literal;
  if (v.variant_discrepancy) {
    v.notes.push_back("some beta_i phi(C_i) is real but negative: the literal reading accepts, the strict one rejects");
  }
  if (oracle_level >= 0) {
    v.oracle = unitarity_oracle(w, beta, oracle_level);
    v.agreement = v.closed_form == v.oracle->psd;
  }
  return v;
}

struct LowestWeightData {
  HighestWeight weight;
  std::vector<Scalar> beta;
};

/// Twist by the Chevalley involution: a lowest weight lambda becomes the
/// highest weight -lambda and beta'_i = beta_{p-i}. Applying it twice is the
/// identity.
inline LowestWeightData lowest_weight_dualize(const HighestWeight& w, const std::vector<Scalar>& beta) {
  const int p = w.p();
  if (static_cast<int>(beta.size()) != p - 1) {
    throw Error(ErrorKind::Configuration, "beta needs p-1 = " + std::to_string(p - 1) + " entries");
  }
  std::vector<Scalar> c;
  for (const auto& x : w.central()) c.push_back(-x);
  std::vector<Scalar> swapped(beta.rbegin(), beta.rend());
  return {HighestWeight(p, -w.L0(), std::move(c)), std::move(swapped)};
}

struct SeriesDescriptor {
  SeriesModule module;
  std::vector<Scalar> beta;
};

struct HighestDescriptor {
  HighestWeight weight;
  std::vector<Scalar> beta;
};

struct LowestDescriptor {
  HighestWeight weight;  // the lowest weight itself
  std::vector<Scalar> beta;
};

using ModuleDescriptor = std::variant<SeriesDescriptor, HighestDescriptor, LowestDescriptor>;

struct Classification {
  std::optional<int> bucket;  // 1, 2 or 3; empty when not unitary
  std::vector<std::string> failing;
  std::vector<std::string> notes;
  bool variant_discrepancy = false;
  std::optional<SeriesPredicates> series;
  std::optional<UnitarityVerdict> highest;
};

namespace detail {

inline std::vector<std::string> failing_clauses(const UnitarityVerdict& v) {
  std::vector<std::string> out;
  if (!v.heisenberg.positive) out.push_back("heisenberg-positivity");
  if (!v.virasoro.applicable) {
    out.push_back("central-charge-real");
  } else if (!v.virasoro.holds()) {
    out.push_back("continuum-or-discrete-series");
  }
  return out;
}

}  // namespace detail

/// Sorts a module into the three unitary families or reports the failing clauses.
inline Classification classify(const ModuleDescriptor& desc, int oracle_level = -1) {
  Classification out;
  if (const auto* s = std::get_if<SeriesDescriptor>(&desc)) {
    SeriesPredicates pr = series_predicates(s->module, s->beta);
    if (pr.unitary) {
      out.bucket = 1;
    } else {
      if (!pr.a_real) out.failing.push_back("series-a-real");
      if (!pr.b_on_half_line) out.failing.push_back("series-b-half-line");
      if (!pr.f_condition) out.failing.push_back("series-f-condition");
    }
    if (pr.reducible) out.notes.push_back("the module is reducible; the families list irreducible modules only");
    if (pr.unitary && !pr.a_nonzero) {
      out.variant_discrepancy = true;
      out.notes.push_back("a = 0 meets the series unitarity conditions but not the nonzero-a reading of the classification");
    }
    out.series = std::move(pr);
    return out;
  }
  const bool lowest = std::holds_alternative<LowestDescriptor>(desc);
  UnitarityVerdict v;
  if (lowest) {
    const auto& d = std::get<LowestDescriptor>(desc);
    auto dual = lowest_weight_dualize(d.weight, d.beta);
    v = highest_weight_unitary(dual.weight, dual.beta, oracle_level);
    out.notes.push_back("evaluated on the Chevalley-twisted highest weight module");
  } else {
    const auto& d = std::get<HighestDescriptor>(desc);
    v = highest_weight_unitary(d.weight, d.beta, oracle_level);
  }
  if (v.closed_form) {
    out.bucket = lowest ? 3 : 2;
  } else {
    out.failing = detail::failing_clauses(v);
  }
  out.variant_discrepancy = v.variant_discrepancy;
  out.notes.insert(out.notes.end(), v.notes.begin(), v.notes.end());
  out.highest = std::move(v);
  return out;
}

}  // namespace gapvir
