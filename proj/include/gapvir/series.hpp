#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gapvir/involution.hpp"

namespace gapvir {

/// (p-1) x p coefficient matrix F, rows 1..p-1, columns 0..p-1.
class FMatrix {
 public:
  FMatrix(int p, std::vector<std::vector<Scalar>> rows) : p_(p), rows_(std::move(rows)) {
    if (p < 2) throw Error(ErrorKind::Configuration, "p must be >= 2");
    if (static_cast<int>(rows_.size()) != p - 1) {
      throw Error(ErrorKind::Configuration, "F needs p-1 = " + std::to_string(p - 1) + " rows");
    }
    for (const auto& r : rows_) {
      if (static_cast<int>(r.size()) != p) {
        throw Error(ErrorKind::Configuration, "every F row needs p = " + std::to_string(p) + " entries");
      }
    }
  }

  int p() const { return p_; }
  /// F_{i,j} with 1 <= i <= p-1, 0 <= j <= p-1.
  const Scalar& operator()(int i, int j) const {
    return rows_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j));
  }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

  std::vector<int> col() const {
    std::vector<int> out;
    for (int j = 0; j < p_; ++j) {
      for (int i = 1; i < p_; ++i) {
        if (!(*this)(i, j).is_zero()) {
          out.push_back(j);
          break;
        }
      }
    }
    return out;
  }

  std::vector<int> row() const {
    std::vector<int> out;
    for (int i = 1; i < p_; ++i) {
      for (int j = 0; j < p_; ++j) {
        if (!(*this)(i, j).is_zero()) {
          out.push_back(i);
          break;
        }
      }
    }
    return out;
  }

  bool in_col(int j) const {
    for (int c : col()) {
      if (c == j) return true;
    }
    return false;
  }

 private:
  int p_;
  std::vector<std::vector<Scalar>> rows_;
};

struct FViolation {
  enum class Kind { Compatibility, Closure } kind;
  // Compatibility: (r, s, i); Closure: row i, column j, missing column target
  int a = 0, b = 0, c = 0;

  std::string describe() const {
    if (kind == Kind::Compatibility) {
      return "compatibility fails at r=" + std::to_string(a) + " s=" + std::to_string(b) + " i=" + std::to_string(c);
    }
    return "closure fails: row " + std::to_string(a) + ", column " + std::to_string(b) + " but column " +
           std::to_string(c) + " is empty";
  }
};

/// F_{s,i} F_{r,ov(i+s)} = F_{r,i} F_{s,ov(i+r)} for all r, s, i, and
/// ov(i+j) in col(F) whenever j in col(F), i in row(F).
inline std::vector<FViolation> validate_F(const FMatrix& F) {
  const int p = F.p();
  std::vector<FViolation> out;
  for (int r = 1; r < p; ++r) {
    for (int s = 1; s < p; ++s) {
      for (int i = 0; i < p; ++i) {
        if (F(s, i) * F(r, (i + s) % p) != F(r, i) * F(s, (i + r) % p)) {
          out.push_back({FViolation::Kind::Compatibility, r, s, i});
        }
      }
    }
  }
  for (int j : F.col()) {
    for (int i : F.row()) {
      int target = (i + j) % p;
      if (!F.in_col(target)) out.push_back({FViolation::Kind::Closure, i, j, target});
    }
  }
  return out;
}

/// Basis vector v_{k + j/p} stored as the pair (k, j).
struct BasisIndex {
  long k = 0;
  int j = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

using SeriesVector = LinComb<BasisIndex>;

struct SeriesTerm {
  Scalar coeff;
  BasisIndex target;
};

/// V(a, b, F):
///   L_m v_{k,j}   = -(a + k + j/p + b m) v_{k+m, j}
///   I_m^i v_{k,j} = F_{i,j} v_{k+m+carry, (i+j) mod p},  carry = (i+j) div p
///   C_s v = 0
/// The carry keeps the fused index k + j/p additive. The columns are col(F);
/// for F = 0 that set is empty, and the module is taken to be the single
/// column {0}, i.e. V(a, b) with every I acting by zero.
class SeriesModule {
 public:
  SeriesModule(Scalar a, Scalar b, FMatrix F) : SeriesModule(std::move(a), std::move(b), std::move(F), true) {}

  /// Skips F validation; used to demonstrate that invalid F breaks the axioms.
  static SeriesModule unchecked(Scalar a, Scalar b, FMatrix F) {
    return SeriesModule(std::move(a), std::move(b), std::move(F), false);
  }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const FMatrix& F() const { return F_; }
  int p() const { return F_.p(); }
  const std::vector<int>& columns() const { return columns_; }
  bool has_column(int j) const { return std::find(columns_.begin(), columns_.end(), j) != columns_.end(); }

  SeriesTerm act(const Gen& g, const BasisIndex& x) const {
    if (!has_column(x.j)) {
      throw Error(ErrorKind::Index, "column " + std::to_string(x.j) + " is not a column of the module");
    }
    const int p = this->p();
    switch (g.kind) {
      case GenKind::L:
        return {-(a_ + Scalar(Rational(x.k)) + Scalar(Rational(x.j, p)) + b_ * Scalar(g.mode)),
                {x.k + g.mode, x.j}};
      case GenKind::I: {
        const int sum = g.index + x.j;
        return {F_(g.index, x.j), {x.k + g.mode + sum / p, sum % p}};
      }
      case GenKind::C: return {Scalar(), x};
    }
    return {Scalar(), x};
  }

  SeriesVector act(const Gen& g, const SeriesVector& v) const {
    SeriesVector out;
    for (const auto& [x, c] : v) {
      SeriesTerm t = act(g, x);
      out.add(t.target, t.coeff * c);
    }
    return out;
  }

  SeriesVector act(const Element& e, const SeriesVector& v) const {
    SeriesVector out;
    for (const auto& [g, c] : e.terms()) out.add_scaled(act(g, v), c);
    return out;
  }

 private:
  SeriesModule(Scalar a, Scalar b, FMatrix F, bool validate)
      : a_(std::move(a)), b_(std::move(b)), F_(std::move(F)), columns_(F_.col()) {
    if (columns_.empty()) columns_.push_back(0);
    if (!validate) return;
    auto violations = validate_F(F_);
    if (!violations.empty()) throw Error(ErrorKind::Configuration, "invalid F: " + violations.front().describe());
  }

  Scalar a_;
  Scalar b_;
  FMatrix F_;
  std::vector<int> columns_;
};

inline SeriesTerm series_act(const SeriesModule& M, const Gen& g, const BasisIndex& x) { return M.act(g, x); }

/// Generators with modes in [-window, window] (all I indices, all C's).
inline std::vector<Gen> window_generators(int p, int window) {
  GapVirasoro alg(p);
  std::vector<Gen> out;
  for (int m = -window; m <= window; ++m) out.push_back(alg.L(m));
  for (int m = -window; m <= window; ++m) {
    for (int i = 1; i < p; ++i) out.push_back(alg.I(m, i));
  }
  for (int j = 0; j <= p / 2; ++j) out.push_back(alg.C(j));
  return out;
}

struct AxiomCheck {
  bool pass = true;
  long checked = 0;
  struct Witness {
    Gen x, y;
    BasisIndex v;
  };
  std::optional<Witness> witness;
};

/// x(y v) - y(x v) = [x, y] v for every generator pair in the window and
/// every basis vector with |k| <= window.
inline AxiomCheck series_axiom_check(const SeriesModule& M, int window) {
  const int p = M.p();
  GapVirasoro alg(p);
  AxiomCheck out;
  const auto gens = window_generators(p, window);
  const auto& cols = M.columns();
  for (long k = -window; k <= window; ++k) {
    for (int j : cols) {
      const BasisIndex v{k, j};
      const SeriesVector vec(v);
      for (const auto& x : gens) {
        const SeriesVector xv = M.act(x, vec);
        for (const auto& y : gens) {
          SeriesVector lhs = M.act(x, M.act(y, vec)) - M.act(y, xv);
          SeriesVector rhs = M.act(alg.bracket(x, y), vec);
          ++out.checked;
          if (!(lhs == rhs)) {
            out.pass = false;
            out.witness = AxiomCheck::Witness{x, y, v};
            return out;
          }
        }
      }
    }
  }
  return out;
}

/// conj(beta_i) beta_{p-i} = 1 for all i.
inline void require_unitary_beta(int p, const std::vector<Scalar>& beta) {
  if (static_cast<int>(beta.size()) != p - 1) {
    throw Error(ErrorKind::Configuration, "beta needs p-1 = " + std::to_string(p - 1) + " entries");
  }
  for (int i = 1; i < p; ++i) {
    if (beta[static_cast<std::size_t>(i - 1)].conj() * beta[static_cast<std::size_t>(p - i - 1)] != Scalar(1)) {
      throw Error(ErrorKind::Configuration, "beta violates conj(beta_" + std::to_string(i) + ")*beta_" +
                                                std::to_string(p - i) + " = 1");
    }
  }
}

/// <g u, w> = <u, theta(g) w> for the delta form <v_x, v_y> = delta_{x,y},
/// all generators with |mode| <= max_mode and basis vectors with |k| <= window.
inline bool series_contravariance_check(const SeriesModule& M, const AntiInvolution& theta, int max_mode,
                                        int window) {
  const auto gens = window_generators(M.p(), max_mode);
  const auto& cols = M.columns();
  std::vector<BasisIndex> basis;
  for (long k = -window; k <= window; ++k) {
    for (int j : cols) basis.push_back({k, j});
  }
  for (const auto& g : gens) {
    const Element tg = theta.apply(g);
    for (const auto& u : basis) {
      const SeriesVector gu = M.act(g, SeriesVector(u));
      for (const auto& w : basis) {
        const Scalar lhs = gu.coefficient(w);
        const Scalar rhs = M.act(tg, SeriesVector(w)).coefficient(u).conj();
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

struct SeriesPredicates {
  bool reducible = false;
  bool single_column = false;
  bool a_integer = false;
  bool b_in_zero_one = false;

  bool unitary = false;
  bool a_real = false;
  bool b_on_half_line = false;  // b in 1/2 + iR
  bool f_condition = false;     // beta_{p-i} F_{p-i, ov(i+j)} = conj(F_{i,j})
  std::vector<std::pair<int, int>> f_failures;  // (i, j)

  bool a_nonzero = false;
  /// The final classification's bucket (1) demands a != 0 on top of the
  /// conditions above; reported separately so the two readings can differ.
  bool unitary_with_nonzero_a = false;

  std::optional<bool> contravariance_self_test;  // run when unitary
};

inline SeriesPredicates series_predicates(const SeriesModule& M, const std::vector<Scalar>& beta,
                                          int self_test_window = 4) {
  const int p = M.p();
  require_unitary_beta(p, beta);
  SeriesPredicates out;
  const auto& cols = M.columns();
  out.single_column = cols.size() == 1;
  out.a_integer = M.a().is_real() && M.a().re().is_integer();
  out.b_in_zero_one = M.b() == Scalar(0) || M.b() == Scalar(1);
  out.reducible = out.single_column && out.a_integer && out.b_in_zero_one;

  out.a_real = M.a().is_real();
  out.b_on_half_line = M.b().re() == Rational(1, 2);
  out.f_condition = true;
  for (int j : cols) {
    for (int i = 1; i < p; ++i) {
      const Scalar lhs = beta[static_cast<std::size_t>(p - i - 1)] * M.F()(p - i, (i + j) % p);
      if (lhs != M.F()(i, j).conj()) {
        out.f_condition = false;
        out.f_failures.emplace_back(i, j);
      }
    }
  }
  out.unitary = out.a_real && out.b_on_half_line && out.f_condition;
  out.a_nonzero = !M.a().is_zero();
  out.unitary_with_nonzero_a = out.unitary && out.a_nonzero;
  if (out.unitary) {
    const auto theta = AntiInvolution::plus(p, Scalar(1), beta);
    out.contravariance_self_test = series_contravariance_check(M, theta, self_test_window, self_test_window);
  }
  return out;
}

}  // namespace gapvir
