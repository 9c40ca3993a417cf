#pragma once

#include <string>
#include <vector>

#include "gapvir/algebra.hpp"

namespace gapvir {

/// A weight on the Cartan subalgebra span{L_0, C_0, ..., C_{p/2}}.
class HighestWeight {
 public:
  HighestWeight(int p, Scalar l0, std::vector<Scalar> c) : p_(p), l0_(std::move(l0)), c_(std::move(c)) {
    if (p < 2) throw Error(ErrorKind::Configuration, "p must be >= 2");
    if (static_cast<int>(c_.size()) != p / 2 + 1) {
      throw Error(ErrorKind::Configuration, "need p/2+1 = " + std::to_string(p / 2 + 1) +
                                                " central values, got " + std::to_string(c_.size()));
    }
  }

  int p() const { return p_; }
  const Scalar& L0() const { return l0_; }
  const std::vector<Scalar>& central() const { return c_; }

  /// phi(C_j) for 0 <= j <= p-1, honouring C_j = C_{p-j}.
  const Scalar& C(int j) const {
    if (j < 0 || j >= p_) throw Error(ErrorKind::Index, "C index out of range: " + std::to_string(j));
    return c_[static_cast<std::size_t>(j > p_ / 2 ? p_ - j : j)];
  }

  /// Value on a Cartan generator (L_0 or central).
  const Scalar& value(const Gen& g) const {
    if (g.is_central()) return C(g.index);
    if (g.is_L0()) return l0_;
    throw Error(ErrorKind::Index, "weight evaluated on a non-Cartan generator");
  }

  /// J = {1 <= i <= p-1 : phi(C_i) != 0}; symmetric under i -> p-i.
  std::vector<int> J() const {
    std::vector<int> out;
    for (int i = 1; i < p_; ++i) {
      if (!C(i).is_zero()) out.push_back(i);
    }
    return out;
  }

  bool in_J(int i) const { return !C(i).is_zero(); }
  bool J_is_full() const { return static_cast<int>(J().size()) == p_ - 1; }

  bool is_real() const {
    if (!l0_.is_real()) return false;
    for (const auto& c : c_) {
      if (!c.is_real()) return false;
    }
    return true;
  }

  /// sum_{j in J} j(p-j) / (4p^2)
  Rational heisenberg_vacuum_energy() const {
    Rational sum;
    for (int j : J()) sum += Rational(static_cast<long>(j) * (p_ - j), 4L * p_ * p_);
    return sum;
  }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  int p_;
  Scalar l0_;
  std::vector<Scalar> c_;
};

/// Symmetric subsets J of {1..p-1} that are nonempty.
inline std::vector<std::vector<int>> nonempty_symmetric_subsets(int p) {
  std::vector<std::vector<int>> out;
  const int pairs = p / 2;  // orbit representatives 1..p/2
  for (int mask = 1; mask < (1 << pairs); ++mask) {
    std::vector<int> J;
    for (int i = 1; i < p; ++i) {
      int rep = i > p / 2 ? p - i : i;
      if (mask & (1 << (rep - 1))) J.push_back(i);
    }
    out.push_back(J);
  }
  return out;
}

}  // namespace gapvir
