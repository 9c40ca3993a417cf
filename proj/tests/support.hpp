#pragma once

#include <string>
#include <vector>

#include "gapvir/gapvir.hpp"

namespace gvtest {

using namespace gapvir;

inline Scalar S(const std::string& text) { return Scalar::parse(text); }
inline Rational Q(long n, long d = 1) { return Rational(n, d); }

/// Highest weight from L0 and C_0..C_{p/2} given as strings.
inline HighestWeight hw(int p, const std::string& l0, const std::vector<std::string>& c) {
  std::vector<Scalar> cs;
  for (const auto& x : c) cs.push_back(S(x));
  return HighestWeight(p, S(l0), cs);
}

inline std::vector<Scalar> ones(int p) { return std::vector<Scalar>(static_cast<std::size_t>(p - 1), Scalar(1)); }

/// Number of partitions of n by Euler's pentagonal recurrence; shares no
/// code with the PBW enumeration.
inline std::vector<long> partition_numbers(int n) {
  std::vector<long> out(static_cast<std::size_t>(n + 1), 0);
  out[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      total += sign * out[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * out[static_cast<std::size_t>(m - g2)];
    }
    out[static_cast<std::size_t>(m)] = total;
  }
  return out;
}

/// Number of positive and negative eigenvalues of a Hermitian matrix from
/// the characteristic polynomial (Faddeev-LeVerrier) and Descartes' rule of
/// signs, exact because every root is real.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

inline Inertia inertia_by_charpoly(const Matrix& A) {
  const std::size_t n = A.rows();
  // coefficients c_0 .. c_n of det(x I - A) = sum c_k x^{n-k}
  std::vector<Scalar> c(n + 1);
  c[0] = Scalar(1);
  Matrix M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = A * M;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    M = next;
    Matrix AM = A * M;
    Scalar tr;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[k] = -tr * Scalar(Rational(1, static_cast<long>(k)));
  }
  Inertia out;
  std::size_t top = n;  // multiplicity of the root 0
  while (top > 0 && c[top].is_zero()) --top;
  out.zero = static_cast<int>(n - top);
  auto sign_changes = [&](bool negate_odd) {
    int changes = 0;
    int last = 0;
    for (std::size_t k = 0; k <= top; ++k) {
      int s = c[k].re().sign();
      // coefficient of x^{n-k}; for p(-x) flip the sign of odd powers
      if (negate_odd && ((n - k) % 2 == 1)) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  out.positive = sign_changes(false);
  out.negative = sign_changes(true);
  return out;
}

}  // namespace gvtest
