#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gapvir/involution.hpp"

namespace gapvir {

/// Seeded source for property tests and the CLI. Only the raw
/// mt19937_64 stream is used (its output is fixed by the standard), so a
/// seed reproduces the same samples on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  Rational rational(long max_abs = 9, long max_den = 7) {
    return Rational(integer(-max_abs, max_abs), integer(1, max_den));
  }

  Rational nonzero_rational(long max_abs = 9, long max_den = 7) {
    for (;;) {
      Rational r = rational(max_abs, max_den);
      if (!r.is_zero()) return r;
    }
  }

  Scalar scalar() { return Scalar(rational(), rational()); }

  Scalar nonzero_scalar() {
    for (;;) {
      Scalar z = scalar();
      if (!z.is_zero()) return z;
    }
  }

  /// Point on the unit circle with rational coordinates: from a Pythagorean
  /// triple (m^2-n^2, 2mn, m^2+n^2) with random signs and swap.
  Scalar unit_scalar() {
    long m = integer(1, 6);
    long n = integer(0, 6);
    long h = m * m + n * n;
    Rational x(m * m - n * n, h);
    Rational y(2 * m * n, h);
    if (integer(0, 1) == 1) std::swap(x, y);
    if (integer(0, 1) == 1) x = -x;
    if (integer(0, 1) == 1) y = -y;
    return Scalar(x, y);
  }

  AntiInvolution plus_involution(int p) {
    std::vector<Scalar> beta(static_cast<std::size_t>(p - 1));
    Scalar alpha;
    if (p % 2 == 0) {
      // conj(b)b = alpha at i = p/2 forces alpha = |b|^2 > 0
      Scalar mid = nonzero_scalar();
      alpha = Scalar(mid.norm2());
      beta[static_cast<std::size_t>(p / 2 - 1)] = mid;
    } else {
      alpha = Scalar(nonzero_rational());
    }
    for (int i = 1; i < p - i; ++i) {
      Scalar b = nonzero_scalar();
      beta[static_cast<std::size_t>(i - 1)] = b;
      beta[static_cast<std::size_t>(p - i - 1)] = alpha / b.conj();
    }
    return AntiInvolution::plus(p, alpha, std::move(beta));
  }

  AntiInvolution minus_involution(int p) {
    std::vector<Scalar> beta;
    for (int i = 1; i < p; ++i) beta.push_back(unit_scalar());
    return AntiInvolution::minus(p, unit_scalar(), std::move(beta));
  }

  /// beta with conj(beta_i) beta_{p-i} = 1, the family used for unitarity.
  std::vector<Scalar> unitary_beta(int p) {
    std::vector<Scalar> beta(static_cast<std::size_t>(p - 1));
    for (int i = 1; i <= p - i; ++i) {
      if (i == p - i) {
        beta[static_cast<std::size_t>(i - 1)] = unit_scalar();
      } else {
        Scalar b = nonzero_scalar();
        beta[static_cast<std::size_t>(i - 1)] = b;
        beta[static_cast<std::size_t>(p - i - 1)] = b.conj().inverse();
      }
    }
    return beta;
  }

  /// Random element supported on modes in [-window, window].
  Element element(int p, int window, int terms = 3) {
    Element out(p);
    GapVirasoro alg(p);
    for (int t = 0; t < terms; ++t) {
      long pick = integer(0, 2);
      int mode = static_cast<int>(integer(-window, window));
      Gen g = pick == 0 ? alg.L(mode)
                        : (pick == 1 ? alg.I(mode, static_cast<int>(integer(1, p - 1)))
                                     : alg.C(static_cast<int>(integer(0, p / 2))));
      out.add(g, scalar());
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gapvir
