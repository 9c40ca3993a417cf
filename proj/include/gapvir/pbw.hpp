#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gapvir/highest_weight.hpp"

namespace gapvir {

/// Product of lowering generators in canonical order (see factor_key),
/// understood as applied to the highest weight vector.
using Monomial = std::vector<Gen>;

/// Which PBW factors a basis may use: the full algebra, the Virasoro
/// subalgebra, the Heisenberg part H_J, or the complement g_{J^C}.
enum class SectorKind { Full, Virasoro, Heisenberg, Complement };

inline std::string to_string(SectorKind s) {
  switch (s) {
    case SectorKind::Full: return "full";
    case SectorKind::Virasoro: return "virasoro";
    case SectorKind::Heisenberg: return "heisenberg";
    case SectorKind::Complement: return "complement";
  }
  return "?";
}

struct Sector {
  int p = 2;
  bool has_L = true;
  std::vector<bool> allowed_i;  // indexed 0..p-1, entry 0 unused

  static Sector make(int p, SectorKind kind, const std::vector<int>& J = {}) {
    Sector s;
    s.p = p;
    s.allowed_i.assign(static_cast<std::size_t>(p), false);
    std::vector<bool> inJ(static_cast<std::size_t>(p), false);
    for (int j : J) inJ[static_cast<std::size_t>(j)] = true;
    for (int i = 1; i < p; ++i) {
      bool a = false;
      switch (kind) {
        case SectorKind::Full: a = true; break;
        case SectorKind::Virasoro: a = false; break;
        case SectorKind::Heisenberg: a = inJ[static_cast<std::size_t>(i)]; break;
        case SectorKind::Complement: a = !inJ[static_cast<std::size_t>(i)]; break;
      }
      s.allowed_i[static_cast<std::size_t>(i)] = a;
    }
    s.has_L = kind != SectorKind::Heisenberg;
    return s;
  }

  static Sector of(const HighestWeight& w, SectorKind kind) { return make(w.p(), kind, w.J()); }

  bool allows(const Gen& g) const {
    if (g.kind == GenKind::L) return has_L;
    if (g.kind == GenKind::I) return allowed_i[static_cast<std::size_t>(g.index)];
    return true;
  }
};

inline int monomial_level(int p, const Monomial& m) {
  GapVirasoro alg(p);
  int level = 0;
  for (const auto& g : m) level += alg.p_level(g);
  return level;
}

/// All canonical monomials of the given p-level, lexicographic by factor key.
inline std::vector<Monomial> pbw_basis(const Sector& sector, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int p = sector.p;
  std::vector<std::pair<Gen, int>> parts;  // factor and its p-level
  if (sector.has_L) {
    for (int n = d / p; n >= 1; --n) parts.emplace_back(Gen::L(-n), n * p);
  }
  for (int m = (d + p - 1) / p; m >= 1; --m) {
    for (int i = p - 1; i >= 1; --i) {
      if (!sector.allowed_i[static_cast<std::size_t>(i)]) continue;
      int lvl = m * p - i;
      if (lvl <= d) parts.emplace_back(Gen::I(-m, i), lvl);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });

  Monomial current;
  auto recurse = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t k = start; k < parts.size(); ++k) {
      if (parts[k].second > remaining) continue;
      current.push_back(parts[k].first);
      self(self, k, remaining - parts[k].second);
      current.pop_back();
    }
  };
  recurse(recurse, 0, d);
  return out;
}

inline std::vector<Monomial> pbw_basis(const HighestWeight& w, int d, SectorKind kind = SectorKind::Full) {
  return pbw_basis(Sector::of(w, kind), d);
}

/// Dimension of the p-level d subspace, by a coin-change count over the
/// same part list (no enumeration).
inline long graded_dim(const Sector& sector, int d) {
  if (d < 0) return 0;
  const int p = sector.p;
  std::vector<long> ways(static_cast<std::size_t>(d + 1), 0);
  ways[0] = 1;
  auto use_part = [&](int lvl) {
    for (int t = lvl; t <= d; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - lvl)];
  };
  if (sector.has_L) {
    for (int n = 1; n * p <= d; ++n) use_part(n * p);
  }
  for (int m = 1; m * p - (p - 1) <= d; ++m) {
    for (int i = 1; i < p; ++i) {
      if (sector.allowed_i[static_cast<std::size_t>(i)] && m * p - i <= d) use_part(m * p - i);
    }
  }
  return ways[static_cast<std::size_t>(d)];
}

inline long graded_dim(const HighestWeight& w, int d, SectorKind kind = SectorKind::Full) {
  return graded_dim(Sector::of(w, kind), d);
}

/// "L[-2]L[-1]I[-1,1]|hw"; the empty monomial is "|hw".
inline std::string render_monomial(const Monomial& m) {
  std::string s;
  for (const auto& g : m) {
    if (g.kind == GenKind::L) {
      s += "L[" + std::to_string(g.mode) + "]";
    } else {
      s += "I[" + std::to_string(g.mode) + "," + std::to_string(g.index) + "]";
    }
  }
  return s + "|hw";
}

}  // namespace gapvir
