#pragma once

#include <map>
#include <utility>

#include "gapvir/scalar.hpp"

namespace gapvir {

/// Finite formal sum over an ordered key type with Scalar coefficients.
/// Zero coefficients are never stored, so equality is structural.
template <typename Key>
class LinComb {
 public:
  using container_type = std::map<Key, Scalar>;
  using const_iterator = typename container_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Key key, Scalar coeff = Scalar(1)) { add(std::move(key), coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  /// this += s * o
  void add_scaled(const LinComb& o, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  container_type terms_;
};

}  // namespace gapvir
