#pragma once

#include <comprelie/rational.hpp>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <utility>

namespace comprelie {

// Finitely supported map Key -> Rational with no stored zeros. Iteration
// follows the key order, so equality of two combinations is structural.
template <typename Key, typename Less = std::less<Key>>
class LinearCombination {
 public:
  using key_type = Key;
  using key_compare = Less;
  using map_type = std::map<Key, Rational, Less>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Rational coeff = 1) {
    add(std::move(key), coeff);
  }
  LinearCombination(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto& [k, c] : terms) add(k, c);
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(Key&& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Adds scale * other.
  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool contains(const Key& key) const { return terms_.count(key) != 0; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(LinearCombination a, const Rational& s) { return a *= s; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

// Bilinear extension of a function on basis pairs.
template <typename Result, typename A, typename B, typename F>
Result bilinear(const A& a, const B& b, F&& on_basis) {
  Result out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add_scaled(on_basis(ka, kb), ca * cb);
  }
  return out;
}

// Linear extension of a function on basis elements.
template <typename Result, typename A, typename F>
Result linear(const A& a, F&& on_basis) {
  Result out;
  for (const auto& [k, c] : a) out.add_scaled(on_basis(k), c);
  return out;
}

// Incremental row echelon form over the rationals. Each stored row is scaled
// so that its largest key has coefficient 1, and no two rows share a largest
// key; rank and membership follow.
template <typename Key, typename Less = std::less<Key>>
class EchelonBasis {
 public:
  using Vector = LinearCombination<Key, Less>;

  Vector reduce(Vector v) const {
    while (!v.is_zero()) {
      const auto& [lead, coeff] = *std::prev(v.end());
      auto row = rows_.find(lead);
      if (row == rows_.end()) break;
      Rational c = coeff;
      v.add_scaled(row->second, -c);
    }
    return v;
  }

  // Returns true if the rank grew.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    auto lead = std::prev(v.end())->first;
    Rational inv = 1 / std::prev(v.end())->second;
    v *= inv;
    rows_.emplace(std::move(lead), std::move(v));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Key, Vector, Less> rows_;
};

}  // namespace comprelie
