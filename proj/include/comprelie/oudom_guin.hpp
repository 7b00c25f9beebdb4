#pragma once

#include <comprelie/linear_combination.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace comprelie {

// A monomial of the symmetric algebra S(A): a sorted multiset of basis
// elements of A. The empty multiset is the unit 1.
template <typename Key, typename Less>
class Monomial {
 public:
  struct Order {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.factors_.size() != b.factors_.size()) return a.factors_.size() < b.factors_.size();
      return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(),
                                          b.factors_.end(), Less{});
    }
  };

  Monomial() = default;
  explicit Monomial(std::vector<Key> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(), Less{});
  }
  static Monomial single(Key k) {
    Monomial m;
    m.factors_.push_back(std::move(k));
    return m;
  }

  const std::vector<Key>& factors() const { return factors_; }
  std::size_t degree() const { return factors_.size(); }
  bool is_unit() const { return factors_.empty(); }

  Monomial times(const Monomial& o) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + o.factors_.size());
    std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(),
               std::back_inserter(m.factors_), Less{});
    return m;
  }

  // Factors whose index bit is set (resp. clear) in mask.
  Monomial select(std::uint64_t mask, bool keep_set = true) const {
    Monomial m;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (((mask >> i) & 1U) == static_cast<std::uint64_t>(keep_set)) m.factors_.push_back(factors_[i]);
    }
    return m;
  }

  // Number of permutations of the factors fixing the multiset: prod of m_i!.
  std::size_t symmetry() const {
    std::size_t s = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= factors_.size(); ++i) {
      if (i < factors_.size() && !Less{}(factors_[i - 1], factors_[i]) && !Less{}(factors_[i], factors_[i - 1])) {
        ++run;
        s *= run;
      } else {
        run = 1;
      }
    }
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return !Order{}(a, b) && !Order{}(b, a);
  }

 private:
  std::vector<Key> factors_;
};

template <typename Key, typename Less>
using SymCombination = LinearCombination<Monomial<Key, Less>, typename Monomial<Key, Less>::Order>;

template <typename Key, typename Less>
SymCombination<Key, Less> sym_product(const SymCombination<Key, Less>& a, const SymCombination<Key, Less>& b) {
  SymCombination<Key, Less> out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add(x.times(y), c * d);
  }
  return out;
}

template <typename Key, typename Less>
SymCombination<Key, Less> as_symmetric(const LinearCombination<Key, Less>& a) {
  SymCombination<Key, Less> out;
  for (const auto& [k, c] : a) out.add(Monomial<Key, Less>::single(k), c);
  return out;
}

// Ordered pair of monomials, a basis element of S ⊗ S.
template <typename Key, typename Less>
struct MonomialPairOrder {
  using M = Monomial<Key, Less>;
  bool operator()(const std::pair<M, M>& a, const std::pair<M, M>& b) const {
    typename M::Order o;
    if (o(a.first, b.first)) return true;
    if (o(b.first, a.first)) return false;
    return o(a.second, b.second);
  }
};

template <typename Key, typename Less>
using SymPairCombination =
    LinearCombination<std::pair<Monomial<Key, Less>, Monomial<Key, Less>>, MonomialPairOrder<Key, Less>>;

// The extension of a pre-Lie product to S(A):
//   A • 1 = A,
//   u • (u1...uk) = (u • (u1...u(k-1))) • uk - u • ((u1...u(k-1)) • uk),
//   (xy) • z = (x • z(1))(y • z(2)),
// and the associative product A ⋆ B = (A • B(1)) B(2). The unshuffle
// coproduct splits a monomial over all subsets of its factor positions.
//
// Algebra must provide Key, Less and bullet(Key, Key) -> LinearCombination.
template <typename Algebra>
class OudomGuin {
 public:
  using Key = typename Algebra::Key;
  using Less = typename Algebra::Less;
  using Mono = Monomial<Key, Less>;
  using Sym = SymCombination<Key, Less>;

  explicit OudomGuin(Algebra algebra) : algebra_(std::move(algebra)), cache_(std::make_shared<Cache>()) {}

  const Algebra& algebra() const { return algebra_; }

  Sym bullet(const Mono& a, const Mono& b) const {
    if (b.is_unit()) return Sym(a);
    if (a.is_unit()) return {};
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->memo.find({a, b});
      if (it != cache_->memo.end()) return it->second;
    }
    Sym out = compute(a, b);
    std::lock_guard lock(cache_->mutex);
    cache_->memo.emplace(std::make_pair(a, b), out);
    return out;
  }

  Sym bullet(const Sym& a, const Sym& b) const {
    Sym out;
    for (const auto& [x, c] : a) {
      for (const auto& [y, d] : b) out.add_scaled(bullet(x, y), c * d);
    }
    return out;
  }

  Sym star(const Mono& a, const Mono& b) const {
    Sym out;
    const std::uint64_t subsets = std::uint64_t{1} << b.degree();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      const Sym left = bullet(a, b.select(mask));
      const Mono rest = b.select(mask, false);
      for (const auto& [m, c] : left) out.add(m.times(rest), c);
    }
    return out;
  }

  Sym star(const Sym& a, const Sym& b) const {
    Sym out;
    for (const auto& [x, c] : a) {
      for (const auto& [y, d] : b) out.add_scaled(star(x, y), c * d);
    }
    return out;
  }

 private:
  Sym compute(const Mono& a, const Mono& b) const {
    if (b.degree() > 63) throw std::length_error("monomial with too many factors");
    if (a.degree() >= 2) {
      const Mono head = Mono::single(a.factors().front());
      const Mono rest = a.select(~std::uint64_t{1});
      Sym out;
      const std::uint64_t subsets = std::uint64_t{1} << b.degree();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const Sym x = bullet(head, b.select(mask));
        if (x.is_zero()) continue;
        const Sym y = bullet(rest, b.select(mask, false));
        out += sym_product<Key, Less>(x, y);
      }
      return out;
    }
    const Key& u = a.factors().front();
    if (b.degree() == 1) return as_symmetric<Key, Less>(algebra_.bullet(u, b.factors().front()));
    const std::uint64_t all_but_last = (std::uint64_t{1} << (b.degree() - 1)) - 1;
    const Mono init = b.select(all_but_last);
    const Mono last = b.select(all_but_last, false);
    Sym out;
    for (const auto& [m, c] : bullet(a, init)) out.add_scaled(bullet(m, last), c);
    for (const auto& [m, c] : bullet(init, last)) out.add_scaled(bullet(a, m), -c);
    return out;
  }

  // Memo of monomial products; shared by copies, guarded for concurrent use.
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<Mono, Mono>, Sym, MonomialPairOrder<Key, Less>> memo;
  };

  Algebra algebra_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace comprelie
