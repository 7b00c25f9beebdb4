#include <comprelie/complie.hpp>

#include <map>
#include <set>
#include <stdexcept>

namespace comprelie {

Tensor ComPreLie::prelie(const Word& a, const Word& b) const {
  if (a.empty()) return {};
  const Word tail(a.begin() + 1, a.end());
  Tensor out = prepend(a.front(), prelie(tail, b));
  out += prepend(f_.image(a.front()), shuffle(tail, b));
  return out;
}

Tensor ComPreLie::prelie(const Tensor& a, const Tensor& b) const {
  return bilinear<Tensor>(a, b, [this](const Word& u, const Word& v) { return prelie(u, v); });
}

Tensor ComPreLie::prelie_closed(const Word& a, const Word& b) const {
  Tensor out;
  const Word ab = concat(a, b);
  for (const auto& plan : shuffle_plans(a.size(), b.size())) {
    Word w(ab.size());
    for (std::size_t i = 0; i < ab.size(); ++i) w[plan.sigma[i] - 1] = ab[i];
    // The first m_k positions carry x_1..x_{m_k}; apply f at one of them.
    for (std::size_t i = 0; i < plan.m_k; ++i) {
      for (const auto& [y, c] : f_.image(w[i])) {
        Word v = w;
        v[i] = y;
        out.add(std::move(v), c);
      }
    }
  }
  return out;
}

Tensor ComPreLie::prelie_closed(const Tensor& a, const Tensor& b) const {
  return bilinear<Tensor>(a, b, [this](const Word& u, const Word& v) { return prelie_closed(u, v); });
}

Tensor ComPreLie::lie_bracket(const Tensor& a, const Tensor& b) const { return prelie(a, b) - prelie(b, a); }

LetterMap LetterMap::identity() {
  return LetterMap([](const Letter& x) { return LetterCombination{{x, 1}}; });
}

LetterMap LetterMap::specialization(Endo f) {
  return LetterMap([f = std::move(f)](const Letter& x) {
    if (!x.is_biletter()) throw std::invalid_argument("specialization expects biletters");
    return f.image_power(Letter::plain(x.symbol), static_cast<std::size_t>(x.level));
  });
}

Tensor induced_morphism(const LetterMap& map, const Tensor& t) {
  Tensor out;
  std::map<Letter, LetterCombination> images;
  for (const auto& [w, c] : t) {
    Tensor acc{{Word{}, c}};
    for (const auto& x : w) {
      auto it = images.find(x);
      if (it == images.end()) it = images.emplace(x, map(x)).first;
      Tensor next;
      for (const auto& [u, a] : acc) {
        for (const auto& [y, b] : it->second) {
          Word v = u;
          v.push_back(y);
          next.add(std::move(v), a * b);
        }
      }
      acc = std::move(next);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Tensor induced_morphism(const LetterMap& map, const Endo& source, const Endo& target, const Tensor& t) {
  std::set<Letter> checked;
  for (const auto& [w, c] : t) {
    for (const auto& x : w) {
      if (!checked.insert(x).second) continue;
      LetterCombination lhs;
      for (const auto& [y, a] : source.image(x)) {
        for (const auto& [z, b] : map(y)) lhs.push_back({z, a * b});
      }
      const Tensor right = apply_endo(target, to_tensor(map(x)));
      if (!(to_tensor(lhs) == right)) throw std::domain_error("letter map does not intertwine the endomorphisms");
    }
  }
  return induced_morphism(map, t);
}

GradedSeries graded_series(const std::vector<Integer>& dims_of_v, std::size_t shift, std::size_t truncation) {
  if (!dims_of_v.empty() && dims_of_v[0] != 0) {
    throw std::invalid_argument("generating series requires V to have no degree-zero part");
  }
  auto dim = [&](std::size_t d) { return d < dims_of_v.size() ? dims_of_v[d] : Integer(0); };
  GradedSeries s;
  s.truncation = truncation;
  s.coefficients.assign(truncation + 1, 0);
  s.bigraded.assign(truncation + 1, std::vector<Integer>());
  // powers[k][m] = [X^m] F_V(X)^k
  std::vector<std::vector<Integer>> powers;
  powers.push_back(std::vector<Integer>(truncation + 1, 0));
  powers[0][0] = 1;
  for (std::size_t k = 1; k <= truncation; ++k) {
    std::vector<Integer> next(truncation + 1, 0);
    for (std::size_t m = 0; m <= truncation; ++m) {
      if (powers[k - 1][m] == 0) continue;
      for (std::size_t d = 1; m + d <= truncation; ++d) next[m + d] += powers[k - 1][m] * dim(d);
    }
    powers.push_back(std::move(next));
  }
  for (std::size_t n = 0; n <= truncation; ++n) {
    s.bigraded[n].assign(n + 1, 0);
    if (n < shift) continue;
    for (std::size_t k = 0; k <= n - shift; ++k) {
      s.bigraded[n][k] = powers[k][n - shift];
      s.coefficients[n] += powers[k][n - shift];
    }
  }
  return s;
}

std::size_t span_dimension_of_products(const ComPreLie& algebra, const std::vector<Tensor>& generators,
                                       std::size_t degree, ProductSet products) {
  std::vector<EchelonBasis<Word, LengthLexLess>> spans(degree + 1);
  std::vector<std::vector<Tensor>> basis(degree + 1);
  auto insert = [&](const Tensor& t, std::size_t len) {
    if (t.is_zero()) return false;
    if (spans[len].insert(t)) {
      basis[len].push_back(t);
      return true;
    }
    return false;
  };
  for (const auto& g : generators) {
    for (std::size_t len = 0; len <= degree; ++len) insert(length_component(g, len), len);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t len = 0; len <= degree; ++len) {
      for (std::size_t p = 0; p <= len; ++p) {
        const auto left = basis[p];
        const auto right = basis[len - p];
        for (const auto& a : left) {
          for (const auto& b : right) {
            grew |= insert(algebra.prelie(a, b), len);
            if (products == ProductSet::com_pre_lie) grew |= insert(shuffle(a, b), len);
          }
        }
      }
    }
  }
  return spans[degree].rank();
}

}  // namespace comprelie
