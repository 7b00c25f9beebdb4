#pragma once

#include <comprelie/endomorphism.hpp>
#include <comprelie/words.hpp>

#include <cstddef>
#include <functional>
#include <vector>

namespace comprelie {

// T(V,f): the shuffle algebra with the pre-Lie product
//   ∅ • w = 0,   xw • w' = x(w • w') + f(x)(w ⧢ w').
class ComPreLie {
 public:
  explicit ComPreLie(Endo f) : f_(std::move(f)) {}

  const Endo& endo() const { return f_; }

  Tensor prelie(const Word& a, const Word& b) const;
  Tensor prelie(const Tensor& a, const Tensor& b) const;
  // Sum over (k,l)-shuffles applying f at positions 1..m_k(σ).
  Tensor prelie_closed(const Word& a, const Word& b) const;
  Tensor prelie_closed(const Tensor& a, const Tensor& b) const;
  Tensor lie_bracket(const Tensor& a, const Tensor& b) const;

 private:
  Endo f_;
};

// A linear map between letter spaces, given on basis letters.
class LetterMap {
 public:
  using Fn = std::function<LetterCombination(const Letter&)>;
  explicit LetterMap(Fn fn) : fn_(std::move(fn)) {}

  static LetterMap identity();
  // (k:d) -> f^k(x_d), the specialization of biletters into (V,f).
  static LetterMap specialization(Endo f);

  LetterCombination operator()(const Letter& x) const { return fn_(x); }

 private:
  Fn fn_;
};

// Letterwise image F(x1...xn) = F(x1)...F(xn).
Tensor induced_morphism(const LetterMap& map, const Tensor& t);
// Same, after checking map∘source = target∘map on every letter of t.
// Throws std::domain_error on a violation.
Tensor induced_morphism(const LetterMap& map, const Endo& source, const Endo& target, const Tensor& t);

struct GradedSeries {
  std::vector<Integer> coefficients;
  std::size_t truncation = 0;
  // bigraded[n][k]: degree n, k letters.
  std::vector<std::vector<Integer>> bigraded;
};

// Expansion of X^shift / (1 - F_V(X)) and of X^shift / (1 - F_V(X) Y) up to
// degree truncation. dims_of_v[0] must be zero.
GradedSeries graded_series(const std::vector<Integer>& dims_of_v, std::size_t shift, std::size_t truncation);

enum class ProductSet { pre_lie, com_pre_lie };

// Dimension of the length-`degree` component of the subalgebra generated by
// the homogeneous components of the generators under • (and ⧢ for
// com_pre_lie).
std::size_t span_dimension_of_products(const ComPreLie& algebra, const std::vector<Tensor>& generators,
                                       std::size_t degree, ProductSet products = ProductSet::com_pre_lie);

}  // namespace comprelie
