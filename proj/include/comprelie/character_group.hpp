#pragma once

#include <comprelie/endomorphism.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/words.hpp>

#include <cstddef>
#include <vector>

namespace comprelie {

// A series Σ c_w w with every word of length <= truncation.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  // Drops the words longer than truncation.
  TruncatedSeries(Tensor terms, std::size_t truncation);

  std::size_t truncation() const { return truncation_; }
  const Tensor& terms() const { return terms_; }
  Rational coefficient(const Word& w) const { return terms_.coefficient(w); }
  bool is_zero() const { return terms_.is_zero(); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

 private:
  Tensor terms_;
  std::size_t truncation_ = 0;
};

// Shuffle of a and b keeping only words of length <= max_len.
Tensor truncated_shuffle(const Tensor& a, const Tensor& b, std::size_t max_len);

// Characters of the dual Hopf algebra for a nilpotent f, modulo words
// longer than the truncation. The identity is the zero series.
// With CoproductScaling::divided the i-th term carries 1/i!, matching the
// divided coproduct; only that variant is associative once f∘f ≠ 0.
class CharacterGroup {
 public:
  // Throws std::domain_error unless f is nilpotent.
  CharacterGroup(Endo f, std::size_t truncation, CoproductScaling scaling = CoproductScaling::unit);

  const Endo& endo() const { return f_; }
  std::size_t truncation() const { return truncation_; }
  TruncatedSeries series(const Tensor& t) const { return {t, truncation_}; }

  // ∅ ⊛̃ v = ∅, xu ⊛̃ v = Σ_i f^i(x)((u ⊛̃ v) ⧢ v^⧢i).
  // Series of another truncation are rejected with std::invalid_argument.
  TruncatedSeries tilde_compose(const TruncatedSeries& u, const TruncatedSeries& v) const;
  // u ⋄ v = u ⊛̃ v + v.
  TruncatedSeries diamond(const TruncatedSeries& u, const TruncatedSeries& v) const;
  // Two-sided inverse for ⋄. Throws std::logic_error if the degreewise
  // iteration does not settle.
  TruncatedSeries inverse(const TruncatedSeries& u) const;

 private:
  void check(const TruncatedSeries& s) const;

  Endo f_;
  CoproductScaling scaling_;
  std::size_t nilpotency_;
  std::size_t truncation_;
};

// Fliess operators with n inputs over the letters x0..xn (plain symbols 0..n).
// An element of the group is an n-tuple of series; entry i - 1 is channel i.
struct FliessElement {
  std::size_t channel = 1;
  TruncatedSeries series;
};
using FliessTuple = std::vector<TruncatedSeries>;

// c ⊛̃ d = Σ c_w D̃_w(∅) on the channel of c, with D̃_{x_j}(e) = x_j e when
// j differs from the channel and x_i e + x0(d_i ⧢ e) on channel i.
// Throws std::invalid_argument on a bad channel or mismatched truncations.
FliessElement fliess_tilde(const FliessElement& c, const FliessTuple& d);
// c ⋄ d = c ⊛̃ d + d, channel by channel.
FliessTuple fliess_diamond(const FliessTuple& c, const FliessTuple& d);

// Coefficients d_0..d_kmax of X / (1 - nX - X^2).
std::vector<Integer> fibonacci_dims(std::size_t n, std::size_t k_max);

}  // namespace comprelie
