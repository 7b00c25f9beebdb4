#pragma once

#include <comprelie/complie.hpp>
#include <comprelie/oudom_guin.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace comprelie {

struct WordPreLie {
  using Key = Word;
  using Less = LengthLexLess;

  ComPreLie algebra;

  Tensor bullet(const Word& a, const Word& b) const { return algebra.prelie(a, b); }
};

// Monomials of S(T(V,f)). The unit 1 is the empty monomial; the word ∅ is an
// ordinary factor.
using SymMonomial = Monomial<Word, LengthLexLess>;
using SymTensor = SymCombination<Word, LengthLexLess>;
using SymPair = std::pair<SymMonomial, SymMonomial>;
using SymPairTensor = SymPairCombination<Word, LengthLexLess>;

SymMonomial monomial(std::vector<Word> factors);
SymTensor sym(const Word& w);
SymTensor sym(const SymMonomial& m);
SymTensor sym_product(const SymTensor& a, const SymTensor& b);
// Single-factor part of a SymTensor, as a Tensor. Throws std::invalid_argument
// if another monomial occurs.
Tensor single_factor_part(const SymTensor& t);

// unit: the i-th term of the recursion has coefficient 1.
// divided: it carries 1/i!, which makes Δ the transpose of ⋆ under
// sym_pairing for any nilpotent f. The two agree when f∘f = 0.
enum class CoproductScaling { unit, divided };

class Enveloping {
 public:
  explicit Enveloping(ComPreLie algebra);

  const ComPreLie& algebra() const { return og_.algebra().algebra; }

  SymTensor extend_bullet(const SymTensor& a, const SymTensor& b) const { return og_.bullet(a, b); }
  SymTensor star(const SymTensor& a, const SymTensor& b) const { return og_.star(a, b); }

  // w • (w1 × ... × wk) and w ⋆ (w1 × ... × wk) by the ordered set partition
  // formulas; ∅ • (w1...wk) = 0 for k >= 1 and ∅ ⋆ (w1...wk) = ∅ × w1 × ... × wk.
  SymTensor closed_action(const Word& w, const std::vector<Word>& factors) const;
  SymTensor closed_star(const Word& w, const std::vector<Word>& factors) const;

  // Reduced coproduct of a word: δ̃(∅) = ∅ ⊗ 1 and the recursion on xu.
  // Throws std::domain_error unless f is nilpotent.
  SymPairTensor dual_coproduct(const Word& w, CoproductScaling scaling = CoproductScaling::unit) const;
  // Δ(w) = δ̃(w) + 1 ⊗ w, extended multiplicatively.
  SymPairTensor coproduct(const Word& w, CoproductScaling scaling = CoproductScaling::unit) const;
  SymPairTensor coproduct(const SymMonomial& m, CoproductScaling scaling = CoproductScaling::unit) const;
  SymPairTensor coproduct(const SymTensor& t, CoproductScaling scaling = CoproductScaling::unit) const;

 private:
  OudomGuin<WordPreLie> og_;
  std::optional<std::size_t> nilpotency_;
};

SymPairTensor pair_product(const SymPairTensor& a, const SymPairTensor& b);

// ⟨a, b⟩ = δ(a, b) times the number of multiset automorphisms of a, the
// pairing between S(T(V*)) and S(T(V)) in dual word bases.
Rational sym_pairing(const SymMonomial& a, const SymMonomial& b);
Rational sym_pairing(const SymTensor& a, const SymTensor& b);
// ⟨a1 ⊗ a2, b1 ⊗ b2⟩ = ⟨a1, b1⟩⟨a2, b2⟩.
Rational sym_pairing(const SymPairTensor& a, const SymPairTensor& b);

}  // namespace comprelie
