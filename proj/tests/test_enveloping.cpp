#include "oracles.hpp"

#include <comprelie/enveloping.hpp>
#include <comprelie/text_format.hpp>

#include <gtest/gtest.h>

#include <set>
#include <tuple>

using namespace comprelie;

namespace {

const Letter x0 = Letter::plain(0);
const Letter x1 = Letter::plain(1);
const Letter x2 = Letter::plain(2);

// Monomials whose factors are words over the letters, with total letter
// count <= max_letters and at most max_factors factors (∅ counts as a factor).
std::vector<SymMonomial> monomials(const std::vector<Letter>& letters, std::size_t max_letters,
                                   std::size_t max_factors) {
  const auto words = words_up_to(letters, max_letters);
  std::set<std::vector<Word>> seen;
  std::vector<SymMonomial> out;
  std::vector<std::vector<Word>> frontier{{}};
  for (std::size_t k = 0; k <= max_factors; ++k) {
    std::vector<std::vector<Word>> next;
    for (const auto& fs : frontier) {
      SymMonomial m(fs);
      if (seen.insert(m.factors()).second) out.push_back(m);
      if (k == max_factors) continue;
      std::size_t used = 0;
      for (const auto& w : fs) used += w.size();
      for (const auto& w : words) {
        if (used + w.size() <= max_letters) {
          auto e = fs;
          e.push_back(w);
          next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::size_t letter_count(const SymMonomial& m) {
  std::size_t n = 0;
  for (const auto& w : m.factors()) n += w.size();
  return n;
}

SymTensor letters_times(const LetterCombination& v, const Tensor& t) { return as_symmetric(prepend(v, t)); }

using Triple = std::tuple<SymMonomial, SymMonomial, SymMonomial>;
struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    SymMonomial::Order o;
    if (o(std::get<0>(a), std::get<0>(b))) return true;
    if (o(std::get<0>(b), std::get<0>(a))) return false;
    if (o(std::get<1>(a), std::get<1>(b))) return true;
    if (o(std::get<1>(b), std::get<1>(a))) return false;
    return o(std::get<2>(a), std::get<2>(b));
  }
};
using TripleTensor = LinearCombination<Triple, TripleOrder>;

}  // namespace

TEST(ExtendBullet, Rules) {
  const Enveloping env{ComPreLie(Endo::matrix({{1, 2, 0}, {0, 1, 1}, {1, 0, 0}}))};
  const SymMonomial m = monomial({Word{x0}, Word{x1, x2}, Word{}});
  EXPECT_EQ(env.extend_bullet(sym(m), sym(SymMonomial{})), sym(m));
  const Word u{x2, x0};
  SymTensor expected;
  for (std::size_t i = 0; i < m.degree(); ++i) {
    SymTensor term = sym(SymMonomial{});
    for (std::size_t j = 0; j < m.degree(); ++j) {
      term = sym_product(term, i == j ? as_symmetric(env.algebra().prelie(m.factors()[j], u)) : sym(m.factors()[j]));
    }
    expected += term;
  }
  EXPECT_EQ(env.extend_bullet(sym(m), sym(u)), expected);
  for (const auto& w : {Word{x0}, Word{}}) {
    EXPECT_TRUE(env.extend_bullet(sym(Word{}), sym(monomial({w, Word{x1}}))).is_zero());
  }
}

TEST(ClosedFormulas, Examples) {
  const Enveloping env{ComPreLie(Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}))};
  const Endo& f = env.algebra().endo();
  const std::vector<Word> ws{Word{x1}, Word{x2, x0}};
  EXPECT_EQ(env.closed_action(Word{x2}, ws),
            letters_times(f.image_power(x2, 2), shuffle(Word{x1}, Word{x2, x0})));
  const Word x{x2}, w{x1, x0}, w1{x2};
  EXPECT_EQ(env.closed_action(prepend(x2, w), {w1}),
            letters_times(f.image(x2), shuffle(w, w1)) + as_symmetric(prepend(x2, env.algebra().prelie(w, w1))));
  EXPECT_EQ(env.closed_star(Word{}, ws), sym(monomial({Word{}, Word{x1}, Word{x2, x0}})));
  EXPECT_TRUE(env.closed_action(Word{}, ws).is_zero());
}

TEST(Star, Examples) {
  const Enveloping env{ComPreLie(Endo::fliess(2, 1))};
  const SymTensor a = sym(monomial({Word{x1}, Word{}}));
  EXPECT_EQ(env.star(a, sym(SymMonomial{})), a);
  EXPECT_EQ(env.star(sym(SymMonomial{}), a), a);
  EXPECT_EQ(env.star(sym(Word{x1}), sym(Word{x2})),
            sym(Word{x0, x2}) + sym(monomial({Word{x1}, Word{x2}})));
}

TEST(Star, AssociativeOnSmallMonomials) {
  const Enveloping env{ComPreLie(Endo::fliess(1, 1))};
  const auto ms = monomials({x0, x1}, 4, 2);
  std::size_t checked = 0;
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      if (letter_count(a) + letter_count(b) > 4) continue;
      const SymTensor ab = env.star(sym(a), sym(b));
      for (const auto& c : ms) {
        if (letter_count(a) + letter_count(b) + letter_count(c) > 4) continue;
        ASSERT_EQ(env.star(ab, sym(c)), env.star(sym(a), env.star(sym(b), sym(c))));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000U);
}

TEST(ClosedFormulas, AgreeWithRecursiveRules) {
  const Enveloping env{ComPreLie(Endo::matrix({{0, 1}, {0, 0}}))};
  const auto words = words_up_to({x0, x1}, 4);
  for (const auto& w : words) {
    for (const auto& m : monomials({x0, x1}, 4 - w.size(), 3)) {
      ASSERT_EQ(env.closed_action(w, m.factors()), env.extend_bullet(sym(w), sym(m)));
      ASSERT_EQ(env.closed_star(w, m.factors()), env.star(sym(w), sym(m)));
    }
  }
}

TEST(ClosedFormulas, ThirteenTwoSubsetForm) {
  // xw • (w1...wk) = Σ_I f^{k-|I|}(x)((w • w_I) ⧢ w_Ī^⧢)
  const Enveloping env{ComPreLie(Endo::matrix({{1, 1}, {2, 0}}))};
  const auto words = words_up_to({x0, x1}, 2);
  for (const auto& w : words) {
    for (const auto& m : monomials({x0, x1}, 3, 3)) {
      const auto& fs = m.factors();
      const std::size_t k = fs.size();
      SymTensor expected;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        const Tensor inner = single_factor_part(env.extend_bullet(sym(w), sym(m.select(mask))));
        Tensor sh = inner;
        std::size_t rest = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (!(mask >> j & 1U)) {
            sh = shuffle(sh, Tensor(fs[j]));
            ++rest;
          }
        }
        expected += letters_times(env.algebra().endo().image_power(x1, rest), sh);
      }
      EXPECT_EQ(env.extend_bullet(sym(prepend(x1, w)), sym(m)), expected);
    }
  }
}

TEST(DualCoproduct, PrintedExamples) {
  // Nilpotent of index 3 so that the sums reach i = 2.
  const Enveloping env{ComPreLie(Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}))};
  const Endo& f = env.algebra().endo();
  const SymPairTensor empty = env.dual_coproduct(Word{});
  EXPECT_EQ(empty, SymPairTensor({{{SymMonomial::single(Word{}), SymMonomial{}}, 1}}));

  auto empties = [](std::size_t n) { return SymMonomial(std::vector<Word>(n, Word{})); };
  SymPairTensor one;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& [y, c] : f.image_power(x2, i)) one.add({SymMonomial::single(Word{y}), empties(i)}, c);
  }
  EXPECT_EQ(env.dual_coproduct(Word{x2}), one);

  SymPairTensor two;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (const auto& [y, c] : f.image_power(x2, i)) {
        for (const auto& [z, d] : f.image_power(x1, j)) two.add({SymMonomial::single(Word{y, z}), empties(i + j)}, c * d);
      }
    }
    if (i == 0) continue;
    for (const auto& [y, c] : f.image_power(x2, i)) {
      two.add({SymMonomial::single(Word{y}), empties(i - 1).times(SymMonomial::single(Word{x1}))}, c * i);
    }
  }
  EXPECT_EQ(env.dual_coproduct(Word{x2, x1}), two);
}

TEST(DualCoproduct, RejectsNonNilpotent) {
  const Enveloping env{ComPreLie(Endo::identity(2))};
  EXPECT_THROW(env.dual_coproduct(Word{x0}), std::domain_error);
}

TEST(Coproduct, CoassociativeAndMultiplicative) {
  const Enveloping env{ComPreLie(Endo::fliess(1, 1))};
  auto left = [&](const SymPairTensor& d) {
    TripleTensor out;
    for (const auto& [p, c] : d) {
      for (const auto& [q, e] : env.coproduct(p.first)) out.add({q.first, q.second, p.second}, c * e);
    }
    return out;
  };
  auto right = [&](const SymPairTensor& d) {
    TripleTensor out;
    for (const auto& [p, c] : d) {
      for (const auto& [q, e] : env.coproduct(p.second)) out.add({p.first, q.first, q.second}, c * e);
    }
    return out;
  };
  const auto ms = monomials({x0, x1}, 3, 3);
  for (const auto& m : ms) {
    const SymPairTensor d = env.coproduct(m);
    EXPECT_EQ(left(d), right(d));
    for (const auto& n : ms) {
      if (letter_count(m) + letter_count(n) > 3) continue;
      EXPECT_EQ(env.coproduct(m.times(n)), pair_product(env.coproduct(m), env.coproduct(n)));
    }
  }
}

TEST(Coproduct, DualToStar) {
  const Endo f = Endo::fliess(2, 1);
  const Enveloping primal{ComPreLie(f)};
  const Enveloping dual{ComPreLie(transpose_endo(f))};
  const std::vector<Letter> letters{x0, x1, x2};
  const Alphabet al({"x0", "x1", "x2"});
  const auto ms = monomials(letters, 3, 3);
  for (const auto& w : words_up_to(letters, 3)) {
    const SymPairTensor dw = primal.coproduct(w);
    for (const auto& u : ms) {
      for (const auto& v : ms) {
        if (letter_count(u) + letter_count(v) > w.size()) continue;
        const SymTensor uv = dual.star(sym(u), sym(v));
        const Rational lhs = sym_pairing(uv, sym(w));
        const Rational rhs = sym_pairing(SymPairTensor({{{u, v}, 1}}), dw);
        ASSERT_EQ(lhs, rhs) << format_word(w, al) << " | " << format_monomial(u, al) << " | " << format_monomial(v, al);
      }
    }
  }
}

TEST(SymPairing, Examples) {
  const Word w{x0, x1}, v{x1};
  EXPECT_EQ(sym_pairing(SymMonomial::single(w), SymMonomial::single(w)), 1);
  EXPECT_EQ(sym_pairing(SymMonomial::single(w), SymMonomial::single(v)), 0);
  EXPECT_EQ(sym_pairing(monomial({w, w}), monomial({w, w})), 2);
  EXPECT_EQ(sym_pairing(monomial({w, w, v, Word{}, Word{}, Word{}}), monomial({w, w, v, Word{}, Word{}, Word{}})), 12);
}

TEST(TextFormat, SymTensorsRoundTrip) {
  Alphabet al({"x0", "x1"});
  for (const char* text : {"1", "e * x0.x1", "-3/2*e * e + x1", "2*1 - x0 * x1 * x1"}) {
    const SymTensor t = parse_sym_tensor(text, al);
    EXPECT_EQ(parse_sym_tensor(format_sym_tensor(t, al), al), t) << text;
  }
  EXPECT_EQ(format_sym_tensor(parse_sym_tensor("x1 * e", al), al), "e * x1");
}

// With f∘f ≠ 0 the unit-scaled coproduct is no longer the transpose of ⋆:
// x ⋆ (∅ × ∅) pairs to 1 with f²-images while ∅ × ∅ has two automorphisms.
TEST(Coproduct, DualToStarNeedsDividedScalingBeyondSquareZero) {
  const Endo f = Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  const Enveloping primal{ComPreLie(f)};
  const Enveloping dual{ComPreLie(transpose_endo(f))};
  const std::vector<Letter> letters{x0, x1, x2};
  const auto ms = monomials(letters, 3, 3);
  std::size_t unit_mismatches = 0;
  for (const auto& w : words_up_to(letters, 3)) {
    const SymPairTensor unit = primal.coproduct(w);
    const SymPairTensor divided = primal.coproduct(w, CoproductScaling::divided);
    for (const auto& u : ms) {
      for (const auto& v : ms) {
        if (letter_count(u) + letter_count(v) > w.size()) continue;
        const Rational lhs = sym_pairing(dual.star(sym(u), sym(v)), sym(w));
        const SymPairTensor uv({{{u, v}, 1}});
        ASSERT_EQ(lhs, sym_pairing(uv, divided));
        if (lhs != sym_pairing(uv, unit)) ++unit_mismatches;
      }
    }
  }
  EXPECT_GT(unit_mismatches, 0U);
  const SymMonomial empties({Word{}, Word{}});
  EXPECT_EQ(primal.dual_coproduct(Word{x2}).coefficient({SymMonomial::single(Word{x0}), empties}), 1);
  EXPECT_EQ(primal.dual_coproduct(Word{x2}, CoproductScaling::divided)
                .coefficient({SymMonomial::single(Word{x0}), empties}),
            Rational(1, 2));
}

TEST(Coproduct, ScalingsAgreeForSquareZero) {
  const Enveloping env{ComPreLie(Endo::fliess(2, 1))};
  for (const auto& w : words_up_to({x0, x1, x2}, 3)) {
    EXPECT_EQ(env.coproduct(w), env.coproduct(w, CoproductScaling::divided));
  }
}
