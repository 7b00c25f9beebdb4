#include "oracles.hpp"

#include <comprelie/character_group.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/text_format.hpp>

#include <gtest/gtest.h>

#include <ostream>
#include <random>

using namespace comprelie;

namespace comprelie {
void PrintTo(const TruncatedSeries& s, std::ostream* os) {
  *os << format_tensor(s.terms(), Alphabet({"x0", "x1", "x2", "x3"})) << " (mod length > " << s.truncation() << ")";
}
}  // namespace comprelie

namespace {

const Letter x0 = Letter::plain(0);
const Letter x1 = Letter::plain(1);
const Letter x2 = Letter::plain(2);

// Innermost letter first: e ← Σ_i f^i(x_j)(e ⧢ v^⧢i).
Tensor nested_formula(const Endo& f, const Word& w, const Tensor& v, std::size_t top) {
  Tensor e(Word{});
  for (std::size_t j = w.size(); j-- > 0;) {
    Tensor next;
    Tensor power(Word{});
    for (std::size_t i = 0; i < 4; ++i) {
      next += prepend(f.image_power(w[j], i), shuffle(e, power));
      power = shuffle(power, v);
    }
    e = truncate(next, top);
  }
  return truncate(e, top);
}

// u(M) for a character: product over factors, u(1) = 1.
Rational evaluate(const Tensor& u, const SymMonomial& m) {
  Rational r = 1;
  for (const auto& w : m.factors()) r *= u.coefficient(w);
  return r;
}

}  // namespace

TEST(TildeCompose, Examples) {
  const Endo f = Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  const CharacterGroup g(f, 4);
  const TruncatedSeries v = g.series(Tensor(Word{x1}) + Tensor(Word{x0, x2}) * Rational(1, 2) + Tensor(Word{}) * 3);
  EXPECT_EQ(g.tilde_compose(g.series(Tensor(Word{})), v), g.series(Tensor(Word{})));
  Tensor expected;
  Tensor power(Word{});
  for (std::size_t i = 0; i < 3; ++i) {
    expected += prepend(f.image_power(x2, i), power);
    power = shuffle(power, v.terms());
  }
  EXPECT_EQ(g.tilde_compose(g.series(Tensor(Word{x2})), v), g.series(expected));
  for (const Word& w : {Word{x2, x1}, Word{x2, x2, x1}, Word{x1, x2, x0, x2}}) {
    EXPECT_EQ(g.tilde_compose(g.series(Tensor(w)), v).terms(), nested_formula(f, w, v.terms(), 4));
  }
}

TEST(TildeCompose, RejectsNonNilpotentAndMixedTruncations) {
  EXPECT_THROW(CharacterGroup(Endo::identity(2), 3), std::domain_error);
  const CharacterGroup g(Endo::fliess(1, 1), 3);
  EXPECT_THROW(g.tilde_compose(TruncatedSeries(Tensor(Word{x0}), 2), g.series(Tensor())), std::invalid_argument);
}

TEST(Diamond, IdentityAssociativityInverse) {
  const CharacterGroup g(Endo::fliess(1, 1), 4);
  std::mt19937_64 rng(20240611);
  const TruncatedSeries zero = g.series(Tensor());
  for (int trial = 0; trial < 25; ++trial) {
    const auto u = g.series(oracle::random_sparse_tensor(rng, {x0, x1}, 4, 4));
    const auto v = g.series(oracle::random_sparse_tensor(rng, {x0, x1}, 4, 4));
    const auto w = g.series(oracle::random_sparse_tensor(rng, {x0, x1}, 4, 4));
    EXPECT_EQ(g.diamond(u, zero), u);
    EXPECT_EQ(g.diamond(zero, u), u);
    EXPECT_EQ(g.diamond(g.diamond(u, v), w), g.diamond(u, g.diamond(v, w)));
    const auto inv = g.inverse(u);
    EXPECT_TRUE(g.diamond(u, inv).is_zero());
    EXPECT_TRUE(g.diamond(inv, u).is_zero());
    EXPECT_EQ(g.inverse(inv), u);
  }
  EXPECT_EQ(g.inverse(zero), zero);
}

TEST(Diamond, HigherNilpotencyNeedsDividedScaling) {
  const Endo f = Endo::matrix({{0, 1, 2}, {0, 0, -1}, {0, 0, 0}});
  const CharacterGroup divided(f, 4, CoproductScaling::divided);
  const CharacterGroup unit(f, 4);
  std::mt19937_64 rng(7);
  int unit_failures = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = divided.series(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 4, 4));
    const auto v = divided.series(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 4, 4));
    const auto w = divided.series(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 4, 4));
    EXPECT_EQ(divided.diamond(divided.diamond(u, v), w), divided.diamond(u, divided.diamond(v, w)));
    const auto inv = divided.inverse(u);
    EXPECT_TRUE(divided.diamond(u, inv).is_zero());
    EXPECT_TRUE(divided.diamond(inv, u).is_zero());
    if (unit.diamond(unit.diamond(u, v), w) != unit.diamond(u, unit.diamond(v, w))) ++unit_failures;
  }
  EXPECT_GT(unit_failures, 0);
}

TEST(Diamond, ScalingsAgreeForSquareZero) {
  const CharacterGroup unit(Endo::fliess(2, 2), 4);
  const CharacterGroup divided(Endo::fliess(2, 2), 4, CoproductScaling::divided);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = unit.series(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 4, 4));
    const auto v = unit.series(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 4, 4));
    EXPECT_EQ(unit.diamond(u, v), divided.diamond(u, v));
  }
}

TEST(TildeCompose, MatchesDualCoproductEvaluation) {
  // u ⊛̃ v (w) = (u ⊗ v)(δ̃ w), with δ̃ built from the transpose of f.
  for (const auto scaling : {CoproductScaling::unit, CoproductScaling::divided}) {
    for (const Endo& f : {Endo::fliess(2, 1), Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                            Endo::matrix({{0, 2, 1}, {0, 0, -3}, {0, 0, 0}})}) {
      const CharacterGroup g(f, 4, scaling);
      const Enveloping dual{ComPreLie(transpose_endo(f))};
      const auto words = words_up_to({x0, x1, x2}, 2);
      for (const auto& u : words) {
        for (const auto& v : words) {
          const Tensor composed = g.tilde_compose(g.series(Tensor(u)), g.series(Tensor(v))).terms();
          for (const auto& w : words) {
            Rational expected = 0;
            for (const auto& [pair, c] : dual.dual_coproduct(w, scaling)) {
              expected += c * evaluate(Tensor(u), pair.first) * evaluate(Tensor(v), pair.second);
            }
            ASSERT_EQ(composed.coefficient(w), expected);
          }
        }
      }
    }
  }
}

TEST(Fliess, FirstLetterRecursion) {
  std::mt19937_64 rng(11);
  const std::size_t n = 2, top = 4;
  for (int trial = 0; trial < 10; ++trial) {
    const FliessTuple d{TruncatedSeries(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 3, 3), top),
                        TruncatedSeries(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 3, 3), top)};
    const Tensor u = oracle::random_sparse_tensor(rng, {x0, x1, x2}, 3, 3);
    for (std::size_t i = 1; i <= n; ++i) {
      const Tensor inner = fliess_tilde({i, TruncatedSeries(u, top)}, d).series.terms();
      for (const Letter& xj : {x0, x1, x2}) {
        Tensor expected = prepend(xj, inner);
        if (xj.symbol == i) expected += prepend(x0, shuffle(inner, d[i - 1].terms()));
        EXPECT_EQ(fliess_tilde({i, TruncatedSeries(prepend(xj, u), top)}, d).series, TruncatedSeries(expected, top));
      }
    }
  }
  const FliessTuple zero{TruncatedSeries(Tensor(), 3)};
  EXPECT_EQ(fliess_tilde({1, TruncatedSeries(Tensor(Word{}), 3)}, zero).series, TruncatedSeries(Tensor(Word{}), 3));
  EXPECT_THROW(fliess_tilde({2, TruncatedSeries(Tensor(), 3)}, zero), std::invalid_argument);
}

TEST(Fliess, ChannelMatchesCharacterGroup) {
  const std::size_t n = 3, top = 4;
  const std::vector<Letter> letters{x0, x1, x2, Letter::plain(3)};
  std::mt19937_64 rng(5);
  for (std::size_t i = 1; i <= n; ++i) {
    const CharacterGroup g(Endo::fliess(n, i), top);
    for (int trial = 0; trial < 5; ++trial) {
      FliessTuple d;
      for (std::size_t k = 0; k < n; ++k) d.emplace_back(oracle::random_sparse_tensor(rng, letters, 3, 3), top);
      const Tensor v = d[i - 1].terms();
      for (const auto& w : words_up_to(letters, 3)) {
        EXPECT_EQ(fliess_tilde({i, TruncatedSeries(Tensor(w), top)}, d).series,
                  g.tilde_compose(g.series(Tensor(w)), g.series(v)));
      }
    }
  }
}

TEST(Fliess, CrossChannelTrivialAndDirectProduct) {
  const std::size_t n = 2, top = 4;
  std::mt19937_64 rng(3);
  const TruncatedSeries none(Tensor(), top);
  for (int trial = 0; trial < 10; ++trial) {
    const TruncatedSeries u(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 3, 3), top);
    const TruncatedSeries v(oracle::random_sparse_tensor(rng, {x0, x1, x2}, 3, 3), top);
    for (const auto& w : words_up_to({x0, x1, x2}, 3)) {
      EXPECT_EQ(fliess_tilde({1, TruncatedSeries(Tensor(w), top)}, {none, v}).series, TruncatedSeries(Tensor(w), top));
      EXPECT_EQ(fliess_tilde({2, TruncatedSeries(Tensor(w), top)}, {v, none}).series, TruncatedSeries(Tensor(w), top));
    }
    EXPECT_EQ(fliess_diamond({u, none}, {none, v}), (FliessTuple{u, v}));
    EXPECT_EQ(fliess_diamond({u, v}, {none, none}), (FliessTuple{u, v}));
  }
}

TEST(Fliess, SingleInputAgreesWithDiamond) {
  const CharacterGroup g(Endo::fliess(1, 1), 4);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = g.series(oracle::random_sparse_tensor(rng, {x0, x1}, 4, 4));
    const auto v = g.series(oracle::random_sparse_tensor(rng, {x0, x1}, 4, 4));
    EXPECT_EQ(fliess_diamond({u}, {v}), (FliessTuple{g.diamond(u, v)}));
  }
}

TEST(FibonacciDims, Examples) {
  const std::vector<Integer> fib{0, 1, 1, 2, 3, 5, 8, 13, 21};
  EXPECT_EQ(fibonacci_dims(1, 8), fib);
  const std::vector<Integer> pell{0, 1, 2, 5, 12, 29, 70};
  EXPECT_EQ(fibonacci_dims(2, 6), pell);
  for (unsigned long n = 1; n <= 6; ++n) {
    const auto d = fibonacci_dims(n, 10);
    const Integer m(n);
    EXPECT_EQ(d[3], m * m + 1);
    EXPECT_EQ(d[4], m * (m * m + 2));
    EXPECT_EQ(d[5], m * m * m * m + 3 * m * m + 1);
    EXPECT_EQ(d[7], m * m * m * m * m * m + 5 * m * m * m * m + 6 * m * m + 1);
    EXPECT_EQ(d[8], m * (m * m + 2) * (m * m * m * m + 4 * m * m + 2));
    EXPECT_EQ(d[9], (m * m + 1) * (m * m * m * m * m * m + 6 * m * m * m * m + 9 * m * m + 1));
    EXPECT_EQ(d[10], m * (m * m * m * m + 3 * m * m + 1) * (m * m * m * m + 5 * m * m + 5));
  }
  EXPECT_THROW(fibonacci_dims(0, 3), std::invalid_argument);
}

TEST(FibonacciDims, MatchWordCountsByDegree) {
  // x1..xn weigh 1, x0 weighs 2, and a word's degree is 1 + its weight.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<Letter> letters;
    for (std::uint32_t j = 0; j <= n; ++j) letters.push_back(Letter::plain(j));
    std::vector<Integer> counts(9, 0);
    for (const auto& w : words_up_to(letters, 7)) {
      std::size_t degree = 1;
      for (const auto& x : w) degree += x.symbol == 0 ? 2 : 1;
      if (degree <= 8) counts[degree] += 1;
    }
    EXPECT_EQ(fibonacci_dims(n, 8), counts) << n;
  }
}
