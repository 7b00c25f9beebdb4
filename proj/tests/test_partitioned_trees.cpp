#include "oracles.hpp"

#include <comprelie/admissible_words.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/partitioned_trees.hpp>
#include <comprelie/text_format.hpp>

#include <gtest/gtest.h>

#include <ostream>
#include <random>

using namespace comprelie;

namespace comprelie {
void PrintTo(const PartitionedTree& t, std::ostream* os) {
  *os << format_tree(t, Alphabet({"a", "b", "c", "d", "e"}));
}
}  // namespace comprelie

namespace {

Alphabet abcd() { return Alphabet({"a", "b", "c", "d"}); }

PartitionedTree tree(std::string_view text) {
  Alphabet al = abcd();
  return parse_tree(text, al, false);
}

Tensor biwords(std::string_view text) {
  Alphabet al = abcd();
  return parse_tensor(text, al, false);
}

TreeTensor one(const PartitionedTree& t) { return TreeTensor({{t, 1}}); }

}  // namespace

TEST(TreeText, RoundTripAndCanonicalForm) {
  Alphabet al = abcd();
  for (const char* text : {"a", "a[b]", "{a,b}", "a[{b[c],d}]", "{a[c],b[d]}", "a[b,c[d]]", "a[b[{c,d}]]"}) {
    const auto t = parse_tree(text, al, false);
    EXPECT_EQ(parse_tree(format_tree(t, al), al, false), t) << text;
  }
  EXPECT_EQ(tree("a[c,b]"), tree("a[b,c]"));
  EXPECT_EQ(tree("{b,a}"), tree("{a,b}"));
  EXPECT_NE(tree("a[{b,c}]"), tree("a[b,c]"));
  EXPECT_EQ(tree("a[d,{c,b[a]}]"), tree("a[{b[a],c},d]"));
  EXPECT_THROW(parse_tree("a[", al, false), ParseError);
  EXPECT_THROW(parse_tree("x", al, false), ParseError);
  EXPECT_THROW(parse_tree("a b", al, false), ParseError);
  const TreeTensor tt = parse_tree_tensor("2*a[b] - {a,b} + a[b]", al, false);
  EXPECT_EQ(tt.coefficient(tree("a[b]")), 3);
  EXPECT_EQ(tt.coefficient(tree("{b,a}")), -1);
  EXPECT_EQ(parse_tree_tensor(format_tree_tensor(tt, al), al, false), tt);
}

TEST(Enumeration, Counts) {
  const std::vector<std::size_t> partitioned{1, 2, 5, 14};
  const std::vector<std::size_t> rooted{1, 1, 2, 4, 9};
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(partitioned_trees(n).size(), partitioned[n - 1]) << n;
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(rooted_trees(n).size(), rooted[n - 1]) << n;
  // 8 ladders and 6 corollas; 4 ladders and 3 two-root blocks.
  EXPECT_EQ(rooted_trees(3, 2).size(), 14U);
  EXPECT_EQ(partitioned_trees(2, 2).size(), 7U);
  for (const auto& t : partitioned_trees(4)) EXPECT_EQ(t.size(), 4U);
}

TEST(Grafting, Examples) {
  const auto single = tree("a");
  EXPECT_EQ(graft_at(single, 0, tree("{b,c}")), tree("a[{b,c}]"));
  const auto ladder = tree("a[b]");
  EXPECT_EQ(graft_at(ladder, 0, single), tree("a[b,a]"));
  EXPECT_EQ(graft_at(ladder, 1, single), tree("a[b[a]]"));
  EXPECT_THROW(graft_at(ladder, 2, single), std::out_of_range);
  EXPECT_EQ(free_bullet(ladder, single), one(tree("a[b,a]")) + one(tree("a[b[a]]")));
  EXPECT_EQ(free_bullet(single, single), one(tree("a[a]")));
  // Three graftings of a[{b,c}] with one vertex, two of them equal.
  EXPECT_EQ(free_bullet(tree("a[{a,a}]"), single), one(tree("a[{a,a},a]")) + 2 * one(tree("a[{a[a],a}]")));
  // The two graftings of a 2-block forest on a ladder.
  EXPECT_EQ(free_bullet(tree("a[a]"), tree("{a,a}")), one(tree("a[a,{a,a}]")) + one(tree("a[a[{a,a}]]")));
  for (const auto& t : partitioned_trees(3)) {
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(graft_at(t, s, ladder).size(), 5U);
  }
}

TEST(TreeShuffle, Examples) {
  EXPECT_EQ(tree_shuffle(tree("a[b,c]"), tree("d")), tree("{a[b,c],d}"));
  for (const auto& s : partitioned_trees(3)) {
    for (const auto& t : partitioned_trees(2, 2)) {
      EXPECT_EQ(tree_shuffle(s, t), tree_shuffle(t, s));
      EXPECT_EQ(tree_shuffle(s, t).block_count(), s.block_count() + t.block_count() - 1);
    }
  }
}

TEST(FreeAlgebra, ComPreLieAxioms) {
  std::vector<PartitionedTree> small;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (auto& t : partitioned_trees(n, 2)) small.push_back(t);
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        const auto A = one(a), B = one(b), C = one(c);
        const TreeTensor lhs = free_bullet(free_bullet(A, B), C) - free_bullet(A, free_bullet(B, C));
        const TreeTensor rhs = free_bullet(free_bullet(A, C), B) - free_bullet(A, free_bullet(C, B));
        EXPECT_EQ(lhs, rhs);
        EXPECT_EQ(free_bullet(tree_shuffle(A, B), C), tree_shuffle(free_bullet(A, C), B) + tree_shuffle(A, free_bullet(B, C)));
        EXPECT_EQ(tree_shuffle(tree_shuffle(A, B), C), tree_shuffle(A, tree_shuffle(B, C)));
      }
    }
  }
}

TEST(LinearExtensions, Counts) {
  EXPECT_EQ(linear_extensions(tree("a")).size(), 1U);
  EXPECT_EQ(linear_extensions(tree("a[b[c[d]]]")).size(), 1U);
  EXPECT_EQ(linear_extensions(tree("a[b,c,d]")).size(), 6U);
  EXPECT_EQ(linear_extensions(tree("a[{b,c,d}]")).size(), 6U);
  EXPECT_EQ(linear_extensions(tree("a[b,c,d,a]")).size(), 24U);
  EXPECT_EQ(linear_extensions(tree("{a[b],c}")).size(), 3U);
  for (const auto& t : partitioned_trees(4)) {
    const auto parent = t.parents();
    for (const auto& ext : linear_extensions(t)) {
      std::vector<std::size_t> position(ext.size());
      for (std::size_t i = 0; i < ext.size(); ++i) position[ext[i]] = i;
      for (std::size_t v = 0; v < ext.size(); ++v) {
        if (parent[v] < ext.size()) EXPECT_LT(position[parent[v]], position[v]);
      }
    }
  }
}

// Shapes are decoded from the biwords they must produce: the upper row gives
// the fertilities along each linear extension.
TEST(PhiCpl, PrintedValues) {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"a[b]", "1:a.0:b"},
      {"{a[b],c}", "1:a.0:b.0:c + 1:a.0:c.0:b + 0:c.1:a.0:b"},
      {"a[b,c]", "2:a.0:b.0:c + 2:a.0:c.0:b"},
      {"a[b[c]]", "1:a.1:b.0:c"},
      {"a[b,c,d]",
       "3:a.0:b.0:c.0:d + 3:a.0:b.0:d.0:c + 3:a.0:c.0:b.0:d + 3:a.0:c.0:d.0:b + 3:a.0:d.0:b.0:c + 3:a.0:d.0:c.0:b"},
      {"a[b[c],d]", "2:a.1:b.0:c.0:d + 2:a.1:b.0:d.0:c + 2:a.0:d.1:b.0:c"},
      {"a[b[c,d]]", "1:a.2:b.0:c.0:d + 1:a.2:b.0:d.0:c"},
      {"{a[c],b[d]}",
       "1:a.0:c.1:b.0:d + 1:a.1:b.0:c.0:d + 1:a.1:b.0:d.0:c + 1:b.1:a.0:c.0:d + 1:b.1:a.0:d.0:c + 1:b.0:d.1:a.0:c"},
      {"a[{b[c],d}]", "1:a.1:b.0:c.0:d + 1:a.1:b.0:d.0:c + 1:a.0:d.1:b.0:c"},
      {"a[b[c[d]]]", "1:a.1:b.1:c.0:d"},
  };
  for (const auto& [t, expected] : cases) {
    const Tensor want = biwords(expected);
    EXPECT_EQ(phi_cpl(tree(t)), want) << t;
    EXPECT_EQ(phi_cpl(tree(t), PhiMode::recursive), want) << t;
  }
}

TEST(PhiCpl, KernelWitness) {
  const TreeTensor witness = one(tree("{a[a],a[a]}")) - 2 * one(tree("a[{a[a],a}]"));
  EXPECT_TRUE(phi_cpl(witness).is_zero());
  EXPECT_TRUE(phi_cpl(witness, PhiMode::recursive).is_zero());
  EXPECT_FALSE(phi_cpl(one(tree("{a[a],a[a]}"))).is_zero());
}

TEST(PhiCpl, RecursiveMatchesDirect) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : partitioned_trees(n, n <= 3 ? 2 : 1)) {
      EXPECT_EQ(phi_cpl(t, PhiMode::recursive), phi_cpl(t)) << format_tree(t, abcd());
    }
  }
}

TEST(PhiCpl, IsAMorphism) {
  const ComPreLie target(Endo::biletter_shift());
  std::vector<PartitionedTree> small;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& t : partitioned_trees(n, 2)) small.push_back(t);
  }
  for (const auto& s : small) {
    for (const auto& t : small) {
      if (s.size() + t.size() > 4) continue;
      EXPECT_EQ(phi_cpl(tree_shuffle(s, t)), shuffle(phi_cpl(s), phi_cpl(t)));
      EXPECT_EQ(phi_cpl(free_bullet(s, t)), target.prelie(phi_cpl(s), phi_cpl(t)));
    }
  }
}

TEST(PhiCpl, FertilitySumAndAdmissibility) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : partitioned_trees(n)) {
      for (const auto& [w, c] : phi_cpl(t)) {
        std::vector<unsigned> upper;
        unsigned total = 0;
        for (const auto& x : w) {
          upper.push_back(static_cast<unsigned>(x.level));
          total += static_cast<unsigned>(x.level);
        }
        EXPECT_EQ(total + 1, t.block_count());
        EXPECT_TRUE(is_sigma_admissible(upper));
        if (t.is_rooted_tree()) EXPECT_TRUE(is_admissible(upper));
      }
    }
  }
}

TEST(PhiPl, InjectiveDegreewise) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const RankReport r = injectivity_rank(n);
    EXPECT_TRUE(r.full()) << n;
  }
  EXPECT_EQ(injectivity_rank(5).rank, 9U);
  EXPECT_EQ(injectivity_rank(3, 2).rank, rooted_trees(3, 2).size());
  // The Com-Pre-Lie map is not injective at 4 vertices.
  const RankReport all = image_rank(partitioned_trees(4));
  EXPECT_LT(all.rank, all.count);
}

TEST(PhiPl, PsiRelation) {
  // (0:d) • ((0:d) × (0:d)) = 2 (1:d) • (0:d)(0:d) in the biletter algebra.
  const Enveloping env{ComPreLie(Endo::biletter_shift())};
  const Letter d0 = Letter::biletter(0, 0), d1 = Letter::biletter(1, 0);
  const SymTensor corolla = env.extend_bullet(sym(Word{d0}), sym(monomial({Word{d0}, Word{d0}})));
  const SymTensor ladder = env.extend_bullet(sym(Word{d1}), sym(Word{d0, d0}));
  EXPECT_EQ(corolla, ladder * Rational(2));
  EXPECT_FALSE(corolla.is_zero());
}

TEST(PhiInto, Examples) {
  const Endo f = Endo::matrix({{1, 2}, {3, -1}});
  const LetterCombination v{{Letter::plain(0), 2}, {Letter::plain(1), -1}};
  const LetterCombination w{{Letter::plain(1), Rational(1, 2)}};
  const std::vector<LetterCombination> values{v, w};
  EXPECT_EQ(phi_into(tree("a"), f, values), to_tensor(v));
  EXPECT_EQ(phi_into(tree("a[b]"), f, values), prepend(apply_letters(f, v), to_tensor(w)));
  EXPECT_EQ(phi_into(tree("{a,b}"), f, values), shuffle(to_tensor(v), to_tensor(w)));
  EXPECT_THROW(phi_into(tree("c"), f, values), std::out_of_range);
  // Agrees with the direct formula Σ_σ f^fert(d(σ1)) ... f^fert(d(σn)).
  const auto t = tree("a[b[a],{a,b}]");
  Tensor expected;
  const auto order = t.preorder();
  for (const auto& ext : linear_extensions(t)) {
    Tensor word(Word{});
    for (auto i : ext) {
      LetterCombination x = values[order[i]->decoration.symbol];
      for (std::size_t k = 0; k < order[i]->child_blocks.size(); ++k) x = apply_letters(f, x);
      word = concatenate(word, to_tensor(x));
    }
    expected += word;
  }
  EXPECT_EQ(phi_into(t, f, values), expected);
}

TEST(PhiInto, SurjectivityRanks) {
  auto basis_values = [](std::size_t dim) {
    std::vector<LetterCombination> out;
    for (std::uint32_t i = 0; i < dim; ++i) out.push_back({{Letter::plain(i), 1}});
    return out;
  };
  {
    const Endo f = Endo::matrix({{1, 1}, {1, 2}});
    EchelonBasis<Word, LengthLexLess> span;
    for (const auto& t : rooted_trees(2, 2)) span.insert(phi_into(t, f, basis_values(2)));
    EXPECT_EQ(span.rank(), 4U);
  }
  {
    // Image of f is spanned by x0, x1; x2 and x3 lie outside.
    const Endo f = Endo::matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    EchelonBasis<Word, LengthLexLess> span;
    for (const auto& t : partitioned_trees(2, 4)) span.insert(phi_into(t, f, basis_values(4)));
    EXPECT_LT(span.rank(), 16U);
    const Letter x = Letter::plain(2), y = Letter::plain(3);
    EXPECT_FALSE(span.contains(Tensor(Word{x, y}) - Tensor(Word{y, x})));
  }
}
