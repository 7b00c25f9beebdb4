#pragma once

#include <comprelie/linear_combination.hpp>
#include <comprelie/oudom_guin.hpp>
#include <comprelie/partitioned_trees.hpp>
#include <comprelie/words.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace comprelie {

// Rooted trees decorated by plain symbols are partitioned trees with one root
// and singleton blocks. A forest is a monomial of trees; the unit is the empty
// forest.
using Forest = Monomial<PartitionedTree, TreeLess>;
using ForestPoly = SymCombination<PartitionedTree, TreeLess>;
using ForestPairPoly = SymPairCombination<PartitionedTree, TreeLess>;

// Weight of the symbol d is weights[d].
using Weights = std::vector<Rational>;

PartitionedTree leaf(std::uint32_t symbol);
// The tree with no ramification, decorated by the word from root to leaf.
// Throws std::invalid_argument on an empty word.
PartitionedTree ladder(const Word& word);
ForestPoly as_forest(const PartitionedTree& t);

// Admissible cuts: R^c (root part) ⊗ P^c (pruned forest), including the empty
// and the total cut. Multiplicative on forests.
// Throws std::invalid_argument for a tree that is not rooted.
ForestPairPoly ck_coproduct(const PartitionedTree& t);
ForestPairPoly ck_coproduct(const Forest& f);
ForestPairPoly ck_coproduct(const ForestPoly& p);

// Order of the decoration-preserving automorphism group.
Integer symmetry_factor(const PartitionedTree& t);
Integer symmetry_factor(const Forest& f);
// ⟨F, G⟩ = δ(F, G) s_F, extended bilinearly.
Rational pairing(const Forest& a, const Forest& b);
Rational pairing(const ForestPoly& a, const ForestPoly& b);
Rational pairing(const ForestPairPoly& a, const ForestPairPoly& b);

// N_d(F) = Σ_s λ_{d(s)} F •_s d, a derivation. Throws std::out_of_range when a
// decoration has no weight.
ForestPoly graft_leaf(const ForestPoly& p, std::uint32_t symbol, const Weights& weights);
// F ↦ (Σ_s λ_{d(s)}) F.
ForestPoly weight_scale(const ForestPoly& p, const Weights& weights);
// Keeps the single-tree terms.
ForestPoly tree_part(const ForestPoly& p);

// t_{d1} = d1 and t_{d1...dn} = N_{dn}(t_{d1...d(n-1)}). Throws
// std::invalid_argument on an empty word.
ForestPoly t_word(const Word& word, const Weights& weights);

// m(J): the largest i with {1..i} ⊆ J, 0 when 1 is missing. J holds 0-based
// positions.
std::size_t prefix_run(const std::vector<std::size_t>& positions);

enum class CobracketMode { closed, projected };

// δ(t_w) in the basis t_u ⊗ t_v; the term (u, v) stands for t_u ⊗ t_v.
// closed sums over proper subsets I with weight Σ_{i ≤ m(I)} λ_{d_i};
// projected applies (π ⊗ π) ∘ Δ to t_w and reads the coefficients off the
// ladders, throwing std::domain_error if a weight in w is zero and
// std::logic_error if the result leaves the span.
WordPairTensor delta_cobracket(const Word& word, const Weights& weights, CobracketMode mode = CobracketMode::closed);

// u • v read off δ in the dual basis t*_w ↔ x_w.
Tensor dual_prelie_coeff(const Weights& weights, const Word& u, const Word& v);

struct BracketCheck {
  Tensor computed;
  Tensor expected;
  bool holds() const { return computed == expected; }
};
// y_k = (k+1)!/λ x^k in one variable with f = λ Id: [y_k, y_l] against
// (k - l) y_{k+l}. Throws std::domain_error for λ = 0 and std::invalid_argument
// for k or l = 0.
Tensor y_element(const Rational& lambda, unsigned k);
BracketCheck y_bracket_check(const Rational& lambda, unsigned k, unsigned l);

// Free pre-Lie algebra on rooted trees, grafting the right tree on the
// vertices of the left one. Its Oudom–Guin product is dual to ck_coproduct.
struct TreePreLie {
  using Key = PartitionedTree;
  using Less = TreeLess;
  TreeTensor bullet(const PartitionedTree& a, const PartitionedTree& b) const { return free_bullet(a, b); }
};
using GrossmanLarson = OudomGuin<TreePreLie>;

// Trees joined by spaces inside a forest; the unit prints as "1".
std::string format_forest(const Forest& f, const Alphabet& alphabet);
std::string format_forest_poly(const ForestPoly& p, const Alphabet& alphabet);
std::string format_word_pairs(const WordPairTensor& t, const Alphabet& alphabet);

}  // namespace comprelie
