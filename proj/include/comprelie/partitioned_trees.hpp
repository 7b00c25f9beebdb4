#pragma once

#include <comprelie/endomorphism.hpp>
#include <comprelie/linear_combination.hpp>
#include <comprelie/words.hpp>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace comprelie {

// A vertex with its children grouped into blocks. The number of child blocks
// is the fertility of the vertex.
struct TreeVertex {
  Letter decoration;
  std::vector<std::vector<TreeVertex>> child_blocks;
};

std::strong_ordering compare(const TreeVertex& a, const TreeVertex& b);
std::strong_ordering compare(const std::vector<TreeVertex>& a, const std::vector<TreeVertex>& b);

// A partitioned tree: its roots form one block. Kept in canonical form
// (vertices inside a block and the blocks of a vertex sorted), so that
// isomorphic trees compare equal.
class PartitionedTree {
 public:
  // Throws std::invalid_argument on an empty root block or an empty child block.
  explicit PartitionedTree(std::vector<TreeVertex> roots);
  static PartitionedTree single(const Letter& decoration);

  const std::vector<TreeVertex>& roots() const { return roots_; }
  std::size_t size() const;
  std::size_t block_count() const;
  // One root and singleton blocks only.
  bool is_rooted_tree() const;
  // Vertices in preorder: a vertex, then its child blocks in order; roots in order.
  std::vector<const TreeVertex*> preorder() const;
  // parent[i] for preorder indices; the roots have parent size().
  std::vector<std::size_t> parents() const;

  friend bool operator==(const PartitionedTree& a, const PartitionedTree& b) {
    return compare(a.roots_, b.roots_) == 0;
  }
  friend std::strong_ordering operator<=>(const PartitionedTree& a, const PartitionedTree& b) {
    return compare(a.roots_, b.roots_);
  }

 private:
  std::vector<TreeVertex> roots_;
};

struct TreeLess {
  bool operator()(const PartitionedTree& a, const PartitionedTree& b) const { return a < b; }
};
using TreeTensor = LinearCombination<PartitionedTree, TreeLess>;

// Grafts the roots of graft, as one new child block, on the vertex with
// preorder index vertex. Throws std::out_of_range on a bad index.
PartitionedTree graft_at(const PartitionedTree& t, std::size_t vertex, const PartitionedTree& graft);
// Forest tt' with the two root blocks merged.
PartitionedTree tree_shuffle(const PartitionedTree& a, const PartitionedTree& b);
TreeTensor tree_shuffle(const TreeTensor& a, const TreeTensor& b);
// t • t' = Σ_s t •_s t'.
TreeTensor free_bullet(const PartitionedTree& a, const PartitionedTree& b);
TreeTensor free_bullet(const TreeTensor& a, const TreeTensor& b);

// Orders of the preorder indices in which every parent precedes its children.
std::vector<std::vector<std::size_t>> linear_extensions(const PartitionedTree& t);

enum class PhiMode { direct, recursive };

// The morphism to biwords sending a one-vertex tree d to (0:d). direct sums
// the biwords (fert, decoration) over linear extensions; recursive evaluates
// products in the biletter algebra.
Tensor phi_cpl(const PartitionedTree& t, PhiMode mode = PhiMode::direct);
Tensor phi_cpl(const TreeTensor& t, PhiMode mode = PhiMode::direct);

// Image in T(V,f) when the decoration symbol d stands for values[d] in V:
// the biletter (k:d) becomes f^k(values[d]). Multilinear in the values.
// Throws std::out_of_range if a decoration has no value.
Tensor phi_into(const PartitionedTree& t, const Endo& f, const std::vector<LetterCombination>& values);
Tensor phi_into(const TreeTensor& t, const Endo& f, const std::vector<LetterCombination>& values);

// All partitioned trees (or rooted trees) with n >= 1 vertices decorated by
// the plain symbols 0..decorations-1, in canonical order.
std::vector<PartitionedTree> partitioned_trees(std::size_t n, std::size_t decorations = 1);
std::vector<PartitionedTree> rooted_trees(std::size_t n, std::size_t decorations = 1);

struct RankReport {
  std::size_t rank = 0;
  std::size_t count = 0;
  bool full() const { return rank == count; }
};

// Rank of the images of the given trees under phi_cpl.
RankReport image_rank(const std::vector<PartitionedTree>& trees);
// image_rank over the rooted trees with exactly `degree` vertices.
RankReport injectivity_rank(std::size_t degree, std::size_t decorations = 1);

// Tree text: vertex := name ['[' block (',' block)* ']'],
// block := vertex | '{' vertex (',' vertex)* '}'. The whole tree is a block.
PartitionedTree parse_tree(std::string_view text, Alphabet& alphabet, bool extend = true);
// Linear combinations of trees: "2*a[b] - {a,b}".
TreeTensor parse_tree_tensor(std::string_view text, Alphabet& alphabet, bool extend = true);
std::string format_tree(const PartitionedTree& t, const Alphabet& alphabet);
std::string format_tree_tensor(const TreeTensor& t, const Alphabet& alphabet);

}  // namespace comprelie
