#include <comprelie/partitioned_trees.hpp>

#include <comprelie/complie.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/text_format.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace comprelie {

std::strong_ordering compare(const TreeVertex& a, const TreeVertex& b) {
  if (auto c = a.decoration <=> b.decoration; c != 0) return c;
  const auto& x = a.child_blocks;
  const auto& y = b.child_blocks;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = compare(x[i], y[i]); c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering compare(const std::vector<TreeVertex>& a, const std::vector<TreeVertex>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (auto c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

namespace {

bool vertex_less(const TreeVertex& a, const TreeVertex& b) { return compare(a, b) < 0; }
bool block_less(const std::vector<TreeVertex>& a, const std::vector<TreeVertex>& b) { return compare(a, b) < 0; }

void canonicalize(std::vector<TreeVertex>& block) {
  for (auto& v : block) {
    for (auto& child : v.child_blocks) {
      if (child.empty()) throw std::invalid_argument("empty block in a partitioned tree");
      canonicalize(child);
    }
    std::sort(v.child_blocks.begin(), v.child_blocks.end(), block_less);
  }
  std::sort(block.begin(), block.end(), vertex_less);
}

template <typename Vertex, typename Visit>
void walk(Vertex& v, Visit&& visit) {
  visit(v);
  for (auto& block : v.child_blocks) {
    for (auto& c : block) walk(c, visit);
  }
}

std::vector<TreeVertex*> mutable_preorder(std::vector<TreeVertex>& roots) {
  std::vector<TreeVertex*> out;
  for (auto& r : roots) walk(r, [&](TreeVertex& v) { out.push_back(&v); });
  return out;
}

}  // namespace

PartitionedTree::PartitionedTree(std::vector<TreeVertex> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw std::invalid_argument("a partitioned tree needs at least one root");
  canonicalize(roots_);
}

PartitionedTree PartitionedTree::single(const Letter& decoration) { return PartitionedTree({TreeVertex{decoration, {}}}); }

std::size_t PartitionedTree::size() const { return preorder().size(); }

std::size_t PartitionedTree::block_count() const {
  std::size_t n = 1;
  for (const auto* v : preorder()) n += v->child_blocks.size();
  return n;
}

bool PartitionedTree::is_rooted_tree() const {
  if (roots_.size() != 1) return false;
  for (const auto* v : preorder()) {
    for (const auto& b : v->child_blocks) {
      if (b.size() != 1) return false;
    }
  }
  return true;
}

std::vector<const TreeVertex*> PartitionedTree::preorder() const {
  std::vector<const TreeVertex*> out;
  for (const auto& r : roots_) walk(r, [&](const TreeVertex& v) { out.push_back(&v); });
  return out;
}

std::vector<std::size_t> PartitionedTree::parents() const {
  const auto order = preorder();
  std::vector<std::size_t> parent(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t next = i + 1;
    for (const auto& block : order[i]->child_blocks) {
      for (const auto& child : block) {
        parent[next] = i;
        std::size_t sub = 0;
        walk(child, [&](const TreeVertex&) { ++sub; });
        next += sub;
      }
    }
  }
  return parent;
}

PartitionedTree graft_at(const PartitionedTree& t, std::size_t vertex, const PartitionedTree& graft) {
  auto roots = t.roots();
  auto order = mutable_preorder(roots);
  if (vertex >= order.size()) throw std::out_of_range("no such vertex");
  order[vertex]->child_blocks.push_back(graft.roots());
  return PartitionedTree(std::move(roots));
}

PartitionedTree tree_shuffle(const PartitionedTree& a, const PartitionedTree& b) {
  auto roots = a.roots();
  roots.insert(roots.end(), b.roots().begin(), b.roots().end());
  return PartitionedTree(std::move(roots));
}

TreeTensor tree_shuffle(const TreeTensor& a, const TreeTensor& b) {
  TreeTensor out;
  for (const auto& [s, c] : a) {
    for (const auto& [t, d] : b) out.add(tree_shuffle(s, t), c * d);
  }
  return out;
}

TreeTensor free_bullet(const PartitionedTree& a, const PartitionedTree& b) {
  TreeTensor out;
  const std::size_t n = a.size();
  for (std::size_t s = 0; s < n; ++s) out.add(graft_at(a, s, b), 1);
  return out;
}

TreeTensor free_bullet(const TreeTensor& a, const TreeTensor& b) {
  TreeTensor out;
  for (const auto& [s, c] : a) {
    for (const auto& [t, d] : b) out.add_scaled(free_bullet(s, t), c * d);
  }
  return out;
}

std::vector<std::vector<std::size_t>> linear_extensions(const PartitionedTree& t) {
  const auto parent = t.parents();
  const std::size_t n = parent.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  auto extend = [&](auto&& self) -> void {
    if (order.size() == n) {
      out.push_back(order);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || (parent[v] < n && !placed[parent[v]])) continue;
      placed[v] = true;
      order.push_back(v);
      self(self);
      order.pop_back();
      placed[v] = false;
    }
  };
  extend(extend);
  return out;
}

namespace {

Letter biletter_of(const TreeVertex& v) {
  return Letter::biletter(static_cast<std::uint32_t>(v.child_blocks.size()), v.decoration.symbol);
}

Tensor phi_direct(const PartitionedTree& t) {
  const auto order = t.preorder();
  Tensor out;
  for (const auto& ext : linear_extensions(t)) {
    Word w;
    for (auto i : ext) w.push_back(biletter_of(*order[i]));
    out.add(w, 1);
  }
  return out;
}

const Enveloping& biletter_envelope() {
  static const Enveloping env{ComPreLie(Endo::biletter_shift())};
  return env;
}

Tensor phi_recursive_block(const std::vector<TreeVertex>& block);

// One vertex with its descendants: (0:d) • (Φ(B1) × ... × Φ(Bk)).
Tensor phi_recursive_vertex(const TreeVertex& v) {
  const Word root{Letter::biletter(0, v.decoration.symbol)};
  SymTensor factors = sym(SymMonomial{});
  for (const auto& block : v.child_blocks) factors = sym_product(factors, as_symmetric(phi_recursive_block(block)));
  return single_factor_part(biletter_envelope().extend_bullet(sym(root), factors));
}

Tensor phi_recursive_block(const std::vector<TreeVertex>& block) {
  Tensor out(Word{});
  for (const auto& v : block) out = shuffle(out, phi_recursive_vertex(v));
  return out;
}

}  // namespace

Tensor phi_cpl(const PartitionedTree& t, PhiMode mode) {
  for (const auto* v : t.preorder()) {
    if (v->decoration.is_biletter()) throw std::invalid_argument("tree decorations must be plain symbols");
  }
  return mode == PhiMode::direct ? phi_direct(t) : phi_recursive_block(t.roots());
}

Tensor phi_cpl(const TreeTensor& t, PhiMode mode) {
  Tensor out;
  for (const auto& [s, c] : t) out.add_scaled(phi_cpl(s, mode), c);
  return out;
}

Tensor phi_into(const PartitionedTree& t, const Endo& f, const std::vector<LetterCombination>& values) {
  const LetterMap specialize([&](const Letter& x) {
    if (x.symbol >= values.size()) throw std::out_of_range("decoration without a value");
    LetterCombination v = values[x.symbol];
    for (std::int32_t k = 0; k < x.level; ++k) v = apply_letters(f, v);
    return v;
  });
  return induced_morphism(specialize, phi_cpl(t));
}

Tensor phi_into(const TreeTensor& t, const Endo& f, const std::vector<LetterCombination>& values) {
  Tensor out;
  for (const auto& [s, c] : t) out.add_scaled(phi_into(s, f, values), c);
  return out;
}

std::vector<PartitionedTree> partitioned_trees(std::size_t n, std::size_t decorations) {
  if (n == 0 || decorations == 0) return {};
  std::set<PartitionedTree> level;
  for (std::uint32_t d = 0; d < decorations; ++d) level.insert(PartitionedTree::single(Letter::plain(d)));
  for (std::size_t size = 1; size < n; ++size) {
    std::set<PartitionedTree> next;
    for (const auto& t : level) {
      for (std::uint32_t d = 0; d < decorations; ++d) {
        const TreeVertex leaf{Letter::plain(d), {}};
        auto with_root = t.roots();
        with_root.push_back(leaf);
        next.insert(PartitionedTree(std::move(with_root)));
        for (std::size_t s = 0; s <= size - 1; ++s) {
          auto roots = t.roots();
          auto order = mutable_preorder(roots);
          const std::size_t blocks = order[s]->child_blocks.size();
          for (std::size_t b = 0; b <= blocks; ++b) {
            auto copy = t.roots();
            auto at = mutable_preorder(copy)[s];
            if (b == blocks) {
              at->child_blocks.push_back({leaf});
            } else {
              at->child_blocks[b].push_back(leaf);
            }
            next.insert(PartitionedTree(std::move(copy)));
          }
        }
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<PartitionedTree> rooted_trees(std::size_t n, std::size_t decorations) {
  std::vector<PartitionedTree> out;
  for (auto& t : partitioned_trees(n, decorations)) {
    if (t.is_rooted_tree()) out.push_back(std::move(t));
  }
  return out;
}

RankReport image_rank(const std::vector<PartitionedTree>& trees) {
  EchelonBasis<Word, LengthLexLess> basis;
  for (const auto& t : trees) basis.insert(phi_cpl(t));
  return {basis.rank(), trees.size()};
}

RankReport injectivity_rank(std::size_t degree, std::size_t decorations) {
  return image_rank(rooted_trees(degree, decorations));
}

namespace {

std::uint32_t tree_name(Scanner& s, Alphabet& alphabet, bool extend) {
  s.skip_space();
  const std::size_t pos = s.position();
  const auto tok = s.token();
  bool digits = true;
  for (char c : tok) {
    if (c == '.' || c == ':' || c == '/') throw ParseError("invalid decoration '" + std::string(tok) + "'", pos);
    digits = digits && c >= '0' && c <= '9';
  }
  if (digits) throw ParseError("invalid decoration '" + std::string(tok) + "'", pos);
  if (auto i = alphabet.find(tok)) return *i;
  if (!extend) throw ParseError("unknown decoration '" + std::string(tok) + "'", pos);
  return alphabet.intern(tok);
}

std::vector<TreeVertex> parse_block(Scanner& s, Alphabet& alphabet, bool extend);

TreeVertex parse_vertex(Scanner& s, Alphabet& alphabet, bool extend) {
  TreeVertex v{Letter::plain(tree_name(s, alphabet, extend)), {}};
  if (s.accept('[')) {
    do {
      v.child_blocks.push_back(parse_block(s, alphabet, extend));
    } while (s.accept(','));
    s.expect(']');
  }
  return v;
}

std::vector<TreeVertex> parse_block(Scanner& s, Alphabet& alphabet, bool extend) {
  if (!s.accept('{')) return {parse_vertex(s, alphabet, extend)};
  std::vector<TreeVertex> block;
  do {
    block.push_back(parse_vertex(s, alphabet, extend));
  } while (s.accept(','));
  s.expect('}');
  return block;
}

std::string format_block(const std::vector<TreeVertex>& block, const Alphabet& alphabet);

std::string format_vertex(const TreeVertex& v, const Alphabet& alphabet) {
  std::string out = alphabet.name(v.decoration.symbol);
  if (v.child_blocks.empty()) return out;
  out += '[';
  for (std::size_t i = 0; i < v.child_blocks.size(); ++i) {
    if (i > 0) out += ',';
    out += format_block(v.child_blocks[i], alphabet);
  }
  return out + ']';
}

std::string format_block(const std::vector<TreeVertex>& block, const Alphabet& alphabet) {
  if (block.size() == 1) return format_vertex(block.front(), alphabet);
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += ',';
    out += format_vertex(block[i], alphabet);
  }
  return out + '}';
}

}  // namespace

PartitionedTree parse_tree(std::string_view text, Alphabet& alphabet, bool extend) {
  Scanner s(text);
  auto block = parse_block(s, alphabet, extend);
  if (!s.at_end()) s.fail("unexpected trailing input");
  return PartitionedTree(std::move(block));
}

TreeTensor parse_tree_tensor(std::string_view text, Alphabet& alphabet, bool extend) {
  Scanner s(text);
  if (s.at_end()) s.fail("empty expression");
  TreeTensor out;
  parse_sum(s, [&](Scanner& sc, const Rational& sign) {
    Rational coeff = sign;
    sc.skip_space();
    if (!sc.peek('{')) {
      // A leading number is a coefficient when followed by '*'.
      Scanner probe = sc;
      const auto tok = probe.token();
      if (looks_like_rational(tok)) {
        if (!probe.accept('*')) {
          if (tok == "0") {
            sc = probe;
            return;
          }
          sc.fail("expected '*' after a coefficient");
        }
        coeff *= parse_rational(tok);
        sc = probe;
      }
    }
    out.add(PartitionedTree(parse_block(sc, alphabet, extend)), coeff);
  });
  return out;
}

std::string format_tree(const PartitionedTree& t, const Alphabet& alphabet) { return format_block(t.roots(), alphabet); }

std::string format_tree_tensor(const TreeTensor& t, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [tree, c] : t) terms.emplace_back(c, format_tree(tree, alphabet));
  return format_terms(terms);
}

}  // namespace comprelie
