#include <comprelie/faa_di_bruno.hpp>

#include <comprelie/complie.hpp>
#include <comprelie/text_format.hpp>

#include <optional>
#include <stdexcept>

namespace comprelie {

PartitionedTree leaf(std::uint32_t symbol) { return PartitionedTree::single(Letter::plain(symbol)); }

PartitionedTree ladder(const Word& word) {
  if (word.empty()) throw std::invalid_argument("a ladder needs at least one vertex");
  TreeVertex v{word.back(), {}};
  for (std::size_t i = word.size() - 1; i-- > 0;) v = TreeVertex{word[i], {{std::move(v)}}};
  return PartitionedTree({std::move(v)});
}

ForestPoly as_forest(const PartitionedTree& t) { return ForestPoly(Forest::single(t)); }

namespace {

void require_rooted(const PartitionedTree& t) {
  if (!t.is_rooted_tree()) throw std::invalid_argument("expected a rooted tree");
}

struct Cut {
  TreeVertex root_part;
  std::vector<PartitionedTree> pruned;
};

std::vector<Cut> cuts_below(const TreeVertex& v) {
  std::vector<Cut> partial{{TreeVertex{v.decoration, {}}, {}}};
  for (const auto& block : v.child_blocks) {
    const TreeVertex& child = block.front();
    const auto below = cuts_below(child);
    std::vector<Cut> next;
    for (const auto& p : partial) {
      Cut cut_here = p;
      cut_here.pruned.push_back(PartitionedTree({child}));
      next.push_back(std::move(cut_here));
      for (const auto& c : below) {
        Cut keep = p;
        keep.root_part.child_blocks.push_back({c.root_part});
        keep.pruned.insert(keep.pruned.end(), c.pruned.begin(), c.pruned.end());
        next.push_back(std::move(keep));
      }
    }
    partial = std::move(next);
  }
  return partial;
}

Integer vertex_symmetry(const TreeVertex& v) {
  Integer s = 1;
  std::size_t run = 1;
  const auto& blocks = v.child_blocks;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    s *= vertex_symmetry(blocks[i].front());
    if (i > 0 && compare(blocks[i - 1], blocks[i]) == 0) {
      ++run;
      s *= static_cast<unsigned long>(run);
    } else {
      run = 1;
    }
  }
  return s;
}

const Rational& weight_of(const Weights& weights, const Letter& x) {
  if (x.symbol >= weights.size()) throw std::out_of_range("no weight for decoration " + std::to_string(x.symbol));
  return weights[x.symbol];
}

ForestPoly graft_leaf(const PartitionedTree& t, std::uint32_t symbol, const Weights& weights) {
  ForestPoly out;
  const auto order = t.preorder();
  const PartitionedTree l = leaf(symbol);
  for (std::size_t s = 0; s < order.size(); ++s) {
    const Rational& w = weight_of(weights, order[s]->decoration);
    if (w != 0) out.add(Forest::single(graft_at(t, s, l)), w);
  }
  return out;
}

// The word read from root to leaf, if t is a ladder.
std::optional<Word> ladder_word(const PartitionedTree& t) {
  if (t.roots().size() != 1) return std::nullopt;
  Word w;
  const TreeVertex* v = &t.roots().front();
  while (true) {
    w.push_back(v->decoration);
    if (v->child_blocks.empty()) return w;
    if (v->child_blocks.size() != 1 || v->child_blocks.front().size() != 1) return std::nullopt;
    v = &v->child_blocks.front().front();
  }
}

Rational ladder_coefficient(const Word& w, const Weights& weights) {
  Rational c = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) c *= weight_of(weights, w[i]);
  return c;
}

ForestPairPoly pair_product(const ForestPairPoly& a, const ForestPairPoly& b) {
  ForestPairPoly out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add({x.first.times(y.first), x.second.times(y.second)}, c * d);
  }
  return out;
}

ForestPairPoly tensor(const ForestPoly& a, const ForestPoly& b) {
  ForestPairPoly out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add({x, y}, c * d);
  }
  return out;
}

}  // namespace

ForestPairPoly ck_coproduct(const PartitionedTree& t) {
  require_rooted(t);
  ForestPairPoly out;
  for (auto& c : cuts_below(t.roots().front())) {
    out.add({Forest::single(PartitionedTree({std::move(c.root_part)})), Forest(std::move(c.pruned))}, 1);
  }
  out.add({Forest{}, Forest::single(t)}, 1);
  return out;
}

ForestPairPoly ck_coproduct(const Forest& f) {
  ForestPairPoly out;
  out.add({Forest{}, Forest{}}, 1);
  for (const auto& t : f.factors()) out = pair_product(out, ck_coproduct(t));
  return out;
}

ForestPairPoly ck_coproduct(const ForestPoly& p) {
  ForestPairPoly out;
  for (const auto& [f, c] : p) out.add_scaled(ck_coproduct(f), c);
  return out;
}

Integer symmetry_factor(const PartitionedTree& t) {
  require_rooted(t);
  return vertex_symmetry(t.roots().front());
}

Integer symmetry_factor(const Forest& f) {
  Integer s = static_cast<unsigned long>(f.symmetry());
  for (const auto& t : f.factors()) s *= symmetry_factor(t);
  return s;
}

Rational pairing(const Forest& a, const Forest& b) { return a == b ? Rational(symmetry_factor(a)) : Rational(0); }

Rational pairing(const ForestPoly& a, const ForestPoly& b) {
  Rational s = 0;
  for (const auto& [f, c] : a) {
    const Rational d = b.coefficient(f);
    if (d != 0) s += c * d * Rational(symmetry_factor(f));
  }
  return s;
}

Rational pairing(const ForestPairPoly& a, const ForestPairPoly& b) {
  Rational s = 0;
  for (const auto& [p, c] : a) {
    const Rational d = b.coefficient(p);
    if (d != 0) s += c * d * Rational(symmetry_factor(p.first) * symmetry_factor(p.second));
  }
  return s;
}

ForestPoly graft_leaf(const ForestPoly& p, std::uint32_t symbol, const Weights& weights) {
  ForestPoly out;
  for (const auto& [f, c] : p) {
    const auto& trees = f.factors();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::vector<PartitionedTree> others = trees;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      const Forest rest(std::move(others));
      for (const auto& [g, d] : graft_leaf(trees[i], symbol, weights)) out.add(g.times(rest), c * d);
    }
  }
  return out;
}

ForestPoly weight_scale(const ForestPoly& p, const Weights& weights) {
  ForestPoly out;
  for (const auto& [f, c] : p) {
    Rational total = 0;
    for (const auto& t : f.factors()) {
      for (const auto* v : t.preorder()) total += weight_of(weights, v->decoration);
    }
    out.add(f, c * total);
  }
  return out;
}

ForestPoly tree_part(const ForestPoly& p) {
  ForestPoly out;
  for (const auto& [f, c] : p) {
    if (f.degree() == 1) out.add(f, c);
  }
  return out;
}

ForestPoly t_word(const Word& word, const Weights& weights) {
  if (word.empty()) throw std::invalid_argument("t_w needs a nonempty word");
  ForestPoly t = as_forest(leaf(word.front().symbol));
  for (std::size_t i = 1; i < word.size(); ++i) t = graft_leaf(t, word[i].symbol, weights);
  return t;
}

std::size_t prefix_run(const std::vector<std::size_t>& positions) {
  std::size_t m = 0;
  for (auto p : positions) {
    if (p != m) break;
    ++m;
  }
  return m;
}

namespace {

WordPairTensor closed_cobracket(const Word& w, const Weights& weights) {
  const std::size_t n = w.size();
  WordPairTensor out;
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    Word in, out_of;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        in.push_back(w[i]);
        positions.push_back(i);
      } else {
        out_of.push_back(w[i]);
      }
    }
    Rational c = 0;
    const std::size_t m = prefix_run(positions);
    for (std::size_t i = 0; i < m; ++i) c += weight_of(weights, w[i]);
    if (c != 0) out.add({std::move(in), std::move(out_of)}, c);
  }
  return out;
}

WordPairTensor projected_cobracket(const Word& w, const Weights& weights) {
  for (const auto& x : w) {
    if (weight_of(weights, x) == 0) throw std::domain_error("the t basis needs nonzero weights");
  }
  ForestPairPoly projected;
  for (const auto& [p, c] : ck_coproduct(t_word(w, weights))) {
    if (p.first.degree() == 1 && p.second.degree() == 1) projected.add(p, c);
  }
  // Only t_u contains the ladder of u.
  WordPairTensor out;
  ForestPairPoly rebuilt;
  for (const auto& [p, c] : projected) {
    const auto u = ladder_word(p.first.factors().front());
    const auto v = ladder_word(p.second.factors().front());
    if (!u || !v) continue;
    const Rational coeff = c / (ladder_coefficient(*u, weights) * ladder_coefficient(*v, weights));
    out.add({*u, *v}, coeff);
    rebuilt.add_scaled(tensor(t_word(*u, weights), t_word(*v, weights)), coeff);
  }
  if (!(rebuilt == projected)) throw std::logic_error("the projected coproduct is not in the span of the t_u ⊗ t_v");
  return out;
}

}  // namespace

WordPairTensor delta_cobracket(const Word& word, const Weights& weights, CobracketMode mode) {
  if (word.empty()) throw std::invalid_argument("t_w needs a nonempty word");
  for (const auto& x : word) weight_of(weights, x);
  return mode == CobracketMode::closed ? closed_cobracket(word, weights) : projected_cobracket(word, weights);
}

Tensor dual_prelie_coeff(const Weights& weights, const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("the dual product is defined on nonempty words");
  Tensor out;
  for (const auto& [w, mult] : shuffle(u, v)) {
    const Rational c = closed_cobracket(w, weights).coefficient({u, v});
    if (c != 0) out.add(w, c);
  }
  return out;
}

Tensor y_element(const Rational& lambda, unsigned k) {
  if (lambda == 0) throw std::domain_error("y_k needs a nonzero eigenvalue");
  return Tensor(Word(k, Letter::plain(0)), Rational(factorial(k + 1)) / lambda);
}

BracketCheck y_bracket_check(const Rational& lambda, unsigned k, unsigned l) {
  if (k == 0 || l == 0) throw std::invalid_argument("y_k needs k >= 1");
  const ComPreLie algebra(Endo::diagonal({lambda}));
  const Tensor a = y_element(lambda, k);
  const Tensor b = y_element(lambda, l);
  BracketCheck out;
  out.computed = algebra.prelie(a, b) - algebra.prelie(b, a);
  out.expected = y_element(lambda, k + l) * Rational(static_cast<long>(k) - static_cast<long>(l));
  return out;
}

std::string format_forest(const Forest& f, const Alphabet& alphabet) {
  if (f.is_unit()) return "1";
  std::string out;
  for (const auto& t : f.factors()) {
    if (!out.empty()) out += " ";
    out += format_tree(t, alphabet);
  }
  return out;
}

std::string format_forest_poly(const ForestPoly& p, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [f, c] : p) terms.emplace_back(c, format_forest(f, alphabet));
  return format_terms(terms);
}

std::string format_word_pairs(const WordPairTensor& t, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [p, c] : t) terms.emplace_back(c, format_word(p.first, alphabet) + " | " + format_word(p.second, alphabet));
  return format_terms(terms);
}

}  // namespace comprelie
