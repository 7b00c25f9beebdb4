#include <comprelie/verify.hpp>

#include <comprelie/admissible_words.hpp>
#include <comprelie/character_group.hpp>
#include <comprelie/complie.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/faa_di_bruno.hpp>
#include <comprelie/partitioned_trees.hpp>
#include <comprelie/text_format.hpp>

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace comprelie {

namespace {

const Letter x0 = Letter::plain(0);
const Letter x1 = Letter::plain(1);
const Letter x2 = Letter::plain(2);

const Alphabet& names() {
  static const Alphabet al({"x0", "x1", "x2", "x3"});
  return al;
}

std::string show(const Word& w) { return format_word(w, names()); }
std::string show(const Tensor& t) { return format_tensor(t, names()); }
std::string show(const SymMonomial& m) { return format_monomial(m, names()); }

std::string show(const Endo& f) {
  std::string out = "[";
  for (const auto& row : f.dense()) {
    out += "[";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "," : "") + row[j].get_str();
    out += "]";
  }
  return out + "]";
}

// Keeps the first failure.
class Probe {
 public:
  explicit Probe(std::string name) { result_.check = std::move(name); }

  template <typename Describe>
  bool expect(bool ok, Describe&& describe) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = describe();
    }
    return ok;
  }
  bool failed() const { return !result_.passed; }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational random_nonzero(std::mt19937_64& rng) {
  Rational q;
  do q = random_rational(rng);
  while (q == 0);
  return q;
}

Endo random_matrix(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    bool nonzero = false;
    for (auto& row : m) {
      for (auto& x : row) {
        x = random_rational(rng);
        nonzero = nonzero || x != 0;
      }
    }
    if (nonzero) return Endo::matrix(m);
  }
}

Tensor random_tensor(std::mt19937_64& rng, const std::vector<Letter>& letters, std::size_t max_len, std::size_t terms) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Tensor out;
  for (std::size_t t = 0; t < terms; ++t) {
    Word w;
    for (std::size_t n = len(rng); n > 0; --n) w.push_back(letters[pick(rng)]);
    out.add(w, random_rational(rng));
  }
  return out;
}

// Monomials of words over the letters with at most max_letters letters and
// max_factors factors; ∅ counts as a factor.
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
        if (used + w.size() > max_letters) continue;
        auto e = fs;
        e.push_back(w);
        next.push_back(std::move(e));
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

// 1. Com-Pre-Lie identities on all triples of words of length <= 3.
CheckResult check_axioms(std::uint64_t seed) {
  Probe probe("com-pre-lie-axioms");
  std::mt19937_64 rng(seed);
  const auto words = words_up_to({x0, x1}, 3);
  for (int trial = 0; trial < 5 && !probe.failed(); ++trial) {
    const ComPreLie alg(random_matrix(rng, 2));
    const std::string f = show(alg.endo());
    for (const auto& a : words) {
      const Tensor A(a);
      for (const auto& b : words) {
        const Tensor B(b);
        const Tensor ab = alg.prelie(A, B);
        for (const auto& c : words) {
          const Tensor C(c);
          const Tensor ac = alg.prelie(A, C);
          const Tensor bc = alg.prelie(B, C);
          auto where = [&](const char* law) {
            return std::string(law) + " f=" + f + " a=" + show(a) + " b=" + show(b) + " c=" + show(c);
          };
          probe.expect(alg.prelie(shuffle(A, B), C) == shuffle(ac, B) + shuffle(A, bc), [&] { return where("derivation"); });
          if (!a.empty() || !b.empty()) {
            probe.expect(alg.prelie(half_shuffle(A, B), C) == half_shuffle(ac, B) + half_shuffle(A, bc),
                         [&] { return where("half-shuffle"); });
          }
          probe.expect(alg.prelie(ab, C) - alg.prelie(A, bc) == alg.prelie(ac, B) - alg.prelie(A, alg.prelie(C, B)),
                       [&] { return where("pre-Lie"); });
        }
        // Δ(a•b) = a(1) ⊗ a(2)•b + a(1)•b(1) ⊗ a(2)⧢b(2)
        WordPairTensor rhs;
        for (const auto& [a1, a2] : deconcatenate(a)) {
          for (const auto& [w, c] : alg.prelie(a2, b)) rhs.add({a1, w}, c);
          for (const auto& [b1, b2] : deconcatenate(b)) {
            const Tensor left = alg.prelie(a1, b1);
            if (left.is_zero()) continue;
            const Tensor right = shuffle(a2, b2);
            for (const auto& [u, c] : left) {
              for (const auto& [v, d] : right) rhs.add({u, v}, c * d);
            }
          }
        }
        probe.expect(deconcatenation(ab) == rhs,
                     [&] { return "coproduct f=" + f + " a=" + show(a) + " b=" + show(b); });
      }
    }
  }
  return probe.result();
}

// 2. Recursive and closed products; powers of one eigenvector.
CheckResult check_closed_formula(std::uint64_t seed) {
  Probe probe("closed-formula");
  std::mt19937_64 rng(seed + 1);
  const ComPreLie alg(random_matrix(rng, 2));
  const auto words = words_up_to({x0, x1}, 6);
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (a.size() + b.size() > 6) continue;
      probe.expect(alg.prelie(a, b) == alg.prelie_closed(a, b),
                   [&] { return "f=" + show(alg.endo()) + " a=" + show(a) + " b=" + show(b); });
    }
  }
  const Rational lambda = random_nonzero(rng);
  const ComPreLie diag(Endo::diagonal({lambda}));
  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned l = 0; k + l <= 8; ++l) {
      const Rational c = k == 0 ? Rational(0) : Rational(lambda * binomial(k + l, k - 1));
      const Tensor expected(Word(k + l, x0), c);
      probe.expect(diag.prelie(Word(k, x0), Word(l, x0)) == expected,
                   [&] { return "x^" + std::to_string(k) + " • x^" + std::to_string(l) + " with λ=" + lambda.get_str(); });
    }
  }
  return probe.result();
}

// 3. f = 0 kills •; f ≠ 0 breaks associativity; products have no ∅ part.
CheckResult check_triviality(std::uint64_t seed) {
  Probe probe("triviality-associativity");
  const auto words = words_up_to({x0, x1}, 3);
  const ComPreLie zero(Endo::zero(2));
  auto no_empty_part = [&](const ComPreLie& alg) {
    for (const auto& a : words) {
      for (const auto& b : words) {
        probe.expect(alg.prelie(a, b).coefficient(Word{}) == 0,
                     [&] { return "∅ in a•b for f=" + show(alg.endo()) + " a=" + show(a) + " b=" + show(b); });
      }
    }
  };
  for (const auto& a : words) {
    for (const auto& b : words) {
      probe.expect(zero.prelie(a, b).is_zero(), [&] { return "f=0 but a•b≠0 for a=" + show(a) + " b=" + show(b); });
    }
  }
  no_empty_part(zero);
  std::mt19937_64 rng(seed + 2);
  for (int trial = 0; trial < 3; ++trial) {
    const ComPreLie alg(random_matrix(rng, 2));
    bool found = false;
    for (const auto& a : words) {
      for (const auto& b : words) {
        const Tensor ab = alg.prelie(a, b);
        for (const auto& c : words) {
          if (alg.prelie(ab, Tensor(c)) != alg.prelie(Tensor(a), alg.prelie(b, c))) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    probe.expect(found, [&] { return "no associativity failure for f=" + show(alg.endo()); });
    no_empty_part(alg);
  }
  return probe.result();
}

// 4. ⋆ associative; closed formulas against the recursive extension.
CheckResult check_enveloping(std::uint64_t) {
  Probe probe("enveloping-star");
  const Enveloping env{ComPreLie(Endo::fliess(1, 1))};
  const std::vector<Letter> letters{x0, x1};
  const auto pairs = monomials(letters, 4, 2);
  for (const auto& a : pairs) {
    for (const auto& b : pairs) {
      if (letter_count(a) + letter_count(b) > 4) continue;
      const SymTensor ab = env.star(sym(a), sym(b));
      for (const auto& c : pairs) {
        if (letter_count(a) + letter_count(b) + letter_count(c) > 4) continue;
        probe.expect(env.star(ab, sym(c)) == env.star(sym(a), env.star(sym(b), sym(c))),
                     [&] { return "a=" + show(a) + " b=" + show(b) + " c=" + show(c); });
      }
    }
  }
  for (const auto& w : words_up_to(letters, 4)) {
    for (const auto& m : monomials(letters, 4 - w.size(), 3)) {
      probe.expect(env.closed_action(w, m.factors()) == env.extend_bullet(sym(w), sym(m)),
                   [&] { return "action w=" + show(w) + " m=" + show(m); });
      probe.expect(env.closed_star(w, m.factors()) == env.star(sym(w), sym(m)),
                   [&] { return "star w=" + show(w) + " m=" + show(m); });
    }
  }
  return probe.result();
}

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

// δ̃(x) and δ̃(xy) by the printed sums over powers of f.
SymPairTensor printed_one(const Endo& f, const Letter& x) {
  SymPairTensor out;
  for (std::size_t i = 0;; ++i) {
    const auto v = f.image_power(x, i);
    if (v.empty()) break;
    for (const auto& [y, c] : v) out.add({SymMonomial::single(Word{y}), SymMonomial(std::vector<Word>(i, Word{}))}, c);
  }
  return out;
}

SymPairTensor printed_two(const Endo& f, const Letter& x, const Letter& y) {
  auto empties = [](std::size_t n) { return SymMonomial(std::vector<Word>(n, Word{})); };
  SymPairTensor out;
  for (std::size_t i = 0;; ++i) {
    const auto fx = f.image_power(x, i);
    if (fx.empty()) break;
    for (std::size_t j = 0;; ++j) {
      const auto fy = f.image_power(y, j);
      if (fy.empty()) break;
      for (const auto& [a, c] : fx) {
        for (const auto& [b, d] : fy) out.add({SymMonomial::single(Word{a, b}), empties(i + j)}, c * d);
      }
    }
    if (i == 0) continue;
    for (const auto& [a, c] : fx) {
      out.add({SymMonomial::single(Word{a}), empties(i - 1).times(SymMonomial::single(Word{y}))},
              c * Rational(static_cast<long>(i)));
    }
  }
  return out;
}

// 5. The dual coproduct.
CheckResult check_coproduct(std::uint64_t) {
  Probe probe("dual-coproduct");
  {
    const Enveloping env{ComPreLie(Endo::fliess(1, 1))};
    const auto ms = monomials({x0, x1}, 3, 3);
    for (const auto& m : ms) {
      const SymPairTensor d = env.coproduct(m);
      TripleTensor left, right;
      for (const auto& [p, c] : d) {
        for (const auto& [q, e] : env.coproduct(p.first)) left.add({q.first, q.second, p.second}, c * e);
        for (const auto& [q, e] : env.coproduct(p.second)) right.add({p.first, q.first, q.second}, c * e);
      }
      probe.expect(left == right, [&] { return "coassociativity at " + show(m); });
      for (const auto& n : ms) {
        if (letter_count(m) + letter_count(n) > 3) continue;
        probe.expect(env.coproduct(m.times(n)) == pair_product(env.coproduct(m), env.coproduct(n)),
                     [&] { return "multiplicativity at " + show(m) + " , " + show(n); });
      }
    }
  }
  for (const Endo& f : {Endo::fliess(2, 1), Endo::matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})}) {
    const Enveloping env{ComPreLie(f)};
    probe.expect(env.dual_coproduct(Word{}) == SymPairTensor({{{SymMonomial::single(Word{}), SymMonomial{}}, 1}}),
                 [] { return std::string("δ̃(∅)"); });
    for (const Letter& x : {x0, x1, x2}) {
      probe.expect(env.dual_coproduct(Word{x}) == printed_one(f, x), [&] { return "δ̃(" + show(Word{x}) + ") f=" + show(f); });
      for (const Letter& y : {x0, x1, x2}) {
        probe.expect(env.dual_coproduct(Word{x, y}) == printed_two(f, x, y),
                     [&] { return "δ̃(" + show(Word{x, y}) + ") f=" + show(f); });
      }
    }
  }
  {
    const Endo f = Endo::fliess(2, 1);
    const Enveloping primal{ComPreLie(f)};
    const Enveloping dual{ComPreLie(transpose_endo(f))};
    const std::vector<Letter> letters{x0, x1, x2};
    const auto ms = monomials(letters, 3, 3);
    for (const auto& w : words_up_to(letters, 3)) {
      const SymPairTensor dw = primal.coproduct(w);
      for (const auto& u : ms) {
        for (const auto& v : ms) {
          if (letter_count(u) + letter_count(v) > w.size()) continue;
          const Rational lhs = sym_pairing(dual.star(sym(u), sym(v)), sym(w));
          const Rational rhs = sym_pairing(SymPairTensor({{{u, v}, 1}}), dw);
          probe.expect(lhs == rhs, [&] { return "duality w=" + show(w) + " u=" + show(u) + " v=" + show(v); });
        }
      }
    }
  }
  return probe.result();
}

// 6. The character group at truncation 4 and the Fliess composition.
CheckResult check_character_group(std::uint64_t seed) {
  Probe probe("character-group");
  std::mt19937_64 rng(seed + 6);
  const std::size_t top = 4;
  {
    const CharacterGroup g(Endo::fliess(1, 1), top);
    const TruncatedSeries zero = g.series(Tensor());
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = g.series(random_tensor(rng, {x0, x1}, top, 4));
      const auto v = g.series(random_tensor(rng, {x0, x1}, top, 4));
      const auto w = g.series(random_tensor(rng, {x0, x1}, top, 4));
      auto where = [&](const char* what) { return std::string(what) + " u=" + show(u.terms()) + " v=" + show(v.terms()); };
      probe.expect(g.diamond(u, zero) == u && g.diamond(zero, u) == u, [&] { return where("identity"); });
      probe.expect(g.diamond(g.diamond(u, v), w) == g.diamond(u, g.diamond(v, w)),
                   [&] { return where("associativity") + " w=" + show(w.terms()); });
      const auto inv = g.inverse(u);
      probe.expect(g.diamond(u, inv).is_zero() && g.diamond(inv, u).is_zero(), [&] { return where("inverse"); });
    }
  }
  {
    const std::size_t n = 2;
    const std::vector<Letter> letters{x0, x1, x2};
    for (std::size_t i = 1; i <= n; ++i) {
      const CharacterGroup g(Endo::fliess(n, i), top);
      for (int trial = 0; trial < 4; ++trial) {
        FliessTuple d;
        for (std::size_t k = 0; k < n; ++k) d.emplace_back(random_tensor(rng, letters, 3, 3), top);
        for (const auto& w : words_up_to(letters, 3)) {
          probe.expect(fliess_tilde({i, TruncatedSeries(Tensor(w), top)}, d).series ==
                           g.tilde_compose(g.series(Tensor(w)), d[i - 1]),
                       [&] { return "channel " + std::to_string(i) + " word " + show(w); });
        }
      }
    }
    const TruncatedSeries none(Tensor(), top);
    for (int trial = 0; trial < 10; ++trial) {
      const TruncatedSeries u(random_tensor(rng, letters, 3, 3), top);
      const TruncatedSeries v(random_tensor(rng, letters, 3, 3), top);
      probe.expect(fliess_diamond({u, none}, {none, v}) == FliessTuple{u, v},
                   [&] { return "cross-channel u=" + show(u.terms()) + " v=" + show(v.terms()); });
      probe.expect(fliess_diamond({none, v}, {u, none}) == FliessTuple{u, v},
                   [&] { return "cross-channel u=" + show(u.terms()) + " v=" + show(v.terms()); });
    }
  }
  return probe.result();
}

// 7. Fibonacci dimension tables.
CheckResult check_dimensions(std::uint64_t) {
  Probe probe("dimension-tables");
  for (unsigned long n = 1; n <= 3; ++n) {
    const auto d = fibonacci_dims(n, 8);
    const Integer m(n);
    const std::vector<Integer> table{1, m, m * m + 1, m * (m * m + 2), m * m * m * m + 3 * m * m + 1};
    for (std::size_t k = 1; k <= 5; ++k) {
      probe.expect(d[k] == table[k - 1], [&] { return "n=" + std::to_string(n) + " d" + std::to_string(k); });
    }
    std::vector<Letter> letters;
    for (std::uint32_t j = 0; j <= n; ++j) letters.push_back(Letter::plain(j));
    std::vector<Integer> counts(9, 0);
    for (const auto& w : words_up_to(letters, 7)) {
      std::size_t degree = 1;
      for (const auto& x : w) degree += x.symbol == 0 ? 2 : 1;
      if (degree <= 8) counts[degree] += 1;
    }
    probe.expect(d == counts, [&] { return "word counts by degree, n=" + std::to_string(n); });
  }
  return probe.result();
}

// 8. Admissible words, Catalan counts, Dyck paths, closure.
CheckResult check_admissible(std::uint64_t) {
  Probe probe("admissible-words");
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (std::size_t n = 1; n <= 8; ++n) {
    probe.expect(count_admissible(n) == catalan[n - 1] && count_sigma(n) == catalan[n],
                 [&] { return "counts at n=" + std::to_string(n); });
  }
  auto text = [](const std::vector<UpperWord>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(format_upper(w));
    return out;
  };
  const std::vector<std::set<std::string>> printed{
      {"0"}, {"10"}, {"200", "110"}, {"3000", "2100", "1200", "2010", "1110"}};
  for (std::size_t n = 1; n <= 4; ++n) {
    probe.expect(text(admissible_words(n)) == printed[n - 1], [&] { return "admissible list n=" + std::to_string(n); });
  }
  probe.expect(text(sigma_admissible_words(3)) == std::set<std::string>{"000", "100", "200", "010", "110"},
               [] { return std::string("σ-admissible list n=3"); });
  probe.expect(sigma_admissible_words(4).size() == 14, [] { return std::string("σ-admissible list n=4"); });
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : admissible_words(n)) {
      probe.expect(from_dyck(to_dyck(w)) == w, [&] { return "round trip " + format_upper(w); });
    }
  }
  for (std::size_t m = 0; m <= 7; ++m) {
    for (const auto& p : dyck_paths(m)) {
      probe.expect(to_dyck(from_dyck(p)) == p, [&] { return "round trip " + format_dyck(p); });
    }
  }
  const ComPreLie biletters(Endo::biletter_shift());
  std::vector<Word> words;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& u : sigma_admissible_words(n)) {
      Word w;
      for (auto a : u) w.push_back(Letter::biletter(a, 0));
      words.push_back(w);
    }
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.size() + v.size() > 5) continue;
      for (const auto& [w, c] : shuffle(u, v)) {
        probe.expect(is_sigma_admissible(w), [&] { return "shuffle leaves the space: " + show(w); });
      }
      // ∅ is not the image of a forest.
      if (v.empty()) continue;
      for (const auto& [w, c] : biletters.prelie(u, v)) {
        probe.expect(is_sigma_admissible(w), [&] { return "• leaves the space: " + show(w); });
      }
    }
  }
  return probe.result();
}

// 9. The morphisms from trees to biwords.
CheckResult check_trees(std::uint64_t) {
  Probe probe("tree-morphisms");
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& t : partitioned_trees(n, n <= 3 ? 2 : 1)) {
      probe.expect(phi_cpl(t, PhiMode::recursive) == phi_cpl(t), [&] { return "recursive vs direct " + format_tree(t, names()); });
    }
  }
  const Alphabet abcd({"a", "b", "c", "d"});
  const std::vector<std::pair<const char*, const char*>> printed{
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
  for (const auto& [tree_text, value] : printed) {
    Alphabet al = abcd;
    const PartitionedTree t = parse_tree(tree_text, al, false);
    const Tensor want = parse_tensor(value, al, false);
    probe.expect(phi_cpl(t) == want && phi_cpl(t, PhiMode::recursive) == want,
                 [&] { return std::string("printed value of ") + tree_text; });
  }
  {
    Alphabet al = abcd;
    const TreeTensor witness =
        TreeTensor({{parse_tree("{a[a],a[a]}", al, false), 1}, {parse_tree("a[{a[a],a}]", al, false), -2}});
    probe.expect(phi_cpl(witness).is_zero(), [] { return std::string("kernel witness"); });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const RankReport r = injectivity_rank(n);
    probe.expect(r.full(), [&] { return "rank deficit at " + std::to_string(n) + " vertices"; });
    if (n == 5) probe.expect(r.rank == 9, [&] { return "rank " + std::to_string(r.rank) + " at 5 vertices"; });
  }
  {
    const Enveloping env{ComPreLie(Endo::biletter_shift())};
    const Letter d0 = Letter::biletter(0, 0), d1 = Letter::biletter(1, 0);
    const SymTensor corolla = env.extend_bullet(sym(Word{d0}), sym(monomial({Word{d0}, Word{d0}})));
    const SymTensor ladder = env.extend_bullet(sym(Word{d1}), sym(Word{d0, d0}));
    probe.expect(!corolla.is_zero() && corolla == ladder * Rational(2), [] { return std::string("ψ relation"); });
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : partitioned_trees(n)) {
      for (const auto& [w, c] : phi_cpl(t)) {
        probe.expect(is_sigma_admissible(w) && (!t.is_rooted_tree() || is_admissible(w)),
                     [&] { return "inadmissible image of " + format_tree(t, names()); });
      }
    }
  }
  return probe.result();
}

// 10. The diagonalizable case.
CheckResult check_faa_di_bruno(std::uint64_t seed) {
  Probe probe("faa-di-bruno");
  const Weights unit{1};
  const Alphabet al({"a"});
  auto t_n = [&](std::size_t n) { return t_word(Word(n, Letter::plain(0)), unit); };
  auto expansion = [&](std::initializer_list<std::pair<const char*, int>> terms) {
    ForestPoly p;
    for (const auto& [text, c] : terms) {
      Alphabet a = al;
      p.add(Forest::single(parse_tree(text, a, false)), c);
    }
    return p;
  };
  probe.expect(t_n(1) == expansion({{"a", 1}}), [] { return std::string("t1"); });
  probe.expect(t_n(2) == expansion({{"a[a]", 1}}), [] { return std::string("t2"); });
  probe.expect(t_n(3) == expansion({{"a[a,a]", 1}, {"a[a[a]]", 1}}), [] { return std::string("t3"); });
  probe.expect(t_n(4) == expansion({{"a[a,a,a]", 1}, {"a[a[a],a]", 3}, {"a[a[a,a]]", 1}, {"a[a[a[a]]]", 1}}),
               [] { return std::string("t4"); });

  std::mt19937_64 rng(seed + 10);
  const Weights w{random_nonzero(rng), random_nonzero(rng), random_nonzero(rng)};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& u : words_of_length({x0, x1, x2}, n)) {
      probe.expect(delta_cobracket(u, w, CobracketMode::closed) == delta_cobracket(u, w, CobracketMode::projected),
                   [&] { return "δ at " + show(u); });
    }
  }
  const ComPreLie diag(Endo::diagonal(w));
  const auto words = words_up_to({x0, x1, x2}, 3);
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (u.empty() || v.empty() || u.size() + v.size() > 4) continue;
      probe.expect(dual_prelie_coeff(w, u, v) == diag.prelie(u, v), [&] { return "dual product " + show(u) + " • " + show(v); });
    }
  }
  const Rational lambda = random_nonzero(rng);
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned l = 1; l <= 4; ++l) {
      probe.expect(y_bracket_check(lambda, k, l).holds(),
                   [&] { return "[y" + std::to_string(k) + ", y" + std::to_string(l) + "] λ=" + lambda.get_str(); });
    }
  }
  return probe.result();
}

std::vector<LetterCombination> basis_values(std::size_t dim) {
  std::vector<LetterCombination> out;
  for (std::uint32_t i = 0; i < dim; ++i) out.push_back({{Letter::plain(i), 1}});
  return out;
}

// 11. Surjectivity of the tree morphisms at degree 2.
CheckResult check_surjectivity(std::uint64_t) {
  Probe probe("surjectivity-ranks");
  {
    const Endo f = Endo::matrix({{1, 1}, {1, 2}});
    EchelonBasis<Word, LengthLexLess> span;
    for (const auto& t : rooted_trees(2, 2)) span.insert(phi_into(t, f, basis_values(2)));
    probe.expect(span.rank() == 4, [&] { return "pre-Lie image rank " + std::to_string(span.rank()) + " for invertible f"; });
  }
  {
    const Endo f = Endo::matrix({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    EchelonBasis<Word, LengthLexLess> span;
    for (const auto& t : partitioned_trees(2, 4)) span.insert(phi_into(t, f, basis_values(4)));
    probe.expect(span.rank() < 16, [] { return std::string("no rank deficit for codimension 2"); });
    const Letter x = Letter::plain(2), y = Letter::plain(3);
    probe.expect(!span.contains(Tensor(Word{x, y}) - Tensor(Word{y, x})), [] { return std::string("x2x3 - x3x2 in the image"); });
  }
  return probe.result();
}

}  // namespace

const std::vector<Check>& acceptance_checks() {
  static const std::vector<Check> checks{
      {"com-pre-lie-axioms", "shuffle derivation, half-shuffle, pre-Lie and coproduct laws", check_axioms},
      {"closed-formula", "recursive product equals the shuffle-sum formula", check_closed_formula},
      {"triviality-associativity", "f = 0 kills the product, f ≠ 0 breaks associativity", check_triviality},
      {"enveloping-star", "⋆ associative, closed formulas agree", check_enveloping},
      {"dual-coproduct", "coassociative, multiplicative, printed values, dual to ⋆", check_coproduct},
      {"character-group", "group laws at truncation 4, Fliess composition", check_character_group},
      {"dimension-tables", "Fibonacci dimensions and word counts", check_dimensions},
      {"admissible-words", "Catalan counts, printed lists, Dyck bijection, closure", check_admissible},
      {"tree-morphisms", "tree morphisms to biwords", check_trees},
      {"faa-di-bruno", "t_w expansions, cobracket, dual product, y bracket", check_faa_di_bruno},
      {"surjectivity-ranks", "image ranks at degree 2", check_surjectivity},
  };
  return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::uint64_t seed, bool concurrent) {
  auto guarded = [seed](const Check& c) {
    try {
      return c.run(seed);
    } catch (const std::exception& e) {
      return CheckResult{c.name, false, std::string("exception: ") + e.what()};
    }
  };
  std::vector<CheckResult> out;
  if (!concurrent) {
    for (const auto& c : checks) out.push_back(guarded(c));
    return out;
  }
  std::vector<std::future<CheckResult>> pending;
  for (const auto& c : checks) pending.push_back(std::async(std::launch::async, guarded, std::cref(c)));
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.check;
    if (!r.passed) out << ": " << r.witness;
    out << "\n";
  }
  return out.str();
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  auto out = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry{{"check", r.check}, {"status", r.passed ? "pass" : "fail"}};
    if (!r.passed) entry["witness"] = r.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace comprelie
