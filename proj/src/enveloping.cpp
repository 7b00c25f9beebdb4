#include <comprelie/enveloping.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace comprelie {

SymMonomial monomial(std::vector<Word> factors) { return SymMonomial(std::move(factors)); }

SymTensor sym(const Word& w) { return SymTensor(SymMonomial::single(w)); }
SymTensor sym(const SymMonomial& m) { return SymTensor(m); }

SymTensor sym_product(const SymTensor& a, const SymTensor& b) { return sym_product<Word, LengthLexLess>(a, b); }

Tensor single_factor_part(const SymTensor& t) {
  Tensor out;
  for (const auto& [m, c] : t) {
    if (m.degree() != 1) throw std::invalid_argument("expected single-factor monomials only");
    out.add(m.factors().front(), c);
  }
  return out;
}

Enveloping::Enveloping(ComPreLie algebra)
    : og_(WordPreLie{std::move(algebra)}) {
  const Endo& f = og_.algebra().algebra.endo();
  if (f.kind() != Endo::Kind::biletter_shift) nilpotency_ = nilpotency_index(f);
}

namespace {

// Calls visit(blocks) for every map from factor indices to block indices
// 0..block_count-1.
template <typename Visit>
void for_each_assignment(std::size_t factor_count, std::size_t block_count, Visit&& visit) {
  std::vector<std::vector<std::size_t>> blocks(block_count);
  std::vector<std::size_t> assign(factor_count, 0);
  while (true) {
    for (auto& b : blocks) b.clear();
    for (std::size_t j = 0; j < factor_count; ++j) blocks[assign[j]].push_back(j);
    visit(blocks);
    std::size_t j = 0;
    while (j < factor_count && assign[j] == block_count - 1) assign[j++] = 0;
    if (j == factor_count) break;
    ++assign[j];
  }
}

Tensor shuffle_all(const std::vector<Word>& factors, const std::vector<std::size_t>& idx) {
  Tensor out{{Word{}, 1}};
  for (auto j : idx) out = shuffle(out, Tensor(factors[j]));
  return out;
}

// f^{|I_1|}(x_1)(f^{|I_2|}(x_2)(...(f^{|I_i|}(x_i) W_i) ⧢ W_{i-1}) ...) ⧢ W_1)
Tensor nested_term(const Endo& f, const Word& w, const std::vector<Word>& factors,
                   const std::vector<std::vector<std::size_t>>& blocks) {
  const std::size_t i = w.size();
  Tensor t = prepend(f.image_power(w[i - 1], blocks[i - 1].size()), shuffle_all(factors, blocks[i - 1]));
  for (std::size_t j = i - 1; j-- > 0 && !t.is_zero();) {
    t = prepend(f.image_power(w[j], blocks[j].size()), shuffle(t, shuffle_all(factors, blocks[j])));
  }
  return t;
}

}  // namespace

SymTensor Enveloping::closed_action(const Word& w, const std::vector<Word>& factors) const {
  if (w.empty()) return factors.empty() ? sym(w) : SymTensor{};
  const Endo& f = algebra().endo();
  Tensor out;
  for_each_assignment(factors.size(), w.size(), [&](const std::vector<std::vector<std::size_t>>& blocks) {
    out += nested_term(f, w, factors, blocks);
  });
  return as_symmetric<Word, LengthLexLess>(out);
}

SymTensor Enveloping::closed_star(const Word& w, const std::vector<Word>& factors) const {
  if (w.empty()) {
    std::vector<Word> all = factors;
    all.push_back(Word{});
    return sym(monomial(std::move(all)));
  }
  const Endo& f = algebra().endo();
  SymTensor out;
  for_each_assignment(factors.size(), w.size() + 1, [&](const std::vector<std::vector<std::size_t>>& blocks) {
    const Tensor t = nested_term(f, w, factors, blocks);
    std::vector<Word> rest;
    for (auto j : blocks.back()) rest.push_back(factors[j]);
    const SymMonomial tail = monomial(std::move(rest));
    for (const auto& [v, c] : t) out.add(SymMonomial::single(v).times(tail), c);
  });
  return out;
}

namespace {

// Nondecreasing cut positions 0 <= c_1 <= ... <= c_count <= n.
// Every way of sending the positions 0..n-1 to one of `slots` subwords.
template <typename Visit>
void for_each_slot_assignment(std::size_t n, std::size_t slots, Visit&& visit) {
  std::vector<std::size_t> slot(n, 0);
  while (true) {
    visit(slot);
    std::size_t j = 0;
    while (j < n && slot[j] + 1 == slots) slot[j++] = 0;
    if (j == n) break;
    ++slot[j];
  }
}

class ReducedCoproduct {
 public:
  ReducedCoproduct(const Endo& f, CoproductScaling scaling) : f_(f), scaling_(scaling) {}

  const SymPairTensor& operator()(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    SymPairTensor out = compute(w);
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  SymPairTensor compute(const Word& w) {
    SymPairTensor out;
    if (w.empty()) {
      out.add({SymMonomial::single(Word{}), SymMonomial{}}, 1);
      return out;
    }
    const Letter x = w.front();
    const Word u(w.begin() + 1, w.end());
    for (std::size_t i = 0;; ++i) {
      const LetterCombination v = f_.image_power(x, i);
      if (v.empty()) break;
      const Rational scale = scaling_ == CoproductScaling::divided ? Rational(1) / Rational(factorial(i)) : Rational(1);
      // Iterated unshuffle: slot 0 feeds the recursion, the others become factors.
      for_each_slot_assignment(u.size(), i + 1, [&](const std::vector<std::size_t>& slot) {
        std::vector<Word> pieces(i + 1);
        for (std::size_t p = 0; p < u.size(); ++p) pieces[slot[p]].push_back(u[p]);
        const Word first = std::move(pieces.front());
        pieces.erase(pieces.begin());
        const SymMonomial rest = monomial(std::move(pieces));
        // Copy: the memo may rehash while we recurse.
        const SymPairTensor inner = (*this)(first);
        for (const auto& [pair, c] : inner) {
          const Word& a = pair.first.factors().front();
          const SymMonomial right = pair.second.times(rest);
          for (const auto& [y, coeff] : v) out.add({SymMonomial::single(prepend(y, a)), right}, c * coeff * scale);
        }
      });
    }
    return out;
  }

  const Endo& f_;
  CoproductScaling scaling_;
  std::map<Word, SymPairTensor, LengthLexLess> memo_;
};

}  // namespace

SymPairTensor Enveloping::dual_coproduct(const Word& w, CoproductScaling scaling) const {
  if (!nilpotency_) {
    throw std::domain_error("the dual coproduct is defined only for a locally nilpotent endomorphism");
  }
  ReducedCoproduct delta(algebra().endo(), scaling);
  return delta(w);
}

SymPairTensor Enveloping::coproduct(const Word& w, CoproductScaling scaling) const {
  SymPairTensor out = dual_coproduct(w, scaling);
  out.add({SymMonomial{}, SymMonomial::single(w)}, 1);
  return out;
}

SymPairTensor pair_product(const SymPairTensor& a, const SymPairTensor& b) {
  SymPairTensor out;
  for (const auto& [x, c] : a) {
    for (const auto& [y, d] : b) out.add({x.first.times(y.first), x.second.times(y.second)}, c * d);
  }
  return out;
}

SymPairTensor Enveloping::coproduct(const SymMonomial& m, CoproductScaling scaling) const {
  SymPairTensor out;
  out.add({SymMonomial{}, SymMonomial{}}, 1);
  for (const auto& w : m.factors()) out = pair_product(out, coproduct(w, scaling));
  return out;
}

SymPairTensor Enveloping::coproduct(const SymTensor& t, CoproductScaling scaling) const {
  SymPairTensor out;
  for (const auto& [m, c] : t) out.add_scaled(coproduct(m, scaling), c);
  return out;
}

Rational sym_pairing(const SymMonomial& a, const SymMonomial& b) {
  if (!(a == b)) return 0;
  return Rational(static_cast<unsigned long>(a.symmetry()));
}

Rational sym_pairing(const SymTensor& a, const SymTensor& b) {
  Rational s = 0;
  for (const auto& [m, c] : a) {
    const Rational d = b.coefficient(m);
    if (d != 0) s += c * d * sym_pairing(m, m);
  }
  return s;
}

Rational sym_pairing(const SymPairTensor& a, const SymPairTensor& b) {
  Rational s = 0;
  for (const auto& [p, c] : a) {
    const Rational d = b.coefficient(p);
    if (d != 0) s += c * d * sym_pairing(p.first, p.first) * sym_pairing(p.second, p.second);
  }
  return s;
}

}  // namespace comprelie
