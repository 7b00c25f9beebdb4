#include <comprelie/character_group.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace comprelie {

TruncatedSeries::TruncatedSeries(Tensor terms, std::size_t truncation)
    : terms_(truncate(terms, truncation)), truncation_(truncation) {}

Tensor truncated_shuffle(const Tensor& a, const Tensor& b, std::size_t max_len) {
  Tensor out;
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) {
      if (u.size() + v.size() <= max_len) out.add_scaled(shuffle(u, v), c * d);
    }
  }
  return out;
}

CharacterGroup::CharacterGroup(Endo f, std::size_t truncation, CoproductScaling scaling)
    : f_(std::move(f)), scaling_(scaling), truncation_(truncation) {
  const auto n = nilpotency_index(f_);
  if (!n) throw std::domain_error("the character group needs a nilpotent endomorphism");
  nilpotency_ = *n;
}

void CharacterGroup::check(const TruncatedSeries& s) const {
  if (s.truncation() != truncation_) throw std::invalid_argument("series truncated at a different length");
}

TruncatedSeries CharacterGroup::tilde_compose(const TruncatedSeries& u, const TruncatedSeries& v) const {
  check(u);
  check(v);
  const std::size_t top = truncation_;
  // v^⧢i for i < N.
  std::vector<Tensor> powers{Tensor(Word{})};
  for (std::size_t i = 1; i < nilpotency_; ++i) powers.push_back(truncated_shuffle(powers.back(), v.terms(), top));

  std::map<Word, Tensor, LengthLexLess> memo;
  auto word_compose = [&](auto&& self, const Word& w) -> Tensor {
    if (w.empty()) return Tensor(Word{});
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    const Word rest(w.begin() + 1, w.end());
    const Tensor inner = self(self, rest);
    Tensor out;
    for (std::size_t i = 0; i < nilpotency_; ++i) {
      const LetterCombination image = f_.image_power(w.front(), i);
      if (image.empty()) break;
      Tensor term = prepend(image, truncated_shuffle(inner, powers[i], top - 1));
      if (scaling_ == CoproductScaling::divided) term *= Rational(1) / Rational(factorial(i));
      out += term;
    }
    return memo.emplace(w, std::move(out)).first->second;
  };

  Tensor out;
  for (const auto& [w, c] : u.terms()) out.add_scaled(word_compose(word_compose, w), c);
  return {out, top};
}

TruncatedSeries CharacterGroup::diamond(const TruncatedSeries& u, const TruncatedSeries& v) const {
  return {tilde_compose(u, v).terms() + v.terms(), truncation_};
}

TruncatedSeries CharacterGroup::inverse(const TruncatedSeries& u) const {
  check(u);
  // u ⋄ v = 0 reads v = -(u ⊛̃ v). The length-m part of u ⊛̃ v only sees
  // the parts of v shorter than m, so each pass fixes one more length.
  TruncatedSeries v{-u.terms(), truncation_};
  for (std::size_t pass = 0; pass <= truncation_ + 1; ++pass) {
    TruncatedSeries next{-tilde_compose(u, v).terms(), truncation_};
    if (next == v) return v;
    v = std::move(next);
  }
  throw std::logic_error("inverse iteration did not settle");
}

namespace {

void check_tuple(const FliessTuple& d, std::size_t truncation) {
  for (const auto& s : d) {
    if (s.truncation() != truncation) throw std::invalid_argument("series truncated at a different length");
  }
}

}  // namespace

FliessElement fliess_tilde(const FliessElement& c, const FliessTuple& d) {
  const std::size_t n = d.size();
  if (c.channel < 1 || c.channel > n) throw std::invalid_argument("channel out of range");
  const std::size_t top = c.series.truncation();
  check_tuple(d, top);
  const Letter x0 = Letter::plain(0);
  const Tensor& feed = d[c.channel - 1].terms();

  auto apply = [&](const Letter& x, const Tensor& e) {
    Tensor out = prepend(x, truncate(e, top - 1));
    if (x.symbol == c.channel) out += prepend(x0, truncated_shuffle(feed, e, top - 1));
    return out;
  };

  // D̃_w(∅) for every suffix, innermost letter first.
  std::map<Word, Tensor, LengthLexLess> memo;
  auto images = [&](auto&& self, const Word& w) -> Tensor {
    if (w.empty()) return Tensor(Word{});
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    if (w.front().symbol > n || w.front().is_biletter()) throw std::invalid_argument("letter outside x0..xn");
    Tensor out = apply(w.front(), self(self, Word(w.begin() + 1, w.end())));
    return memo.emplace(w, std::move(out)).first->second;
  };

  Tensor out;
  for (const auto& [w, coeff] : c.series.terms()) out.add_scaled(images(images, w), coeff);
  return {c.channel, TruncatedSeries(out, top)};
}

FliessTuple fliess_diamond(const FliessTuple& c, const FliessTuple& d) {
  if (c.size() != d.size()) throw std::invalid_argument("Fliess tuples of different sizes");
  FliessTuple out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t top = c[i].truncation();
    const FliessElement composed = fliess_tilde({i + 1, c[i]}, d);
    out.emplace_back(composed.series.terms() + d[i].terms(), top);
  }
  return out;
}

std::vector<Integer> fibonacci_dims(std::size_t n, std::size_t k_max) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  std::vector<Integer> d(k_max + 1, 0);
  if (k_max >= 1) d[1] = 1;
  for (std::size_t k = 2; k <= k_max; ++k) d[k] = Integer(static_cast<unsigned long>(n)) * d[k - 1] + d[k - 2];
  return d;
}

}  // namespace comprelie
