#pragma once

#include <comprelie/linear_combination.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace comprelie {

// A plain letter is an index into an ordered alphabet. A biletter (k:d) pairs
// a level k with a symbol d; biletters sort by (d, k).
struct Letter {
  std::uint32_t symbol = 0;
  std::int32_t level = -1;

  static constexpr Letter plain(std::uint32_t s) { return Letter{s, -1}; }
  static constexpr Letter biletter(std::uint32_t k, std::uint32_t d) {
    return Letter{d, static_cast<std::int32_t>(k)};
  }
  constexpr bool is_biletter() const { return level >= 0; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Length first, then lexicographic.
struct LengthLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Tensor = LinearCombination<Word, LengthLexLess>;

struct LetterTerm {
  Letter letter;
  Rational coeff;

  friend bool operator==(const LetterTerm&, const LetterTerm&) = default;
};
using LetterCombination = std::vector<LetterTerm>;

// Names for plain symbols. Letter order is index order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t symbol) const;
  std::optional<std::uint32_t> find(std::string_view name) const;
  // Returns the existing index or appends the name.
  std::uint32_t intern(std::string_view name);
  std::vector<Letter> letters() const;
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// A (k,l)-shuffle. sigma[i] is the 1-based position of the i-th letter of uv
// in the shuffled word; m_k is the longest prefix 1..i fixed by sigma (i <= k).
struct ShufflePlan {
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<std::size_t> sigma;
  std::size_t m_k = 0;
  // Bit p set iff position p (0-based) of the result comes from u.
  std::uint64_t from_left = 0;
};

// All plans in increasing order of the left position subset. The returned
// reference stays valid for the life of the program.
const std::vector<ShufflePlan>& shuffle_plans(std::size_t k, std::size_t l);

Word concat(const Word& a, const Word& b);
Word prepend(const Letter& x, const Word& w);
Tensor prepend(const Letter& x, const Tensor& t);
Tensor prepend(const LetterCombination& v, const Tensor& t);

Tensor shuffle(const Word& u, const Word& v);
Tensor shuffle(const Tensor& a, const Tensor& b);
// u ≺ v. Throws std::invalid_argument for (∅, ∅).
Tensor half_shuffle(const Word& u, const Word& v);
Tensor half_shuffle(const Tensor& a, const Tensor& b);
Tensor concatenate(const Tensor& a, const Tensor& b);

std::vector<std::pair<Word, Word>> deconcatenate(const Word& w);

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    LengthLexLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};
// Elements of T(V) ⊗ T(V).
using WordPairTensor = LinearCombination<std::pair<Word, Word>, WordPairLess>;

// Deconcatenation extended linearly.
WordPairTensor deconcatenation(const Tensor& t);

// All Lyndon words of length <= max_len over the given letters, in
// length-lexicographic order. Letters are used in their natural order.
std::vector<Word> lyndon_words(std::vector<Letter> alphabet, std::size_t max_len);

Tensor normalize(const std::vector<std::pair<Word, Rational>>& terms);

// All words of length exactly n (or <= n) over the given letters.
std::vector<Word> words_of_length(const std::vector<Letter>& letters, std::size_t n);
std::vector<Word> words_up_to(const std::vector<Letter>& letters, std::size_t n);

// Homogeneous component of a given length.
Tensor length_component(const Tensor& t, std::size_t n);
Tensor truncate(const Tensor& t, std::size_t max_len);

}  // namespace comprelie
