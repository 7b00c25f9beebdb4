#include <comprelie/words.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace comprelie {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate letter name '" + names_[i] + "'");
    }
  }
}

const std::string& Alphabet::name(std::uint32_t symbol) const {
  if (symbol >= names_.size()) throw std::out_of_range("letter index outside alphabet");
  return names_[symbol];
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::uint32_t Alphabet::intern(std::string_view name) {
  if (auto i = find(name)) return *i;
  names_.emplace_back(name);
  return static_cast<std::uint32_t>(names_.size() - 1);
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(Letter::plain(static_cast<std::uint32_t>(i)));
  return out;
}

namespace {

std::vector<ShufflePlan> build_plans(std::size_t k, std::size_t l) {
  const std::size_t n = k + l;
  if (n > 63) throw std::length_error("shuffle of words longer than 63 letters");
  std::vector<ShufflePlan> plans;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  while (true) {
    ShufflePlan p;
    p.k = k;
    p.l = l;
    p.sigma.resize(n);
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i) mask |= std::uint64_t{1} << pos[i];
    p.from_left = mask;
    std::size_t left = 0;
    std::size_t right = k;
    for (std::size_t q = 0; q < n; ++q) {
      if (mask >> q & 1U) {
        p.sigma[left++] = q + 1;
      } else {
        p.sigma[right++] = q + 1;
      }
    }
    while (p.m_k < k && p.sigma[p.m_k] == p.m_k + 1) ++p.m_k;
    plans.push_back(std::move(p));
    // Next k-subset of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
  return plans;
}

Word apply_plan(const ShufflePlan& p, const Word& u, const Word& v) {
  Word w(p.k + p.l);
  for (std::size_t i = 0; i < p.k; ++i) w[p.sigma[i] - 1] = u[i];
  for (std::size_t j = 0; j < p.l; ++j) w[p.sigma[p.k + j] - 1] = v[j];
  return w;
}

}  // namespace

const std::vector<ShufflePlan>& shuffle_plans(std::size_t k, std::size_t l) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<ShufflePlan>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(k, l);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_plans(k, l)).first;
  return it->second;
}

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word prepend(const Letter& x, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(x);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Tensor prepend(const Letter& x, const Tensor& t) {
  Tensor out;
  for (const auto& [w, c] : t) out.add(prepend(x, w), c);
  return out;
}

Tensor prepend(const LetterCombination& v, const Tensor& t) {
  Tensor out;
  for (const auto& [x, a] : v) {
    for (const auto& [w, c] : t) out.add(prepend(x, w), a * c);
  }
  return out;
}

Tensor shuffle(const Word& u, const Word& v) {
  Tensor out;
  for (const auto& p : shuffle_plans(u.size(), v.size())) out.add(apply_plan(p, u, v), 1);
  return out;
}

Tensor shuffle(const Tensor& a, const Tensor& b) {
  return bilinear<Tensor>(a, b, [](const Word& u, const Word& v) { return shuffle(u, v); });
}

Tensor half_shuffle(const Word& u, const Word& v) {
  if (u.empty() && v.empty()) throw std::invalid_argument("half-shuffle of the empty word with itself is undefined");
  if (u.empty()) return {};
  Tensor out;
  for (const auto& p : shuffle_plans(u.size(), v.size())) {
    if (p.from_left & 1U) out.add(apply_plan(p, u, v), 1);
  }
  return out;
}

Tensor half_shuffle(const Tensor& a, const Tensor& b) {
  return bilinear<Tensor>(a, b, [](const Word& u, const Word& v) { return half_shuffle(u, v); });
}

Tensor concatenate(const Tensor& a, const Tensor& b) {
  return bilinear<Tensor>(a, b, [](const Word& u, const Word& v) { return Tensor(concat(u, v)); });
}

std::vector<std::pair<Word, Word>> deconcatenate(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t cut = w.size() + 1; cut-- > 0;) {
    out.emplace_back(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
                     Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end()));
  }
  return out;
}

WordPairTensor deconcatenation(const Tensor& t) {
  WordPairTensor out;
  for (const auto& [w, c] : t) {
    for (auto& p : deconcatenate(w)) out.add(std::move(p), c);
  }
  return out;
}

std::vector<Word> lyndon_words(std::vector<Letter> alphabet, std::size_t max_len) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<Word> out;
  const std::size_t q = alphabet.size();
  if (q == 0 || max_len == 0) return out;
  // Duval's generation of Lyndon words by index sequences.
  std::vector<std::size_t> w{0};
  w[0] = static_cast<std::size_t>(-1);
  while (!w.empty()) {
    ++w.back();
    Word word;
    for (auto i : w) word.push_back(alphabet[i]);
    out.push_back(std::move(word));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == q - 1) w.pop_back();
  }
  std::sort(out.begin(), out.end(), LengthLexLess{});
  return out;
}

Tensor normalize(const std::vector<std::pair<Word, Rational>>& terms) {
  Tensor out;
  for (const auto& [w, c] : terms) out.add(w, c);
  return out;
}

std::vector<Word> words_of_length(const std::vector<Letter>& letters, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (const auto& x : letters) {
        Word e = w;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Word> words_up_to(const std::vector<Letter>& letters, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto part = words_of_length(letters, len);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Tensor length_component(const Tensor& t, std::size_t n) {
  Tensor out;
  for (const auto& [w, c] : t) {
    if (w.size() == n) out.add(w, c);
  }
  return out;
}

Tensor truncate(const Tensor& t, std::size_t max_len) {
  Tensor out;
  for (const auto& [w, c] : t) {
    if (w.size() <= max_len) out.add(w, c);
  }
  return out;
}

}  // namespace comprelie
