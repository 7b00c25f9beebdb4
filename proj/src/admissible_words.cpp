#include <comprelie/admissible_words.hpp>

#include <numeric>
#include <stdexcept>

namespace comprelie {

namespace {

bool suffix_bounded(const UpperWord& w) {
  const std::size_t n = w.size();
  std::size_t suffix = 0;
  for (std::size_t i = n; i-- > 0;) {
    suffix += w[i];
    // 0-based position i is 1-based i + 1, bound n - (i + 1).
    if (suffix + i + 1 > n) return false;
  }
  return true;
}

std::size_t digit_sum(const UpperWord& w) { return std::accumulate(w.begin(), w.end(), std::size_t{0}); }

// Fills w from the right, keeping every suffix within its budget.
template <typename Emit>
void suffix_bounded_words(std::size_t n, Emit&& emit) {
  UpperWord w(n, 0);
  auto fill = [&](auto&& self, std::size_t i, std::size_t suffix) -> void {
    if (i == 0) {
      emit(w);
      return;
    }
    const std::size_t pos = i - 1;
    for (std::size_t d = 0; suffix + d + pos + 1 <= n; ++d) {
      w[pos] = static_cast<unsigned>(d);
      self(self, pos, suffix + d);
    }
    w[pos] = 0;
  };
  fill(fill, n, 0);
}

}  // namespace

bool is_admissible(const UpperWord& w) { return !w.empty() && suffix_bounded(w) && digit_sum(w) + 1 == w.size(); }

bool is_sigma_admissible(const UpperWord& w) { return suffix_bounded(w); }

std::optional<std::vector<UpperWord>> sigma_factorize(const UpperWord& w) {
  std::vector<UpperWord> factors;
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t sum = 0;
    std::size_t end = start;
    // The first factor is the shortest prefix whose digit sum is its length minus one.
    while (end < w.size()) {
      sum += w[end++];
      if (sum + 1 == end - start) break;
    }
    if (sum + 1 != end - start) return std::nullopt;
    UpperWord piece(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(end));
    if (!is_admissible(piece)) return std::nullopt;
    factors.push_back(std::move(piece));
    start = end;
  }
  return factors;
}

UpperWord upper_row(const Word& w) {
  UpperWord out;
  for (const auto& x : w) {
    if (!x.is_biletter()) throw std::invalid_argument("upper row of a word with plain letters");
    out.push_back(static_cast<unsigned>(x.level));
  }
  return out;
}

bool is_admissible(const Word& biword) { return is_admissible(upper_row(biword)); }
bool is_sigma_admissible(const Word& biword) { return is_sigma_admissible(upper_row(biword)); }

bool is_dyck(const DyckPath& p) {
  long height = 0;
  for (auto s : p) {
    height += s == DyckStep::right ? 1 : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

DyckPath to_dyck(const UpperWord& w) {
  if (!is_admissible(w)) throw std::invalid_argument("to_dyck needs an admissible word");
  DyckPath p;
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    p.push_back(DyckStep::right);
    p.insert(p.end(), w[i], DyckStep::up);
  }
  return p;
}

UpperWord from_dyck(const DyckPath& p) {
  if (!is_dyck(p)) throw std::invalid_argument("not a Dyck path");
  // Runs of up steps after each right step, last run first.
  UpperWord runs;
  for (auto s : p) {
    if (s == DyckStep::right) {
      runs.push_back(0);
    } else {
      ++runs.back();
    }
  }
  UpperWord w(runs.rbegin(), runs.rend());
  w.push_back(0);
  return w;
}

std::vector<UpperWord> admissible_words(std::size_t n) {
  std::vector<UpperWord> out;
  if (n == 0) return out;
  suffix_bounded_words(n, [&](const UpperWord& w) {
    if (digit_sum(w) + 1 == n) out.push_back(w);
  });
  return out;
}

std::vector<UpperWord> sigma_admissible_words(std::size_t n) {
  std::vector<UpperWord> out;
  suffix_bounded_words(n, [&](const UpperWord& w) { out.push_back(w); });
  return out;
}

std::vector<DyckPath> dyck_paths(std::size_t semilength) {
  std::vector<DyckPath> out;
  for (const auto& w : admissible_words(semilength + 1)) out.push_back(to_dyck(w));
  return out;
}

std::size_t count_admissible(std::size_t n) { return admissible_words(n).size(); }
std::size_t count_sigma(std::size_t n) { return sigma_admissible_words(n).size(); }

std::string format_upper(const UpperWord& w) {
  std::string out;
  for (auto d : w) {
    if (d > 9) throw std::invalid_argument("digit above 9 in an upper word");
    out += static_cast<char>('0' + d);
  }
  return out;
}

UpperWord parse_upper(std::string_view text) {
  UpperWord w;
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("upper words are digit strings");
    w.push_back(static_cast<unsigned>(c - '0'));
  }
  return w;
}

std::string format_dyck(const DyckPath& p) {
  std::string out;
  for (auto s : p) out += s == DyckStep::right ? 'R' : 'U';
  return out;
}

DyckPath parse_dyck(std::string_view text) {
  DyckPath p;
  for (char c : text) {
    if (c == 'R') {
      p.push_back(DyckStep::right);
    } else if (c == 'U') {
      p.push_back(DyckStep::up);
    } else {
      throw std::invalid_argument("Dyck paths are strings over R and U");
    }
  }
  return p;
}

}  // namespace comprelie
