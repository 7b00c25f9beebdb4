#pragma once

#include <comprelie/words.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace comprelie {

// Upper row a1...an of a biword.
using UpperWord = std::vector<unsigned>;

// Suffix sums a_i + ... + a_n <= n - i for every i, and total n - 1.
bool is_admissible(const UpperWord& w);
// Suffix sums bounded as above; equivalent to being a product of admissible words.
bool is_sigma_admissible(const UpperWord& w);
// The unique factorization into admissible words, or nothing.
std::optional<std::vector<UpperWord>> sigma_factorize(const UpperWord& w);

// Upper row of a word of biletters. Throws std::invalid_argument on a plain letter.
UpperWord upper_row(const Word& w);
bool is_admissible(const Word& biword);
bool is_sigma_admissible(const Word& biword);

enum class DyckStep { right, up };
using DyckPath = std::vector<DyckStep>;

// A path of n right steps and n up steps never going above the diagonal.
bool is_dyck(const DyckPath& p);
// a1...a(n+1) -> →↑^{a_n} ... →↑^{a_1}. Throws std::invalid_argument unless admissible.
DyckPath to_dyck(const UpperWord& w);
// Inverse of to_dyck. Throws std::invalid_argument unless p is a Dyck path.
UpperWord from_dyck(const DyckPath& p);

std::vector<UpperWord> admissible_words(std::size_t n);
std::vector<UpperWord> sigma_admissible_words(std::size_t n);
std::vector<DyckPath> dyck_paths(std::size_t semilength);
std::size_t count_admissible(std::size_t n);
std::size_t count_sigma(std::size_t n);

// Digits as text, "2010"; Dyck paths as "RRUU" (R right, U up).
// Digits above 9 are not representable and throw std::invalid_argument.
std::string format_upper(const UpperWord& w);
UpperWord parse_upper(std::string_view text);
std::string format_dyck(const DyckPath& p);
DyckPath parse_dyck(std::string_view text);

}  // namespace comprelie
