#pragma once

#include <comprelie/enveloping.hpp>
#include <comprelie/words.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace comprelie {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Words: "e" is the empty word; letters are separated by dots ("x0.x1"), or
// juxtaposed when every name is one character ("ab"). Biletters are "k:d".
// Unknown names are added to the alphabet when extend is true.
Word parse_word(std::string_view text, Alphabet& alphabet, bool extend = true);
// "3/2*x0.x1 - x1 + e"; "0" is the zero tensor.
Tensor parse_tensor(std::string_view text, Alphabet& alphabet, bool extend = true);
// "2*a * b.c - 1"; "1" is the unit monomial.
SymTensor parse_sym_tensor(std::string_view text, Alphabet& alphabet, bool extend = true);

std::string format_letter(const Letter& x, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);
std::string format_tensor(const Tensor& t, const Alphabet& alphabet);
std::string format_monomial(const SymMonomial& m, const Alphabet& alphabet);
std::string format_sym_tensor(const SymTensor& t, const Alphabet& alphabet);
// Terms "c*A | B".
std::string format_sym_pair_tensor(const SymPairTensor& t, const Alphabet& alphabet);

// Shared term printer: joins (coefficient, body) pairs as "3/2*u - v + w".
std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms);

// Scanner shared by the expression grammars.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  bool peek(char c);
  bool accept(char c);
  void expect(char c);
  // Letters, digits and "_.:/" characters.
  std::string_view token();
  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool looks_like_rational(std::string_view token);

// Reads "term (+|- term)*", passing each term's sign to body(scanner, sign).
template <typename Body>
void parse_sum(Scanner& s, Body&& body) {
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (s.accept('-')) {
      sign = -1;
    } else if (!s.accept('+') && !first) {
      s.fail("expected '+' or '-'");
    }
    body(s, sign);
    first = false;
    if (s.at_end()) break;
  }
}

}  // namespace comprelie
