#include <comprelie/text_format.hpp>

#include <cctype>

namespace comprelie {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

void Scanner::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_space();
  return pos_ == text_.size();
}

bool Scanner::peek(char c) {
  skip_space();
  return pos_ < text_.size() && text_[pos_] == c;
}

bool Scanner::accept(char c) {
  if (!peek(c)) return false;
  ++pos_;
  return true;
}

void Scanner::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

std::string_view Scanner::token() {
  skip_space();
  const std::size_t start = pos_;
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == ':' || c == '/') {
      ++pos_;
    } else {
      break;
    }
  }
  if (start == pos_) fail("expected a name or number");
  return text_.substr(start, pos_ - start);
}

void Scanner::fail(const std::string& message) const { throw ParseError(message, pos_); }

bool looks_like_rational(std::string_view token) {
  if (token.empty()) return false;
  bool digit = false;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '/') {
      return false;
    }
  }
  return digit;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Letter parse_letter(std::string_view piece, Alphabet& alphabet, bool extend, std::size_t pos) {
  auto name_index = [&](std::string_view name) {
    if (name.empty() || all_digits(name)) throw ParseError("invalid letter name '" + std::string(name) + "'", pos);
    if (auto i = alphabet.find(name)) return *i;
    if (!extend) throw ParseError("unknown letter '" + std::string(name) + "'", pos);
    return alphabet.intern(name);
  };
  const auto colon = piece.find(':');
  if (colon != std::string_view::npos) {
    const auto level = piece.substr(0, colon);
    if (!all_digits(level)) throw ParseError("biletter level must be a natural number", pos);
    return Letter::biletter(static_cast<std::uint32_t>(std::stoul(std::string(level))),
                            name_index(piece.substr(colon + 1)));
  }
  return Letter::plain(name_index(piece));
}

Word parse_word_at(std::string_view text, Alphabet& alphabet, bool extend, std::size_t pos) {
  if (text == "e") return {};
  Word w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto dot = text.find('.', start);
      w.push_back(parse_letter(text.substr(start, dot - start), alphabet, extend, pos + start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return w;
  }
  if (text.find(':') != std::string_view::npos || alphabet.find(text) || text.size() == 1) {
    return {parse_letter(text, alphabet, extend, pos)};
  }
  bool split = true;
  for (char c : text) split = split && alphabet.find(std::string_view(&c, 1)).has_value();
  if (split) {
    for (char c : text) w.push_back(Letter::plain(*alphabet.find(std::string_view(&c, 1))));
    return w;
  }
  return {parse_letter(text, alphabet, extend, pos)};
}

}  // namespace

Word parse_word(std::string_view text, Alphabet& alphabet, bool extend) {
  Scanner s(text);
  const std::size_t pos = (s.skip_space(), s.position());
  const auto tok = s.token();
  if (!s.at_end()) s.fail("unexpected trailing input");
  return parse_word_at(tok, alphabet, extend, pos);
}

Tensor parse_tensor(std::string_view text, Alphabet& alphabet, bool extend) {
  Scanner s(text);
  Tensor out;
  if (s.at_end()) s.fail("empty expression");
  parse_sum(s, [&](Scanner& sc, const Rational& sign) {
    sc.skip_space();
    std::size_t pos = sc.position();
    auto tok = sc.token();
    Rational coeff = sign;
    if (sc.accept('*')) {
      if (!looks_like_rational(tok)) throw ParseError("expected a coefficient", pos);
      coeff *= parse_rational(tok);
      sc.skip_space();
      pos = sc.position();
      tok = sc.token();
    } else if (tok == "0") {
      return;
    }
    if (looks_like_rational(tok)) throw ParseError("expected a word, found a number", pos);
    out.add(parse_word_at(tok, alphabet, extend, pos), coeff);
  });
  return out;
}

SymTensor parse_sym_tensor(std::string_view text, Alphabet& alphabet, bool extend) {
  Scanner s(text);
  SymTensor out;
  if (s.at_end()) s.fail("empty expression");
  parse_sum(s, [&](Scanner& sc, const Rational& sign) {
    Rational coeff = sign;
    std::vector<Word> factors;
    bool unit = false;
    bool first_token = true;
    while (true) {
      sc.skip_space();
      const std::size_t pos = sc.position();
      const auto tok = sc.token();
      const bool more = sc.accept('*');
      if (first_token && more && looks_like_rational(tok)) {
        coeff *= parse_rational(tok);
      } else if (tok == "1" && factors.empty() && !more) {
        unit = true;
      } else if (tok == "0" && first_token && !more) {
        coeff = 0;
      } else {
        if (looks_like_rational(tok)) throw ParseError("expected a word, found a number", pos);
        factors.push_back(parse_word_at(tok, alphabet, extend, pos));
      }
      first_token = false;
      if (!more) break;
    }
    if (unit || !factors.empty() || coeff != 0) out.add(monomial(std::move(factors)), coeff);
  });
  return out;
}

std::string format_letter(const Letter& x, const Alphabet& alphabet) {
  const std::string& name = x.symbol < alphabet.size() ? alphabet.name(x.symbol) : "?" + std::to_string(x.symbol);
  if (x.is_biletter()) return std::to_string(x.level) + ":" + name;
  return name;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "e";
  bool compact = true;
  for (const auto& name : alphabet.names()) compact = compact && name.size() == 1;
  for (const auto& x : w) compact = compact && !x.is_biletter() && x.symbol < alphabet.size();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !compact) out += '.';
    out += format_letter(w[i], alphabet);
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) out += a.get_str() + "*";
    out += body;
    first = false;
  }
  return out;
}

std::string format_tensor(const Tensor& t, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [w, c] : t) terms.emplace_back(c, format_word(w, alphabet));
  return format_terms(terms);
}

std::string format_monomial(const SymMonomial& m, const Alphabet& alphabet) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.degree(); ++i) {
    if (i > 0) out += " * ";
    out += format_word(m.factors()[i], alphabet);
  }
  return out;
}

std::string format_sym_tensor(const SymTensor& t, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : t) terms.emplace_back(c, format_monomial(m, alphabet));
  return format_terms(terms);
}

std::string format_sym_pair_tensor(const SymPairTensor& t, const Alphabet& alphabet) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [p, c] : t) {
    terms.emplace_back(c, format_monomial(p.first, alphabet) + " | " + format_monomial(p.second, alphabet));
  }
  return format_terms(terms);
}

}  // namespace comprelie
