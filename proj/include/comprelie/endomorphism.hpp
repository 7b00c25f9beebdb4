#pragma once

#include <comprelie/words.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace comprelie {

// A linear endomorphism of V, given on basis letters. Matrix and diagonal
// kinds act on plain letters 0..dim-1; the biletter shift acts on biletters
// and maps (k:d) to (k+1:d).
class Endo {
 public:
  enum class Kind { matrix, diagonal, biletter_shift };

  // entries[i][j] is the coefficient of letter i in f(letter j).
  static Endo matrix(std::vector<std::vector<Rational>> entries);
  static Endo diagonal(std::vector<Rational> weights);
  static Endo biletter_shift();
  static Endo zero(std::size_t dim);
  static Endo identity(std::size_t dim);
  // Alphabet x0..xn; x_j goes to x0 when j == channel, to 0 otherwise.
  static Endo fliess(std::size_t n, std::size_t channel);

  Kind kind() const { return kind_; }
  // Number of plain letters acted on; absent for the biletter shift.
  std::optional<std::size_t> dimension() const;
  bool acts_on(const Letter& x) const;

  // Throws std::out_of_range for a letter outside the alphabet.
  LetterCombination image(const Letter& x) const;
  LetterCombination image_power(const Letter& x, std::size_t k) const;

  // Dense matrix view (matrix and diagonal kinds).
  std::vector<std::vector<Rational>> dense() const;
  const std::vector<Rational>& weights() const { return weights_; }

  friend bool operator==(const Endo&, const Endo&) = default;

 private:
  Endo() = default;
  Kind kind_ = Kind::matrix;
  std::vector<std::vector<Rational>> entries_;
  std::vector<Rational> weights_;
  // columns_[j] = image of letter j (matrix kind).
  std::vector<LetterCombination> columns_;
};

// v must be a degree-one Tensor.
Tensor apply_endo(const Endo& f, const Tensor& v);
Tensor iterate_endo(const Endo& f, std::size_t k, const Tensor& v);
std::optional<std::size_t> nilpotency_index(const Endo& f);
Endo transpose_endo(const Endo& f);

Tensor to_tensor(const LetterCombination& v);
LetterCombination to_letters(const Tensor& v);
LetterCombination apply_letters(const Endo& f, const LetterCombination& v);

// JSON specification:
// {"alphabet": [...], "kind": "matrix"|"diagonal"|"biletter_shift",
//  "matrix": [["p/q", ...], ...], "weights": {"d": "p/q"}}
struct EndoSpec {
  Alphabet alphabet;
  Endo endo;
};
EndoSpec endo_from_json(const nlohmann::json& j);
nlohmann::json endo_to_json(const EndoSpec& spec);

}  // namespace comprelie
