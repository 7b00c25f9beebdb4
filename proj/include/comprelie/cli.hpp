#pragma once

#include <comprelie/character_group.hpp>
#include <comprelie/endomorphism.hpp>
#include <comprelie/enveloping.hpp>
#include <comprelie/partitioned_trees.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace comprelie {

enum class OutputFormat { text, json };

// Exit codes of run_cli.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Read when --format is absent; "json" or "text".
inline constexpr const char* format_env_var = "COMPRELIE_FORMAT";

struct Session {
  Alphabet alphabet;
  std::optional<Endo> endo;
  std::size_t truncation = 4;
  OutputFormat format = OutputFormat::text;
  // Unknown letter names extend the alphabet (biletter decorations, or no endo given).
  bool open_alphabet = true;
};

// Presets "fliess(n,i)", "diag(q1,...,qk)", "biletter-shift"; inline JSON in
// the endomorphism format, or the path of a JSON file. Presets name their
// letters x0, x1, ... Throws std::invalid_argument.
EndoSpec parse_endo_spec(std::string_view text);

// Trees when the text holds '[' or '{'; a truncated series when it ends with
// "+ O(L)" (words of length >= L dropped); otherwise a Tensor, or a SymTensor
// when it only parses as one. Throws ParseError or std::invalid_argument.
using Expression = std::variant<Tensor, SymTensor, TreeTensor, TruncatedSeries>;
Expression parse_expression(std::string_view src, Alphabet& alphabet, bool extend = true);
std::string format_expression(const Expression& e, const Alphabet& alphabet);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace comprelie
