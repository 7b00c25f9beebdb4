#include <comprelie/cli.hpp>

#include <comprelie/admissible_words.hpp>
#include <comprelie/complie.hpp>
#include <comprelie/faa_di_bruno.hpp>
#include <comprelie/text_format.hpp>
#include <comprelie/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

namespace comprelie {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Alphabet x_letters(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(names);
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + s + "'");
  }
  return std::stoul(s);
}

}  // namespace

EndoSpec parse_endo_spec(std::string_view text) {
  const std::string s = trim(text);
  if (s == "biletter-shift") return {Alphabet({"a", "b", "c", "d"}), Endo::biletter_shift()};
  std::smatch m;
  static const std::regex call(R"(^([a-z]+)\((.*)\)$)");
  if (std::regex_match(s, m, call)) {
    const std::string name = m[1];
    const auto params = split(m[2].str(), ',');
    if (name == "fliess") {
      if (params.size() != 2) throw std::invalid_argument("fliess(n,i) takes two arguments");
      const std::size_t n = parse_count(params[0]);
      return {x_letters(n + 1), Endo::fliess(n, parse_count(params[1]))};
    }
    if (name == "diag") {
      std::vector<Rational> weights;
      for (const auto& p : params) weights.push_back(parse_rational(p));
      return {x_letters(weights.size()), Endo::diagonal(weights)};
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  nlohmann::json j;
  try {
    if (!s.empty() && s.front() == '{') {
      j = nlohmann::json::parse(s);
    } else {
      std::ifstream in(s);
      if (!in) throw std::invalid_argument("no preset or readable JSON file '" + s + "'");
      j = nlohmann::json::parse(in);
    }
    return endo_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad endomorphism JSON: ") + e.what());
  }
}

Expression parse_expression(std::string_view src, Alphabet& alphabet, bool extend) {
  const std::string s = trim(src);
  if (s.find_first_of("[{") != std::string::npos) return parse_tree_tensor(s, alphabet, extend);
  static const std::regex series(R"(^(?:(.*?)\s*\+\s*)?O\(\s*(\d+)\s*\)$)");
  std::smatch m;
  if (std::regex_match(s, m, series)) {
    const std::size_t order = std::stoul(m[2]);
    if (order == 0) throw ParseError("series order must be positive", s.size());
    const std::string body = m[1];
    return TruncatedSeries(body.empty() ? Tensor() : parse_tensor(body, alphabet, extend), order - 1);
  }
  try {
    return parse_tensor(s, alphabet, extend);
  } catch (const ParseError&) {
    // "a * b" only parses as a polynomial in words.
    Alphabet trial = alphabet;
    SymTensor t = parse_sym_tensor(s, trial, extend);
    alphabet = trial;
    return t;
  }
}

std::string format_expression(const Expression& e, const Alphabet& alphabet) {
  struct Printer {
    const Alphabet& al;
    std::string operator()(const Tensor& t) const { return format_tensor(t, al); }
    std::string operator()(const SymTensor& t) const { return format_sym_tensor(t, al); }
    std::string operator()(const TreeTensor& t) const { return format_tree_tensor(t, al); }
    std::string operator()(const TruncatedSeries& s) const {
      const std::string order = "O(" + std::to_string(s.truncation() + 1) + ")";
      return s.is_zero() ? order : format_tensor(s.terms(), al) + " + " + order;
    }
  };
  return std::visit(Printer{alphabet}, e);
}

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  Session session;
  std::ostream& out;

  const Endo& endo() const {
    if (!session.endo) throw UsageError("this verb needs --endo");
    return *session.endo;
  }

  template <typename T>
  T expect_kind(const std::string& text) {
    Expression e = parse_expression(text, session.alphabet, session.open_alphabet);
    if (auto* v = std::get_if<T>(&e)) return std::move(*v);
    throw UsageError("unexpected kind of expression: '" + text + "'");
  }
  Tensor tensor(const std::string& text) { return expect_kind<Tensor>(text); }
  SymTensor sym_tensor(const std::string& text) {
    Expression e = parse_expression(text, session.alphabet, session.open_alphabet);
    if (auto* t = std::get_if<Tensor>(&e)) {
      SymTensor out;
      for (const auto& [w, c] : *t) out.add(SymMonomial::single(w), c);
      return out;
    }
    if (auto* t = std::get_if<SymTensor>(&e)) return *t;
    throw UsageError("expected a polynomial in words: '" + text + "'");
  }
  TruncatedSeries series(const std::string& text) {
    Expression e = parse_expression(text, session.alphabet, session.open_alphabet);
    if (auto* t = std::get_if<Tensor>(&e)) return {*t, session.truncation};
    if (auto* s = std::get_if<TruncatedSeries>(&e)) {
      if (s->truncation() != session.truncation) throw UsageError("series order differs from --trunc");
      return *s;
    }
    throw UsageError("expected a series: '" + text + "'");
  }
  Word word(const std::string& text) { return parse_word(text, session.alphabet, session.open_alphabet); }

  void emit(const std::string& verb, const std::string& text, nlohmann::json extra = nlohmann::json::object()) {
    if (session.format == OutputFormat::json) {
      extra["verb"] = verb;
      extra["result"] = text;
      out << extra.dump() << "\n";
    } else {
      out << text << "\n";
    }
  }
};

void add_session_flags(CLI::App& app, std::string& endo, std::string& alphabet, std::string& format) {
  app.add_option("--endo", endo, "fliess(n,i), diag(q,...), biletter-shift, JSON text or JSON file");
  app.add_option("--alphabet", alphabet, "comma-separated letter names");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

Session make_session(const std::string& endo, const std::string& alphabet, const std::string& format) {
  Session s;
  if (!endo.empty()) {
    EndoSpec spec = parse_endo_spec(endo);
    s.alphabet = spec.alphabet;
    s.endo = spec.endo;
    s.open_alphabet = spec.endo.kind() == Endo::Kind::biletter_shift;
  }
  if (!alphabet.empty()) {
    Alphabet names(split(alphabet, ','));
    if (s.endo && s.endo->dimension() && *s.endo->dimension() != names.size()) {
      throw UsageError("alphabet size does not match the endomorphism");
    }
    s.alphabet = names;
  }
  std::string f = format;
  if (f.empty()) {
    if (const char* env = std::getenv(format_env_var)) f = env;
  }
  if (f == "json") {
    s.format = OutputFormat::json;
  } else if (!f.empty() && f != "text") {
    throw UsageError(std::string(format_env_var) + " must be text or json");
  }
  return s;
}

nlohmann::json dims_json(const std::vector<Integer>& dims) {
  auto a = nlohmann::json::array();
  for (const auto& d : dims) a.push_back(to_string(d));
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Com-Pre-Lie algebras of words", "comprelie"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string endo_text, alphabet_text, format_text;
  add_session_flags(app, endo_text, alphabet_text, format_text);
  std::size_t trunc = 4;
  app.add_option("--trunc", trunc, "truncation order L of series");

  std::function<int(Context&)> action;

  std::string a_text, b_text;
  auto* prelie = app.add_subcommand("prelie", "a • b");
  prelie->add_option("a", a_text)->required();
  prelie->add_option("b", b_text)->required();
  bool closed = false;
  prelie->add_flag("--closed", closed, "use the shuffle-sum formula");
  prelie->callback([&] {
    action = [&](Context& c) {
      const ComPreLie alg(c.endo());
      const Tensor a = c.tensor(a_text), b = c.tensor(b_text);
      c.emit("prelie", format_tensor(closed ? alg.prelie_closed(a, b) : alg.prelie(a, b), c.session.alphabet));
      return exit_ok;
    };
  });

  auto* bracket = app.add_subcommand("bracket", "a • b - b • a");
  bracket->add_option("a", a_text)->required();
  bracket->add_option("b", b_text)->required();
  bracket->callback([&] {
    action = [&](Context& c) {
      const ComPreLie alg(c.endo());
      c.emit("bracket", format_tensor(alg.lie_bracket(c.tensor(a_text), c.tensor(b_text)), c.session.alphabet));
      return exit_ok;
    };
  });

  auto* star = app.add_subcommand("star", "a ⋆ b in the enveloping algebra");
  star->add_option("a", a_text)->required();
  star->add_option("b", b_text)->required();
  star->callback([&] {
    action = [&](Context& c) {
      const Enveloping env{ComPreLie(c.endo())};
      c.emit("star", format_sym_tensor(env.star(c.sym_tensor(a_text), c.sym_tensor(b_text)), c.session.alphabet));
      return exit_ok;
    };
  });

  auto* coproduct = app.add_subcommand("coproduct", "Δ of a polynomial in words, or δ̃ of a word");
  coproduct->add_option("a", a_text)->required();
  bool dual = false, divided = false;
  coproduct->add_flag("--dual", dual, "δ̃ of a single word");
  coproduct->add_flag("--divided", divided, "divided-power scaling");
  coproduct->callback([&] {
    action = [&](Context& c) {
      const Enveloping env{ComPreLie(c.endo())};
      const auto scaling = divided ? CoproductScaling::divided : CoproductScaling::unit;
      const SymPairTensor d = dual ? env.dual_coproduct(c.word(a_text), scaling) : env.coproduct(c.sym_tensor(a_text), scaling);
      c.emit("coproduct", format_sym_pair_tensor(d, c.session.alphabet));
      return exit_ok;
    };
  });

  std::vector<std::string> inputs;
  std::size_t fliess_n = 0, channel = 1;
  bool diamond = false;
  auto* compose = app.add_subcommand("compose", "u ⊛̃ v, u ⋄ v, or a Fliess composition");
  compose->add_option("u", a_text)->required();
  compose->add_option("v", inputs, "one series, or n series with --fliess n")->required();
  compose->add_option("--fliess", fliess_n, "number of inputs n");
  compose->add_option("--channel", channel, "channel i of u");
  compose->add_flag("--diamond", diamond, "u ⋄ v instead of u ⊛̃ v");
  compose->callback([&] {
    action = [&](Context& c) {
      if (fliess_n > 0) {
        if (diamond) throw UsageError("--diamond takes no --fliess");
        if (c.session.endo) throw UsageError("--fliess fixes the endomorphism");
        if (inputs.size() != fliess_n) throw UsageError("--fliess n needs n series after u");
        c.session.alphabet = x_letters(fliess_n + 1);
        c.session.open_alphabet = false;
        const TruncatedSeries u = c.series(a_text);
        FliessTuple d;
        for (const auto& v : inputs) d.push_back(c.series(v));
        const FliessElement r = fliess_tilde({channel, u}, d);
        c.emit("compose", format_expression(r.series, c.session.alphabet));
        return exit_ok;
      }
      if (inputs.size() != 1) throw UsageError("compose takes u and one v");
      const CharacterGroup g(c.endo(), c.session.truncation);
      const TruncatedSeries u = c.series(a_text), v = c.series(inputs[0]);
      c.emit("compose", format_expression(diamond ? g.diamond(u, v) : g.tilde_compose(u, v), c.session.alphabet));
      return exit_ok;
    };
  });

  std::size_t max_degree = 8;
  auto* series = app.add_subcommand("series", "graded dimensions of the Fliess Lie algebra");
  series->add_option("--fliess", fliess_n, "number of inputs n")->required();
  series->add_option("--max", max_degree, "largest degree");
  series->callback([&] {
    action = [&](Context& c) {
      const auto dims = fibonacci_dims(fliess_n, max_degree);
      std::string text;
      for (std::size_t k = 0; k < dims.size(); ++k) text += (k ? "," : "") + to_string(dims[k]);
      c.emit("series", text, {{"dims", dims_json(dims)}});
      return exit_ok;
    };
  });

  std::optional<std::size_t> count_n, list_n;
  bool sigma = false;
  std::string dyck_text;
  auto* dyck = app.add_subcommand("dyck", "admissible words and Dyck paths");
  dyck->add_option("word", dyck_text, "upper word (digits) or Dyck path (R, U) to convert");
  dyck->add_option("--count", count_n, "number of admissible words of length n");
  dyck->add_option("--list", list_n, "admissible words of length n");
  dyck->add_flag("--sigma", sigma, "σ-admissible words instead");
  dyck->callback([&] {
    action = [&](Context& c) {
      const std::string label = sigma ? "sigma-admissible" : "admissible";
      if (count_n) {
        const std::size_t k = sigma ? count_sigma(*count_n) : count_admissible(*count_n);
        c.emit("dyck", label + ": " + std::to_string(k), {{"count", k}});
      } else if (list_n) {
        std::string text;
        for (const auto& w : sigma ? sigma_admissible_words(*list_n) : admissible_words(*list_n)) {
          text += (text.empty() ? "" : " ") + format_upper(w);
        }
        c.emit("dyck", text);
      } else if (!dyck_text.empty()) {
        if (dyck_text.find_first_not_of("0123456789") == std::string::npos) {
          c.emit("dyck", format_dyck(to_dyck(parse_upper(dyck_text))));
        } else {
          c.emit("dyck", format_upper(from_dyck(parse_dyck(dyck_text))));
        }
      } else {
        throw UsageError("dyck needs --count, --list or a word");
      }
      return exit_ok;
    };
  });

  std::string tree_text;
  auto* tree_map = app.add_subcommand("tree-map", "Φ into biwords, or into T(V,f) with --endo");
  tree_map->add_option("trees", tree_text)->required();
  tree_map->callback([&] {
    action = [&](Context& c) {
      const TreeTensor t = parse_tree_tensor(tree_text, c.session.alphabet, c.session.open_alphabet);
      if (!c.session.endo || c.session.endo->kind() == Endo::Kind::biletter_shift) {
        c.emit("tree-map", format_tensor(phi_cpl(t), c.session.alphabet));
        return exit_ok;
      }
      std::vector<LetterCombination> values;
      for (const auto& x : c.session.alphabet.letters()) values.push_back({{x, 1}});
      c.emit("tree-map", format_tensor(phi_into(t, c.endo(), values), c.session.alphabet));
      return exit_ok;
    };
  });

  auto* fdb = app.add_subcommand("fdb", "the Faà di Bruno case");
  fdb->require_subcommand(1);
  std::string weights_text;
  auto weights_of = [&](Context& c) {
    std::map<std::string, Rational> given;
    if (!weights_text.empty()) {
      for (const auto& item : split(weights_text, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("weights are name=q pairs");
        const std::string name = trim(item.substr(0, eq));
        c.session.alphabet.intern(name);
        given[name] = parse_rational(trim(item.substr(eq + 1)));
      }
    }
    return given;
  };
  // Without dots and with one-character names, "abc" reads letter by letter.
  auto fdb_word = [](Context& c, const std::string& text) {
    const auto& names = c.session.alphabet.names();
    const bool short_names = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
    if (c.session.open_alphabet && short_names && text.find_first_of(".:") == std::string::npos && text != "e") {
      for (char ch : text) c.session.alphabet.intern(std::string(1, ch));
    }
    return c.word(text);
  };
  auto resolve = [](const Context& c, const std::map<std::string, Rational>& given) {
    Weights w;
    for (const auto& name : c.session.alphabet.names()) {
      const auto it = given.find(name);
      w.push_back(it == given.end() ? Rational(1) : it->second);
    }
    return w;
  };
  auto* t_word_cmd = fdb->add_subcommand("t-word", "t_w as a combination of trees");
  t_word_cmd->add_option("word", a_text)->required();
  t_word_cmd->add_option("--weights", weights_text, "name=q,... (default 1)");
  t_word_cmd->callback([&] {
    action = [&](Context& c) {
      const auto given = weights_of(c);
      const Word w = fdb_word(c, a_text);
      c.emit("fdb", format_forest_poly(t_word(w, resolve(c, given)), c.session.alphabet));
      return exit_ok;
    };
  });
  bool projected = false;
  auto* delta_cmd = fdb->add_subcommand("delta", "δ(t_w) as pairs u | v");
  delta_cmd->add_option("word", a_text)->required();
  delta_cmd->add_option("--weights", weights_text, "name=q,... (default 1)");
  delta_cmd->add_flag("--projected", projected, "compute through the tree coproduct");
  delta_cmd->callback([&] {
    action = [&](Context& c) {
      const auto given = weights_of(c);
      const Word w = fdb_word(c, a_text);
      const auto mode = projected ? CobracketMode::projected : CobracketMode::closed;
      c.emit("fdb", format_word_pairs(delta_cobracket(w, resolve(c, given), mode), c.session.alphabet));
      return exit_ok;
    };
  });
  unsigned k = 1, l = 1;
  std::string lambda_text = "1";
  auto* bracket_cmd = fdb->add_subcommand("bracket", "[y_k, y_l] against (k - l) y_{k+l}");
  bracket_cmd->add_option("k", k)->required();
  bracket_cmd->add_option("l", l)->required();
  bracket_cmd->add_option("--lambda", lambda_text, "eigenvalue");
  bracket_cmd->callback([&] {
    action = [&](Context& c) {
      c.session.alphabet = x_letters(1);
      const BracketCheck r = y_bracket_check(parse_rational(lambda_text), k, l);
      const std::string computed = format_tensor(r.computed, c.session.alphabet);
      const std::string expected = format_tensor(r.expected, c.session.alphabet);
      if (c.session.format == OutputFormat::json) {
        c.emit("fdb", computed, {{"expected", expected}, {"holds", r.holds()}});
      } else {
        c.out << "computed: " << computed << "\nexpected: " << expected << "\n" << (r.holds() ? "holds" : "fails")
              << "\n";
      }
      return r.holds() ? exit_ok : exit_check_failed;
    };
  });

  std::uint64_t seed = 20240611;
  bool sequential = false;
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--seed", seed, "seed of the randomized checks");
  verify->add_flag("--sequential", sequential, "run the checks one after another");
  verify->add_option("--only", only, "names of the checks to run");
  verify->callback([&] {
    action = [&](Context& c) {
      const auto& all = acceptance_checks();
      for (const auto& name : only) {
        if (std::none_of(all.begin(), all.end(), [&](const Check& x) { return x.name == name; })) {
          throw UsageError("unknown check '" + name + "'");
        }
      }
      std::vector<Check> chosen;
      for (const auto& check : all) {
        if (only.empty() || std::find(only.begin(), only.end(), check.name) != only.end()) chosen.push_back(check);
      }
      const auto results = run_checks(chosen, seed, !sequential);
      if (c.session.format == OutputFormat::json) {
        c.out << report_json(results).dump(2) << "\n";
      } else {
        c.out << report_text(results);
      }
      return all_passed(results) ? exit_ok : exit_check_failed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    // Thrown from a callback while parsing.
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    Context c{make_session(endo_text, alphabet_text, format_text), out};
    c.session.truncation = trunc;
    return action(c);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace comprelie
