#include <comprelie/endomorphism.hpp>

#include <stdexcept>
#include <string>

namespace comprelie {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m) {
    for (const auto& x : row) {
      if (x != 0) return false;
    }
  }
  return true;
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("endomorphism entries must be integers or \"p/q\" strings");
}

}  // namespace

Endo Endo::matrix(std::vector<std::vector<Rational>> entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries) {
    if (row.size() != n) throw std::invalid_argument("endomorphism matrix must be square");
  }
  Endo f;
  f.kind_ = Kind::matrix;
  f.columns_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (entries[i][j] != 0) {
        f.columns_[j].push_back({Letter::plain(static_cast<std::uint32_t>(i)), entries[i][j]});
      }
    }
  }
  f.entries_ = std::move(entries);
  return f;
}

Endo Endo::diagonal(std::vector<Rational> weights) {
  Endo f;
  f.kind_ = Kind::diagonal;
  f.weights_ = std::move(weights);
  return f;
}

Endo Endo::biletter_shift() {
  Endo f;
  f.kind_ = Kind::biletter_shift;
  return f;
}

Endo Endo::zero(std::size_t dim) { return matrix(Matrix(dim, std::vector<Rational>(dim))); }

Endo Endo::identity(std::size_t dim) {
  Matrix m(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return matrix(std::move(m));
}

Endo Endo::fliess(std::size_t n, std::size_t channel) {
  if (n == 0 || channel == 0 || channel > n) throw std::invalid_argument("Fliess channel must lie in 1..n");
  Matrix m(n + 1, std::vector<Rational>(n + 1));
  m[0][channel] = 1;
  return matrix(std::move(m));
}

std::optional<std::size_t> Endo::dimension() const {
  switch (kind_) {
    case Kind::matrix: return entries_.size();
    case Kind::diagonal: return weights_.size();
    case Kind::biletter_shift: return std::nullopt;
  }
  return std::nullopt;
}

bool Endo::acts_on(const Letter& x) const {
  if (kind_ == Kind::biletter_shift) return x.is_biletter();
  return !x.is_biletter() && x.symbol < *dimension();
}

LetterCombination Endo::image(const Letter& x) const {
  if (!acts_on(x)) throw std::out_of_range("letter outside the domain of the endomorphism");
  switch (kind_) {
    case Kind::matrix: return columns_[x.symbol];
    case Kind::diagonal:
      if (weights_[x.symbol] == 0) return {};
      return {{x, weights_[x.symbol]}};
    case Kind::biletter_shift: return {{Letter::biletter(static_cast<std::uint32_t>(x.level) + 1, x.symbol), 1}};
  }
  return {};
}

LetterCombination apply_letters(const Endo& f, const LetterCombination& v) {
  Tensor sum;
  for (const auto& [x, c] : v) {
    for (const auto& [y, a] : f.image(x)) sum.add(Word{y}, a * c);
  }
  return to_letters(sum);
}

LetterCombination Endo::image_power(const Letter& x, std::size_t k) const {
  if (!acts_on(x)) throw std::out_of_range("letter outside the domain of the endomorphism");
  LetterCombination v{{x, 1}};
  for (std::size_t i = 0; i < k && !v.empty(); ++i) v = apply_letters(*this, v);
  return v;
}

Matrix Endo::dense() const {
  switch (kind_) {
    case Kind::matrix: return entries_;
    case Kind::diagonal: {
      Matrix m(weights_.size(), std::vector<Rational>(weights_.size()));
      for (std::size_t i = 0; i < weights_.size(); ++i) m[i][i] = weights_[i];
      return m;
    }
    case Kind::biletter_shift: break;
  }
  throw std::logic_error("the biletter shift has no finite matrix");
}

Tensor to_tensor(const LetterCombination& v) {
  Tensor t;
  for (const auto& [x, c] : v) t.add(Word{x}, c);
  return t;
}

LetterCombination to_letters(const Tensor& v) {
  LetterCombination out;
  for (const auto& [w, c] : v) {
    if (w.size() != 1) throw std::invalid_argument("expected a degree-one tensor");
    out.push_back({w[0], c});
  }
  return out;
}

Tensor apply_endo(const Endo& f, const Tensor& v) { return to_tensor(apply_letters(f, to_letters(v))); }

Tensor iterate_endo(const Endo& f, std::size_t k, const Tensor& v) {
  LetterCombination x = to_letters(v);
  for (const auto& [y, c] : x) {
    if (!f.acts_on(y)) throw std::out_of_range("letter outside the domain of the endomorphism");
  }
  for (std::size_t i = 0; i < k && !x.empty(); ++i) x = apply_letters(f, x);
  return to_tensor(x);
}

std::optional<std::size_t> nilpotency_index(const Endo& f) {
  if (f.kind() == Endo::Kind::biletter_shift) return std::nullopt;
  const Matrix m = f.dense();
  const std::size_t n = m.size();
  if (n == 0) return 0;
  Matrix power = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (is_zero(power)) return k;
    power = multiply(power, m);
  }
  return std::nullopt;
}

Endo transpose_endo(const Endo& f) {
  switch (f.kind()) {
    case Endo::Kind::diagonal: return f;
    case Endo::Kind::matrix: {
      Matrix m = f.dense();
      const std::size_t n = m.size();
      Matrix t(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
      }
      return Endo::matrix(std::move(t));
    }
    case Endo::Kind::biletter_shift: break;
  }
  throw std::invalid_argument("the biletter shift has no transpose");
}

EndoSpec endo_from_json(const nlohmann::json& j) {
  std::vector<std::string> names;
  if (j.contains("alphabet")) names = j.at("alphabet").get<std::vector<std::string>>();
  const std::string kind = j.at("kind").get<std::string>();
  Alphabet alphabet(names);
  if (kind == "biletter_shift") return {alphabet, Endo::biletter_shift()};
  if (kind == "diagonal") {
    std::vector<Rational> w(names.size());
    const auto& weights = j.at("weights");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!weights.contains(names[i])) throw std::invalid_argument("missing diagonal weight for '" + names[i] + "'");
      w[i] = json_rational(weights.at(names[i]));
    }
    return {alphabet, Endo::diagonal(std::move(w))};
  }
  if (kind == "matrix") {
    const auto& rows = j.at("matrix");
    if (rows.size() != names.size()) throw std::invalid_argument("matrix size does not match the alphabet");
    Matrix m;
    for (const auto& row : rows) {
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(json_rational(x));
      m.push_back(std::move(r));
    }
    return {alphabet, Endo::matrix(std::move(m))};
  }
  throw std::invalid_argument("unknown endomorphism kind '" + kind + "'");
}

nlohmann::json endo_to_json(const EndoSpec& spec) {
  nlohmann::json j;
  j["alphabet"] = spec.alphabet.names();
  switch (spec.endo.kind()) {
    case Endo::Kind::biletter_shift: j["kind"] = "biletter_shift"; break;
    case Endo::Kind::diagonal: {
      j["kind"] = "diagonal";
      nlohmann::json w = nlohmann::json::object();
      for (std::size_t i = 0; i < spec.endo.weights().size(); ++i) {
        w[spec.alphabet.name(static_cast<std::uint32_t>(i))] = to_string(spec.endo.weights()[i]);
      }
      j["weights"] = w;
      break;
    }
    case Endo::Kind::matrix: {
      j["kind"] = "matrix";
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : spec.endo.dense()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        rows.push_back(r);
      }
      j["matrix"] = rows;
      break;
    }
  }
  return j;
}

}  // namespace comprelie
