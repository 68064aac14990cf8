#include "seclab/poly_io.hpp"

#include <cctype>
#include <charconv>

namespace seclab {

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negate = false;
      if (c == '+' || c == '-') {
        negate = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc += negate ? -t : t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        acc = acc * factor();  // juxtaposition, e.g. 3x_0
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = 0;
      auto res = std::from_chars(s_.data() + start, s_.data() + pos_, e);
      if (res.ec != std::errc() || e > kMaxExponent) fail("exponent out of range");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      std::uint32_t p = ring_->prime();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + static_cast<unsigned>(s_[pos_] - '0')) % p;
        ++pos_;
      }
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        std::size_t save = pos_;
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '{') {
          while (pos_ < s_.size() && s_[pos_] != '}') ++pos_;
          if (pos_ == s_.size()) fail("unterminated subscript");
          ++pos_;
        } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        } else {
          pos_ = save;
        }
      }
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->var_index(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("expected a number, variable or '('");
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on commas outside braces, so y_{1,0},y_{1,1} stays two names.
std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  s = trim(s);
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// key=value fields after the leading keyword
std::vector<std::pair<std::string_view, std::string_view>> fields(std::string_view line, std::size_t skip = 1) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  auto parts = split(line, ' ');
  for (std::size_t i = skip; i < parts.size(); ++i) {
    auto p = trim(parts[i]);
    if (p.empty()) continue;
    auto eq = p.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value, got '" + std::string(p) + "'");
    out.emplace_back(p.substr(0, eq), p.substr(eq + 1));
  }
  return out;
}

struct Lines {
  std::vector<std::string_view> lines;
  std::size_t next = 0;
  explicit Lines(std::string_view text) {
    for (auto l : split(text, '\n')) {
      l = trim(l);
      if (l.empty() || l.front() == '#') continue;
      lines.push_back(l);
    }
  }
  bool done() const { return next >= lines.size(); }
  std::string_view peek() const { return lines[next]; }
  std::string_view take() { return lines[next++]; }
};

bool starts_with_word(std::string_view line, std::string_view word) {
  return line.substr(0, word.size()) == word && (line.size() == word.size() || line[word.size()] == ' ');
}

Ring read_header(Lines& in) {
  if (in.done() || !starts_with_word(in.peek(), "ring")) throw ParseError("expected 'ring prime=...' header");
  std::uint32_t prime = kDefaultPrime;
  for (auto [k, v] : fields(in.take())) {
    if (k == "prime") {
      prime = static_cast<std::uint32_t>(parse_int(v, "prime"));
    } else {
      throw ParseError("unknown ring field '" + std::string(k) + "'");
    }
  }
  std::vector<VariableBlock> blocks;
  while (!in.done() && starts_with_word(in.peek(), "block")) {
    auto line = in.take();
    auto parts = split(line, ' ');
    if (parts.size() < 2) throw ParseError("block line needs a name");
    VariableBlock b;
    b.name = std::string(trim(parts[1]));
    for (auto [k, v] : fields(line, 2)) {
      if (k == "weights") {
        b.weights.clear();
        for (auto w : split(v, ',')) b.weights.push_back(parse_int(w, "weight"));
      } else if (k == "vars") {
        b.vars = split_names(v);
      } else {
        throw ParseError("unknown block field '" + std::string(k) + "'");
      }
    }
    blocks.push_back(std::move(b));
  }
  if (blocks.empty()) throw ParseError("ring header has no blocks");
  try {
    return make_ring(std::move(blocks), prime);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid ring: ") + e.what());
  }
}

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) { return Parser(ring, text).parse(); }

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::int64_t c = ring.field().symmetric(t.c);
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    bool need_star = false;
    if (c != 1 || t.m.is_one()) {
      out += std::to_string(c);
      need_star = true;
    }
    for (int i = 0; i < ring.nvars(); ++i) {
      if (!t.m[i]) continue;
      if (need_star) out += '*';
      out += ring.var_name(i);
      if (t.m[i] > 1) out += "^" + std::to_string(t.m[i]);
      need_star = true;
    }
  }
  return out;
}

std::string ring_header(const RingSpec& ring) {
  std::string out = "ring prime=" + std::to_string(ring.prime()) + "\n";
  for (const auto& b : ring.blocks()) {
    out += "block " + b.name + " weights=";
    for (std::size_t i = 0; i < b.weights.size(); ++i) out += (i ? "," : "") + std::to_string(b.weights[i]);
    out += " vars=";
    for (std::size_t i = 0; i < b.vars.size(); ++i) out += (i ? "," : "") + b.vars[i];
    out += "\n";
  }
  return out;
}

std::string write_ideal_text(const Ring& ring, std::span<const Polynomial> gens) {
  std::string out = ring_header(*ring);
  out += "generators " + std::to_string(gens.size()) + "\n";
  for (const auto& g : gens) out += to_string(g) + "\n";
  return out;
}

Ring parse_ring_header(std::string_view text) {
  Lines in(text);
  return read_header(in);
}

PolynomialList read_ideal_text(std::string_view text) {
  Lines in(text);
  PolynomialList out{read_header(in), {}};
  if (in.done() || !(starts_with_word(in.peek(), "generators") || starts_with_word(in.peek(), "formspace"))) {
    throw ParseError("expected 'generators N'");
  }
  auto line = in.take();
  std::size_t count = 0;
  if (starts_with_word(line, "generators")) {
    count = static_cast<std::size_t>(parse_int(line.substr(10), "generator count"));
  } else {
    bool have_dim = false;
    for (auto [k, v] : fields(line)) {
      if (k == "dim") {
        count = static_cast<std::size_t>(parse_int(v, "dimension"));
        have_dim = true;
      } else if (k != "degree") {
        throw ParseError("unknown formspace field '" + std::string(k) + "'");
      }
    }
    if (!have_dim) throw ParseError("formspace line needs dim=");
  }
  while (!in.done()) out.polys.push_back(parse_polynomial(out.ring, in.take()));
  if (out.polys.size() != count) {
    throw ParseError("declared " + std::to_string(count) + " polynomials, found " + std::to_string(out.polys.size()));
  }
  return out;
}

nlohmann::json ring_to_json(const RingSpec& ring) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : ring.blocks()) blocks.push_back({{"name", b.name}, {"vars", b.vars}, {"weights", b.weights}});
  return {{"prime", ring.prime()}, {"blocks", blocks}};
}

Ring ring_from_json(const nlohmann::json& j) {
  try {
    std::vector<VariableBlock> blocks;
    for (const auto& b : j.at("blocks")) {
      blocks.push_back({b.at("name").get<std::string>(), b.at("vars").get<std::vector<std::string>>(),
                        b.at("weights").get<std::vector<int>>()});
    }
    return make_ring(std::move(blocks), j.value("prime", kDefaultPrime));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad ring JSON: ") + e.what());
  }
}

nlohmann::json polynomial_to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  int n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = t.m[i];
    terms.push_back({{"exp", e}, {"coef", t.c}});
  }
  return {{"terms", terms}};
}

Polynomial polynomial_from_json(const Ring& ring, const nlohmann::json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exp").get<std::vector<int>>();
      if (static_cast<int>(e.size()) != ring->nvars()) throw ParseError("exponent vector has the wrong length");
      std::int64_t c = t.at("coef").get<std::int64_t>();
      terms.push_back({Monomial::from_exponents(e), ring->field().from_int(c)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
}

nlohmann::json ideal_to_json(const Ring& ring, std::span<const Polynomial> gens) {
  nlohmann::json g = nlohmann::json::array();
  for (const auto& f : gens) g.push_back(polynomial_to_json(f));
  return {{"ring", ring_to_json(*ring)}, {"generators", g}};
}

PolynomialList ideal_from_json(const nlohmann::json& j) {
  if (!j.contains("ring") || !j.contains("generators")) throw ParseError("ideal JSON needs 'ring' and 'generators'");
  PolynomialList out{ring_from_json(j.at("ring")), {}};
  for (const auto& g : j.at("generators")) out.polys.push_back(polynomial_from_json(out.ring, g));
  return out;
}

}  // namespace seclab
