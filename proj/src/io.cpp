#include "jalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace jalg {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_identifier(std::string_view s) {
  return !s.empty() && ident_start(s.front()) && std::all_of(s.begin(), s.end(), ident_char);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct Token {
  enum Kind { number, name, plus, minus, star } kind;
  std::string text;
  unsigned power = 1;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-' || c == '*') {
      out.push_back({c == '+' ? Token::plus : c == '-' ? Token::minus : Token::star, std::string(1, c)});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i))});
      i = j;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      Token t{Token::name, std::string(s.substr(i, j - i))};
      if (j < s.size() && s[j] == '^') {
        std::size_t k = ++j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw std::invalid_argument("missing exponent after '^'");
        std::from_chars(s.data() + j, s.data() + k, t.power);
        j = k;
      }
      out.push_back(std::move(t));
      i = j;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

std::optional<std::size_t> find(const std::vector<std::string>& v, const std::string& s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

Poly power(Poly base, unsigned e, Field field) {
  Poly out(Scalar::one(field));
  for (unsigned i = 0; i < e; ++i) out = out * base;
  return out;
}

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(strip(hash == std::string_view::npos ? line : line.substr(0, hash)));
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto end = text.find('\n', start);
    out.push_back(strip_comment(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

// Splits "head rest" at the first whitespace.
std::pair<std::string, std::string> split_head(const std::string& line) {
  const auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  return {line.substr(0, sp), std::string(strip(std::string_view(line).substr(sp + 1)))};
}

std::string combination_rhs(const std::string& rest, std::size_t line, std::string& lhs) {
  const auto eq = rest.find('=');
  if (eq == std::string::npos) throw ParseError(line, "expected '='");
  lhs = std::string(strip(std::string_view(rest).substr(0, eq)));
  return std::string(strip(std::string_view(rest).substr(eq + 1)));
}

Element combination_at(std::size_t line, std::string_view text, const std::vector<std::string>& labels,
                       Field field, VarNames& params) {
  try {
    return parse_combination(text, labels, field, params);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

void add_params(VarNames& params, const std::string& rest, const std::vector<std::string>& labels,
                std::size_t line) {
  for (const auto& name : words(rest)) {
    if (!is_identifier(name)) throw ParseError(line, "malformed parameter name '" + name + "'");
    if (find(labels, name)) throw ParseError(line, "parameter '" + name + "' clashes with a basis label");
    if (find(params, name)) throw ParseError(line, "duplicate parameter '" + name + "'");
    if (params.size() >= kParamSlots) throw ParseError(line, "too many parameters");
    params.push_back(name);
  }
}

struct AlgebraBuilder {
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::size_t dim_line = 0;
  std::vector<std::string> basis;
  VarNames params;
  std::vector<std::tuple<std::size_t, std::size_t, std::string, std::size_t>> mults;  // i, j, rhs, line

  void line(std::size_t n, const std::string& text) {
    const auto [head, rest] = split_head(text);
    if (head == "field") {
      if (field) throw ParseError(n, "duplicate field declaration");
      try {
        field = Field::parse(rest);
      } catch (const std::exception& e) {
        throw ParseError(n, e.what());
      }
    } else if (head == "dim") {
      if (dim) throw ParseError(n, "duplicate dim declaration");
      std::size_t d = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || d == 0) {
        throw ParseError(n, "dim must be a positive integer");
      }
      dim = d;
      dim_line = n;
    } else if (head == "basis") {
      if (!basis.empty()) throw ParseError(n, "duplicate basis declaration");
      for (const auto& w : words(rest)) {
        if (!is_identifier(w)) throw ParseError(n, "malformed basis label '" + w + "'");
        if (find(basis, w)) throw ParseError(n, "duplicate basis label '" + w + "'");
        if (find(params, w)) throw ParseError(n, "basis label '" + w + "' clashes with a parameter");
        basis.push_back(w);
      }
      if (basis.empty()) throw ParseError(n, "empty basis");
    } else if (head == "param") {
      add_params(params, rest, basis, n);
    } else if (head == "mult") {
      if (basis.empty()) throw ParseError(n, "mult before basis");
      std::string lhs;
      std::string rhs = combination_rhs(rest, n, lhs);
      const auto f = words(lhs);
      if (f.size() != 2) throw ParseError(n, "expected 'mult x y = ...'");
      const auto i = find(basis, f[0]);
      const auto j = find(basis, f[1]);
      if (!i) throw ParseError(n, "unknown label '" + f[0] + "'");
      if (!j) throw ParseError(n, "unknown label '" + f[1] + "'");
      for (const auto& m : mults) {
        const auto [p, q, _, l] = m;
        if ((p == *i && q == *j) || (p == *j && q == *i)) {
          throw ParseError(n, "product " + f[0] + " " + f[1] + " already given on line " + std::to_string(l));
        }
      }
      mults.emplace_back(*i, *j, rhs, n);
    } else {
      throw ParseError(n, "unknown directive '" + head + "'");
    }
  }

  Algebra build(std::size_t last_line) {
    last_line = std::max<std::size_t>(last_line, 1);
    if (!field) throw ParseError(last_line, "missing field declaration");
    if (basis.empty()) throw ParseError(last_line, "missing basis declaration");
    if (dim && *dim != basis.size()) {
      throw ParseError(dim_line, "dim " + std::to_string(*dim) + " disagrees with " +
                                      std::to_string(basis.size()) + " basis labels");
    }
    Algebra a(*field, basis, params);
    for (const auto& [i, j, rhs, n] : mults) a.set_product(i, j, combination_at(n, rhs, basis, *field, params));
    return a;
  }
};

void write_header(std::ostringstream& os, const Algebra& a, const std::string& indent) {
  os << indent << "field " << a.field().name() << '\n';
  os << indent << "dim " << a.dim() << '\n';
  os << indent << "basis";
  for (const auto& l : a.basis()) os << ' ' << l;
  os << '\n';
  if (!a.params().empty()) {
    os << indent << "param";
    for (const auto& p : a.params()) os << ' ' << p;
    os << '\n';
  }
}

void write_body(std::ostringstream& os, const Algebra& a, const std::string& indent) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Element e = a.table().product(i, j);
      if (is_zero(e)) continue;
      os << indent << "mult " << a.basis()[i] << ' ' << a.basis()[j] << " = "
         << format_element(e, a.basis(), a.params()) << '\n';
    }
  }
}

}  // namespace

Element parse_combination(std::string_view text, const std::vector<std::string>& labels, Field field,
                          VarNames& params, bool new_params) {
  const auto tokens = tokenize(text);
  if (tokens.empty()) throw std::invalid_argument("empty combination");
  Element out = zero_element(field, labels.size());
  if (tokens.size() == 1 && tokens[0].kind == Token::number && Scalar::parse(tokens[0].text, field).is_zero()) {
    return out;
  }
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    Scalar sign = Scalar::one(field);
    if (tokens[i].kind == Token::plus || tokens[i].kind == Token::minus) {
      if (tokens[i].kind == Token::minus) sign = -sign;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' before '" + tokens[i].text + "'");
    }
    first = false;
    Poly coeff(sign);
    std::optional<std::size_t> label;
    bool expect_factor = true;
    while (i < tokens.size() && tokens[i].kind != Token::plus && tokens[i].kind != Token::minus) {
      const Token& t = tokens[i];
      if (t.kind == Token::star) {
        if (expect_factor) throw std::invalid_argument("misplaced '*'");
        expect_factor = true;
        ++i;
        continue;
      }
      if (label) throw std::invalid_argument("basis label '" + labels[*label] + "' must be the last factor");
      if (t.kind == Token::number) {
        coeff = coeff * Poly(Scalar::parse(t.text, field));
      } else if (auto p = find(params, t.text)) {
        coeff = coeff * power(Poly::variable(field, static_cast<Var>(*p)), t.power, field);
      } else if (auto l = find(labels, t.text); l && t.power == 1) {
        label = l;
      } else if (new_params && is_identifier(t.text) && !l) {
        if (params.size() >= kParamSlots) throw std::invalid_argument("too many parameters");
        params.push_back(t.text);
        coeff = coeff * power(Poly::variable(field, static_cast<Var>(params.size() - 1)), t.power, field);
      } else {
        throw std::invalid_argument("unknown label '" + t.text + "'");
      }
      expect_factor = false;
      ++i;
    }
    if (!label) throw std::invalid_argument("term without a basis label");
    out[*label] += coeff;
  }
  return out;
}

Algebra parse_algebra(std::string_view text) {
  AlgebraBuilder b;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (!lines[n].empty()) b.line(n + 1, lines[n]);
  }
  return b.build(lines.size());
}

std::string write_algebra(const Algebra& a) {
  std::ostringstream os;
  write_header(os, a, "");
  write_body(os, a, "");
  return os.str();
}

MatchedPair parse_pair(std::string_view text, const IncludeResolver& include) {
  const auto lines = lines_of(text);
  std::map<std::string, Algebra> blocks;
  VarNames params;
  struct Action {
    bool left;
    std::string x, a, rhs;
    std::size_t line;
  };
  std::vector<Action> actions;

  std::size_t n = 0;
  while (n < lines.size()) {
    const std::string& line = lines[n++];
    if (line.empty()) continue;
    const auto [head, rest] = split_head(line);
    if (head == "algebra") {
      if (rest != "A" && rest != "V") throw ParseError(n, "expected 'algebra A' or 'algebra V'");
      if (blocks.count(rest)) throw ParseError(n, "duplicate algebra " + rest);
      if (!actions.empty()) throw ParseError(n, "algebra blocks must precede action lines");
      const std::size_t opened = n;
      AlgebraBuilder b;
      std::optional<Algebra> included;
      bool inline_lines = false;
      bool closed = false;
      while (n < lines.size()) {
        const std::string& inner = lines[n++];
        if (inner.empty()) continue;
        if (inner == "end") {
          closed = true;
          break;
        }
        const auto [ihead, irest] = split_head(inner);
        if (ihead == "@include") {
          if (included || inline_lines) throw ParseError(n, "an @include must be the only line of its block");
          if (!include) throw ParseError(n, "includes are not available here");
          try {
            included = include(irest);
          } catch (const std::exception& e) {
            throw ParseError(n, "in '" + irest + "': " + e.what());
          }
        } else {
          if (included) throw ParseError(n, "an @include must be the only line of its block");
          inline_lines = true;
          b.line(n, inner);
        }
      }
      if (!closed) throw ParseError(opened, "unterminated algebra block");
      blocks.emplace(rest, included ? *included : b.build(n));
    } else if (head == "param") {
      add_params(params, rest, {}, n);
    } else if (head == "left" || head == "right") {
      std::string lhs;
      std::string rhs = combination_rhs(rest, n, lhs);
      const auto f = words(lhs);
      if (f.size() != 3 || f[1] != ".") throw ParseError(n, "expected '" + head + " x . a = ...'");
      actions.push_back({head == "left", f[0], f[2], rhs, n});
    } else {
      throw ParseError(n, "unknown directive '" + head + "'");
    }
  }
  if (!blocks.count("A")) throw ParseError(std::max<std::size_t>(lines.size(), 1), "missing algebra A");
  if (!blocks.count("V")) throw ParseError(std::max<std::size_t>(lines.size(), 1), "missing algebra V");
  Algebra a = blocks.at("A");
  Algebra v = blocks.at("V");
  if (a.field() != v.field()) throw ParseError(std::max<std::size_t>(lines.size(), 1), "field mismatch between A and V");
  VarNames merged;
  try {
    merged = merge_params(merge_params(a.params(), v.params()), params);
  } catch (const std::exception& e) {
    throw ParseError(std::max<std::size_t>(lines.size(), 1), e.what());
  }
  a.set_params(merged);
  v.set_params(merged);
  MatchedPair mp(a, v);
  std::set<std::tuple<bool, std::size_t, std::size_t>> seen;
  for (const auto& act : actions) {
    const auto x = find(mp.V.basis(), act.x);
    const auto j = find(mp.A.basis(), act.a);
    if (!x) throw ParseError(act.line, "unknown V label '" + act.x + "'");
    if (!j) throw ParseError(act.line, "unknown A label '" + act.a + "'");
    if (!seen.insert({act.left, *x, *j}).second) {
      throw ParseError(act.line, "duplicate action entry " + act.x + " . " + act.a);
    }
    VarNames names = merged;
    if (act.left) {
      mp.left.set(*x, *j, combination_at(act.line, act.rhs, mp.A.basis(), mp.field(), names));
    } else {
      mp.right.set(*x, *j, combination_at(act.line, act.rhs, mp.V.basis(), mp.field(), names));
    }
  }
  return mp;
}

std::string write_pair(const MatchedPair& mp) {
  std::ostringstream os;
  const VarNames names = mp.params();
  for (const auto* part : {&mp.A, &mp.V}) {
    os << "algebra " << (part == &mp.A ? "A" : "V") << '\n';
    write_header(os, *part, "  ");
    write_body(os, *part, "  ");
    os << "end\n";
  }
  for (std::size_t x = 0; x < mp.V.dim(); ++x) {
    for (std::size_t j = 0; j < mp.A.dim(); ++j) {
      const Element e = mp.left.product(x, j);
      if (!is_zero(e)) {
        os << "left " << mp.V.basis()[x] << " . " << mp.A.basis()[j] << " = "
           << format_element(e, mp.A.basis(), names) << '\n';
      }
    }
  }
  for (std::size_t x = 0; x < mp.V.dim(); ++x) {
    for (std::size_t j = 0; j < mp.A.dim(); ++j) {
      const Element e = mp.right.product(x, j);
      if (!is_zero(e)) {
        os << "right " << mp.V.basis()[x] << " . " << mp.A.basis()[j] << " = "
           << format_element(e, mp.V.basis(), names) << '\n';
      }
    }
  }
  return os.str();
}

LinearMap parse_map(std::string_view text, const std::vector<std::string>& source,
                    const std::vector<std::string>& target, Field field, VarNames& params) {
  LinearMap out(field, source.size(), target.size());
  std::set<std::size_t> seen;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(';', start);
    const auto part = strip(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (!part.empty()) {
      const auto arrow = part.find("->");
      if (arrow == std::string_view::npos) throw std::invalid_argument("expected 'x -> combination'");
      const std::string x(strip(part.substr(0, arrow)));
      const auto j = find(source, x);
      if (!j) throw std::invalid_argument("unknown source label '" + x + "'");
      if (!seen.insert(*j).second) throw std::invalid_argument("image of '" + x + "' given twice");
      out.set_column(*j, parse_combination(part.substr(arrow + 2), target, field, params, true));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Subspace parse_subspace(std::string_view text, const std::vector<std::string>& labels, Field field) {
  std::vector<Vector> vectors;
  VarNames none;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    const auto part = strip(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (!part.empty()) vectors.push_back(to_vector(parse_combination(part, labels, field, none)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Subspace::span(field, labels.size(), vectors);
}

}  // namespace jalg
