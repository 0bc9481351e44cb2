#include "lgc/formula.hpp"

#include <algorithm>
#include <cctype>

#include "lgc/error.hpp"

namespace lgc {

int Formula::max_var() const {
  int best = kind == Kind::Var ? var : 0;
  for (const Formula& a : args) best = std::max(best, a.max_var());
  return best;
}

bool evaluate(const Formula& f, std::uint64_t point) {
  switch (f.kind) {
    case Formula::Kind::Var: return (point >> (f.var - 1)) & 1u;
    case Formula::Kind::Const: return f.value;
    case Formula::Kind::Not: return !evaluate(f.args[0], point);
    case Formula::Kind::And: return evaluate(f.args[0], point) && evaluate(f.args[1], point);
    case Formula::Kind::Or: return evaluate(f.args[0], point) || evaluate(f.args[1], point);
    case Formula::Kind::Xor: return evaluate(f.args[0], point) != evaluate(f.args[1], point);
    case Formula::Kind::Implies: return !evaluate(f.args[0], point) || evaluate(f.args[1], point);
  }
  return false;
}

Poly formula_to_poly(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Var: return Poly::var(f.var);
    case Formula::Kind::Const: return f.value ? Poly::one() : Poly::zero();
    case Formula::Kind::Not: return formula_to_poly(f.args[0]) + Poly::one();
    case Formula::Kind::And: return formula_to_poly(f.args[0]) * formula_to_poly(f.args[1]);
    case Formula::Kind::Or: {
      Poly a = formula_to_poly(f.args[0]);
      Poly b = formula_to_poly(f.args[1]);
      Poly ab = a * b;
      return a + b + ab;
    }
    case Formula::Kind::Xor: return formula_to_poly(f.args[0]) + formula_to_poly(f.args[1]);
    case Formula::Kind::Implies: {
      Poly a = formula_to_poly(f.args[0]);
      Poly b = formula_to_poly(f.args[1]);
      return a * (b + Poly::one()) + Poly::one();
    }
  }
  return {};
}

namespace {

enum class Tok {
  Var, Num, LParen, RParen, Not, And, Or, Xor, Implies, Is, True, False,
  Plus, Star, Equals, End
};

struct Token {
  Tok kind;
  int value = 0;  // variable index or 0/1 literal
  int column = 1;
  std::string text;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::vector<Token> lex(std::string_view text, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if ((c == 'x' || c == 'X') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      long idx = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        idx = std::min<long>(idx * 10 + (text[i] - '0'), 1'000'000);
        ++i;
      }
      out.push_back({Tok::Var, static_cast<int>(idx), col(start), std::string(text.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      const std::string word(text.substr(start, i - start));
      const std::string w = upper(word);
      Tok kind;
      if (w == "NOT") kind = Tok::Not;
      else if (w == "AND") kind = Tok::And;
      else if (w == "OR") kind = Tok::Or;
      else if (w == "XOR") kind = Tok::Xor;
      else if (w == "IMPLIES") kind = Tok::Implies;
      else if (w == "IS") kind = Tok::Is;
      else if (w == "TRUE") kind = Tok::True;
      else if (w == "FALSE") kind = Tok::False;
      else syntax_error(line, col(start), "unknown word '" + word + "'");
      out.push_back({kind, 0, col(start), word});
      continue;
    }
    if (c == '0' || c == '1') {
      ++i;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        syntax_error(line, col(start), "only the constants 0 and 1 exist over GF(2)");
      }
      out.push_back({Tok::Num, c - '0', col(start), std::string(1, c)});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      i += 2;
      out.push_back({Tok::Implies, 0, col(start), "->"});
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '!': case '~': kind = Tok::Not; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '^': kind = Tok::Xor; break;
      case '+': kind = Tok::Plus; break;
      case '*': kind = Tok::Star; break;
      case '=': kind = Tok::Equals; break;
      default: syntax_error(line, col(start), std::string("unexpected character '") + c + "'");
    }
    ++i;
    out.push_back({kind, 0, col(start), std::string(1, c)});
  }
  out.push_back({Tok::End, 0, col(text.size()), "end of line"});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, int line, std::optional<int> vars)
      : toks_(std::move(tokens)), line_(line), vars_(vars) {}

  // formula [is TRUE|FALSE]
  Poly statement() {
    const bool raw = std::any_of(toks_.begin(), toks_.end(),
                                 [](const Token& t) { return t.kind == Tok::Equals; });
    if (raw) {
      Poly lhs = sum();
      expect(Tok::Equals, "'='");
      Poly rhs = sum();
      expect(Tok::End, "end of statement");
      return lhs + rhs;
    }
    Formula f = implication();
    bool asserted = true;
    if (peek().kind == Tok::Is) {
      advance();
      const Token& t = peek();
      if (t.kind == Tok::True) asserted = true;
      else if (t.kind == Tok::False) asserted = false;
      else fail(t, "expected TRUE or FALSE after 'is'");
      advance();
    }
    expect(Tok::End, "end of statement");
    Poly p = formula_to_poly(f);
    // The member must vanish exactly when the assertion holds.
    return asserted ? p + Poly::one() : p;
  }

  Formula formula_only() {
    Formula f = implication();
    expect(Tok::End, "end of formula");
    return f;
  }

  int max_index() const { return max_index_; }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    syntax_error(line_, t.column, msg + " (found '" + t.text + "')");
  }

  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    advance();
  }

  int variable(const Token& t) {
    if (t.value < 1 || t.value > kMaxVars || (vars_ && t.value > *vars_)) {
      throw Error(ErrorCode::VariableOutOfRange,
                  "line " + std::to_string(line_) + ", column " + std::to_string(t.column) +
                      ": " + t.text);
    }
    max_index_ = std::max(max_index_, t.value);
    return t.value;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      advance();
      return Formula::binary(Formula::Kind::Implies, std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = exclusive();
    while (peek().kind == Tok::Or) {
      advance();
      f = Formula::binary(Formula::Kind::Or, std::move(f), exclusive());
    }
    return f;
  }

  Formula exclusive() {
    Formula f = conjunction();
    while (peek().kind == Tok::Xor) {
      advance();
      f = Formula::binary(Formula::Kind::Xor, std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (peek().kind == Tok::And) {
      advance();
      f = Formula::binary(Formula::Kind::And, std::move(f), negation());
    }
    return f;
  }

  Formula negation() {
    if (peek().kind == Tok::Not) {
      advance();
      return Formula::unary(Formula::Kind::Not, negation());
    }
    return atom();
  }

  Formula atom() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Var: advance(); return Formula::variable(variable(t));
      case Tok::True: advance(); return Formula::constant(true);
      case Tok::False: advance(); return Formula::constant(false);
      case Tok::Num: advance(); return Formula::constant(t.value == 1);
      case Tok::LParen: {
        advance();
        Formula f = implication();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: fail(t, "expected a variable, constant or '('");
    }
  }

  // Raw polynomial mode: sums of products, '*' optional between factors.
  Poly sum() {
    Poly p = product();
    while (peek().kind == Tok::Plus) {
      advance();
      p += product();
    }
    return p;
  }

  Poly product() {
    Poly p = factor();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        advance();
        p = p * factor();
      } else if (k == Tok::Var || k == Tok::Num || k == Tok::LParen) {
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Var: advance(); return Poly::var(variable(t));
      case Tok::Num: advance(); return t.value ? Poly::one() : Poly::zero();
      case Tok::LParen: {
        advance();
        Poly p = sum();
        expect(Tok::RParen, "')'");
        return p;
      }
      default: fail(t, "expected a variable, 0, 1 or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
  std::optional<int> vars_;
  int max_index_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser parser(lex(text, 1), 1, std::nullopt);
  return parser.formula_only();
}

PolySet parse_statements(std::string_view text, std::optional<int> vars) {
  if (vars && (*vars < 0 || *vars > kMaxVars)) {
    throw Error(ErrorCode::VariableOutOfRange, "variable count " + std::to_string(*vars));
  }
  PolySet out;
  int max_index = 0;
  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      Parser parser(lex(line, line_no), line_no, vars);
      out.polys.push_back(parser.statement());
      max_index = std::max(max_index, parser.max_index());
    }
    if (end == text.size()) break;
    begin = end + 1;
  }
  out.m = vars ? *vars : max_index;
  return out;
}

}  // namespace lgc
