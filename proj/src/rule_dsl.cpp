#include "eco/rule_dsl.hpp"

#include <cctype>
#include <sstream>

#include "eco/error.hpp"

namespace eco {

// ---------------------------------------------------------------- LabelExpr

LabelExpr LabelExpr::constant(const BigInt& c) {
  LabelExpr e;
  e.coeffs_ = {c};
  e.normalize();
  return e;
}

LabelExpr LabelExpr::variable() {
  LabelExpr e;
  e.coeffs_ = {0, 1};
  return e;
}

void LabelExpr::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LabelExpr::evaluate(const BigInt& k) const {
  BigInt v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * k + *it;
  return v;
}

LabelExpr operator+(const LabelExpr& a, const LabelExpr& b) {
  LabelExpr r;
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.normalize();
  return r;
}

LabelExpr operator-(const LabelExpr& a, const LabelExpr& b) {
  return a + LabelExpr::constant(-1) * b;
}

LabelExpr operator*(const LabelExpr& a, const LabelExpr& b) {
  LabelExpr r;
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

std::string LabelExpr::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (int i = 0; i < d; ++i) out += i == 0 ? "k" : "*k";
  }
  return out;
}

// ------------------------------------------------------------------- lexer

namespace {

enum class Tok { LParen, RParen, LBrace, RBrace, Arrow, DotDot, Caret, Plus, Minus, Star,
                 Semi, Newline, Int, K, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << msg;
  throw Error(ErrorKind::Syntax, os.str());
}

struct Lexed {
  std::vector<Token> tokens;
  std::string name;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Lexed lex(std::string_view text) {
  Lexed out;
  int line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view src = text.substr(pos, eol - pos);
    std::string head = trim(src);
    if (head.rfind("name:", 0) == 0) {
      out.name = trim(std::string_view(head).substr(5));
    } else {
      std::size_t i = 0;
      auto push = [&](Tok kind, std::string t, std::size_t col) {
        out.tokens.push_back({kind, std::move(t), line, static_cast<int>(col) + 1});
      };
      while (i < src.size()) {
        char c = src[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t col = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
          push(Tok::Int, std::string(src.substr(i, j - i)), col);
          i = j;
          continue;
        }
        if (src.compare(i, 2, "->") == 0) { push(Tok::Arrow, "->", col); i += 2; continue; }
        if (src.compare(i, 2, "..") == 0) { push(Tok::DotDot, "..", col); i += 2; continue; }
        switch (c) {
          case '(': push(Tok::LParen, "(", col); break;
          case ')': push(Tok::RParen, ")", col); break;
          case '{': push(Tok::LBrace, "{", col); break;
          case '}': push(Tok::RBrace, "}", col); break;
          case '^': push(Tok::Caret, "^", col); break;
          case '+': push(Tok::Plus, "+", col); break;
          case '-': push(Tok::Minus, "-", col); break;
          case '*': push(Tok::Star, "*", col); break;
          case ';': push(Tok::Semi, ";", col); break;
          case 'k': push(Tok::K, "k", col); break;
          default:
            syntax_error(line, static_cast<int>(col) + 1,
                         std::string("unexpected character '") + c + "'");
        }
        ++i;
      }
      out.tokens.push_back({Tok::Newline, "\\n", line, static_cast<int>(src.size()) + 1});
    }
    if (eol == text.size()) break;
    pos = eol + 1;
    ++line;
  }
  out.tokens.push_back({Tok::End, "<end>", line, 1});
  return out;
}

// ------------------------------------------------------------------ parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ProductionRule parse() {
    ProductionRule rule;
    skip_separators();
    if (peek().kind == Tok::End) syntax_error(peek().line, peek().column, "empty rule");
    while (peek().kind != Tok::End) {
      parse_clause(rule);
      const Token& t = peek();
      if (t.kind != Tok::Semi && t.kind != Tok::Newline && t.kind != Tok::End)
        syntax_error(t.line, t.column, "expected ';' or end of line, found '" + t.text + "'");
      skip_separators();
    }
    return rule;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) syntax_error(t.line, t.column, std::string("expected ") + what + ", found '" + t.text + "'");
    return next();
  }

  void skip_separators() {
    while (peek().kind == Tok::Semi || peek().kind == Tok::Newline) ++pos_;
  }

  void parse_clause(ProductionRule& rule) {
    const Token& open = expect(Tok::LParen, "'(' opening a clause guard");
    const Token& guard = next();
    Clause clause;
    expect(Tok::RParen, "')' after guard");
    expect(Tok::Arrow, "'->'");
    while (peek().kind == Tok::LParen) clause.items.push_back(parse_item());
    if (clause.items.empty()) syntax_error(peek().line, peek().column, "clause has no items");

    if (guard.kind == Tok::K) {
      if (rule.symbolic) syntax_error(open.line, open.column, "duplicate symbolic clause (k)");
      rule.symbolic = std::move(clause);
    } else if (guard.kind == Tok::Int) {
      Label k = to_int64(BigInt(guard.text), "guard label");
      if (rule.special.count(k))
        syntax_error(open.line, open.column, "duplicate clause for label " + guard.text);
      rule.special.emplace(k, std::move(clause));
    } else {
      syntax_error(guard.line, guard.column, "guard must be 'k' or an integer");
    }
  }

  ProductionItem parse_item() {
    expect(Tok::LParen, "'('");
    ProductionItem item;
    item.low = parse_expr();
    if (peek().kind == Tok::DotDot) {
      next();
      item.high = parse_expr();
    }
    expect(Tok::RParen, "')' closing an item");
    if (peek().kind == Tok::Caret) {
      const Token& caret = next();
      if (peek().kind == Tok::LBrace) {
        next();
        item.multiplicity = parse_expr();
        expect(Tok::RBrace, "'}'");
      } else {
        item.multiplicity = parse_factor();
      }
      if (item.multiplicity.is_constant() && item.multiplicity.evaluate(0) < 0)
        throw Error(ErrorKind::NegativeMultiplicity,
                    "line " + std::to_string(caret.line) + ", column " +
                        std::to_string(caret.column) + ": negative constant multiplicity");
    }
    return item;
  }

  LabelExpr parse_expr() {
    LabelExpr e = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = next().kind == Tok::Plus;
      LabelExpr rhs = parse_term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  LabelExpr parse_term() {
    LabelExpr e = parse_factor();
    while (peek().kind == Tok::Star) {
      next();
      e = e * parse_factor();
    }
    return e;
  }

  LabelExpr parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus:
        next();
        return LabelExpr::constant(-1) * parse_factor();
      case Tok::Int:
        next();
        return LabelExpr::constant(BigInt(t.text));
      case Tok::K:
        next();
        return LabelExpr::variable();
      case Tok::LParen: {
        next();
        LabelExpr e = parse_expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        syntax_error(t.line, t.column, "expected an expression, found '" + t.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string format_clause(const std::string& guard, const Clause& clause) {
  std::string out = "(" + guard + ") ->";
  out += ' ';
  for (const auto& item : clause.items) {
    out += "(" + item.low.to_string();
    if (item.high) out += ".." + item.high->to_string();
    out += ")";
    if (item.multiplicity != LabelExpr::constant(1))
      out += "^{" + item.multiplicity.to_string() + "}";
  }
  return out;
}

}  // namespace

ProductionRule parse_rule(std::string_view text) {
  Lexed lexed = lex(text);
  ProductionRule rule = Parser(std::move(lexed.tokens)).parse();
  rule.name = lexed.name;
  return rule;
}

LabelPolynomial expand_production(const ProductionRule& rule, Label label,
                                  const ExpandOptions& options) {
  const Clause* clause = nullptr;
  if (auto it = rule.special.find(label); it != rule.special.end())
    clause = &it->second;
  else if (rule.symbolic && label >= rule.symbolic_min)
    clause = &*rule.symbolic;

  if (clause == nullptr) {
    if (options.identity_scaling_fallback) return LabelPolynomial::monomial(label, label);
    throw Error(ErrorKind::UncoveredLabel,
                "no clause of rule covers label " + std::to_string(label), label);
  }

  const BigInt k = static_cast<long>(label);
  LabelPolynomial children;
  for (const auto& item : clause->items) {
    BigInt mult = item.multiplicity.evaluate(k);
    if (mult < 0)
      throw Error(ErrorKind::NegativeMultiplicity,
                  "multiplicity " + item.multiplicity.to_string() + " is " + mult.get_str() +
                      " at label " + std::to_string(label),
                  label);
    if (mult == 0) continue;
    Label lo = to_int64(item.low.evaluate(k), "child label");
    Label hi = item.high ? to_int64(item.high->evaluate(k), "child label") : lo;
    for (Label v = lo; v <= hi; ++v) {
      if (v < 0)
        throw Error(ErrorKind::NegativeLabel,
                    "child label " + std::to_string(v) + " below 0 at label " + std::to_string(label),
                    label);
      children.add_term(v, mult);
    }
  }
  return children;
}

std::string canonical_format(const ProductionRule& rule) {
  std::string out;
  for (const auto& [k, clause] : rule.special) {
    if (!out.empty()) out += "; ";
    out += format_clause(std::to_string(k), clause);
  }
  if (rule.symbolic) {
    if (!out.empty()) out += "; ";
    out += format_clause("k", *rule.symbolic);
  }
  return out;
}

std::vector<Label> consistency_violations(const ProductionRule& rule, Label from, Label to) {
  std::vector<Label> bad;
  for (Label k = from; k <= to; ++k) {
    LabelPolynomial sons;
    try {
      sons = expand_production(rule, k);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UncoveredLabel) continue;
      throw;
    }
    if (eval_at_one(sons) != static_cast<long>(k)) bad.push_back(k);
  }
  return bad;
}

}  // namespace eco
