#include "mvlogic/parser.hpp"

#include <cctype>
#include <sstream>

#include "mvlogic/error.hpp"

namespace mvlogic {

namespace {

// Unicode glyphs accepted as aliases for the ASCII spellings. The
// canonical printer always emits ASCII.
struct GlyphAlias {
  const char* utf8;
  const char* ascii;
};

constexpr GlyphAlias kGlyphAliases[] = {
    {"¬", "not"},      // negation sign
    {"∧", "and"},      // logical and
    {"∨", "or"},       // logical or
    {"→", "then"},     // rightwards arrow
    {"\U0001d533", "v"},    // fraktur v
    {"\U0001d517", "T"},    // fraktur T
    {"\U0001d509", "F"},    // fraktur F
};

enum class TokKind { Ident, LParen, RParen, Comma, Equals, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t offset = 0;
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    std::ostringstream os;
    os << message << " at offset " << offset;
    throw Error(Errc::syntax, os.str(), offset);
  }

  [[noreturn]] void fail_here(const std::string& message) const {
    fail(message, current_.offset);
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = TokKind::End;
      current_.text.clear();
      return;
    }

    for (const auto& alias : kGlyphAliases) {
      const std::size_t len = std::char_traits<char>::length(alias.utf8);
      if (text_.compare(pos_, len, alias.utf8) == 0) {
        current_.kind = TokKind::Ident;
        current_.text = alias.ascii;
        pos_ += len;
        return;
      }
    }

    const char c = text_[pos_];
    switch (c) {
    case '(':
      current_ = {TokKind::LParen, "(", pos_++};
      return;
    case ')':
      current_ = {TokKind::RParen, ")", pos_++};
      return;
    case ',':
      current_ = {TokKind::Comma, ",", pos_++};
      return;
    case '=':
      current_ = {TokKind::Equals, "=", pos_++};
      return;
    default:
      break;
    }

    if (is_ident_start(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      current_.kind = TokKind::Ident;
      current_.text = text_.substr(start, pos_ - start);
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_;
};

class FormulaParser {
public:
  FormulaParser(const std::string& text, const LogicSystem& system)
      : lexer_(text), system_(system) {}

  Formula parse_full_formula() {
    Formula f = parse_formula();
    expect_end();
    return f;
  }

  PremiseAssertion parse_full_premise() {
    PremiseAssertion p = parse_assertion();
    expect_end();
    return p;
  }

  PremiseExpr parse_full_premise_expr() {
    PremiseExpr e = parse_premise_expr();
    expect_end();
    return e;
  }

private:
  Formula parse_formula() {
    const Token& tok = lexer_.peek();
    if (tok.kind == TokKind::LParen) {
      lexer_.take();
      Formula left = parse_formula();
      Token op = expect_ident("an infix connective");
      if (!system_.has_connective(op.text)) {
        throw Error(Errc::unknown_connective,
                    "unknown connective '" + op.text + "' at offset " + std::to_string(op.offset),
                    op.offset);
      }
      if (system_.connective(op.text).arity() != 2) {
        throw Error(Errc::arity_mismatch,
                    "connective '" + op.text + "' is not binary; infix form needs arity 2",
                    op.offset);
      }
      Formula right = parse_formula();
      expect(TokKind::RParen, "')'");
      return Formula::apply(op.text, {std::move(left), std::move(right)});
    }
    if (tok.kind == TokKind::Ident) {
      Token name = lexer_.take();
      const bool is_connective = system_.has_connective(name.text);
      if (lexer_.peek().kind == TokKind::LParen) {
        if (!is_connective) {
          throw Error(Errc::unknown_connective,
                      "unknown connective '" + name.text + "' at offset " +
                          std::to_string(name.offset),
                      name.offset);
        }
        const std::size_t arity = system_.connective(name.text).arity();
        lexer_.take();
        std::vector<Formula> args;
        args.push_back(parse_formula());
        // `u (x op y)` is a unary prefix applied to a parenthesized group,
        // not a malformed call; an infix continuation after the first
        // element decides between the two readings.
        if (arity == 1 && lexer_.peek().kind == TokKind::Ident &&
            system_.has_connective(lexer_.peek().text) &&
            system_.connective(lexer_.peek().text).arity() == 2) {
          Token op = lexer_.take();
          Formula right = parse_formula();
          expect(TokKind::RParen, "')'");
          return Formula::apply(name.text,
                                {Formula::apply(op.text, {std::move(args[0]), std::move(right)})});
        }
        while (lexer_.peek().kind == TokKind::Comma) {
          lexer_.take();
          args.push_back(parse_formula());
        }
        expect(TokKind::RParen, "')'");
        if (args.size() != arity) {
          throw Error(Errc::arity_mismatch,
                      "connective '" + name.text + "' expects " + std::to_string(arity) +
                          " arguments, got " + std::to_string(args.size()),
                      name.offset);
        }
        return Formula::apply(name.text, std::move(args));
      }
      if (is_connective) {
        const std::size_t arity = system_.connective(name.text).arity();
        if (arity != 1) {
          throw Error(Errc::arity_mismatch,
                      "connective '" + name.text +
                          "' is not unary; write it infix inside parentheses",
                      name.offset);
        }
        Formula child = parse_formula();
        return Formula::apply(name.text, {std::move(child)});
      }
      return Formula::atom(name.text);
    }
    lexer_.fail_here("expected a formula");
  }

  PremiseExpr parse_premise_expr() {
    const Token& tok = lexer_.peek();
    if (tok.kind == TokKind::Ident && (tok.text == "all" || tok.text == "any")) {
      Token head = lexer_.take();
      expect(TokKind::LParen, "'('");
      std::vector<PremiseExpr> children;
      children.push_back(parse_premise_expr());
      while (lexer_.peek().kind == TokKind::Comma) {
        lexer_.take();
        children.push_back(parse_premise_expr());
      }
      expect(TokKind::RParen, "')'");
      return head.text == "all" ? PremiseExpr::all(std::move(children))
                                : PremiseExpr::any(std::move(children));
    }
    return PremiseExpr::leaf(parse_assertion());
  }

  PremiseAssertion parse_assertion() {
    Token head = expect_ident("'v'");
    if (head.text != "v") {
      lexer_.fail("expected 'v'", head.offset);
    }
    expect(TokKind::LParen, "'('");

    Token subject = expect_ident("'I' or 'V'");
    PremiseAssertion assertion;
    if (subject.text == "I") {
      assertion.kind = PremiseAssertion::SubjectKind::InterpOf;
      expect(TokKind::LParen, "'('");
      Token atom = expect_ident("an atom");
      if (system_.has_connective(atom.text)) {
        lexer_.fail("expected an atom, got connective '" + atom.text + "'", atom.offset);
      }
      assertion.atom = atom.text;
      expect(TokKind::RParen, "')'");
    } else if (subject.text == "V" || subject.text == "V_I") {
      assertion.kind = PremiseAssertion::SubjectKind::ValuationOf;
      expect(TokKind::LParen, "'('");
      assertion.formula = parse_formula();
      expect(TokKind::RParen, "')'");
    } else {
      lexer_.fail("expected 'I' or 'V'", subject.offset);
    }

    expect(TokKind::Comma, "','");
    Token target = expect_ident("a truth value");
    expect(TokKind::RParen, "')'");
    expect(TokKind::Equals, "'='");
    Token meta = expect_ident("'T' or 'F'");
    if (meta.text == "T") {
      assertion.claimed = MetaTruth::True;
    } else if (meta.text == "F") {
      assertion.claimed = MetaTruth::False;
    } else {
      lexer_.fail("expected 'T' or 'F'", meta.offset);
    }

    const DomainRef& domain = assertion.kind == PremiseAssertion::SubjectKind::InterpOf
                                  ? system_.interp_domain()
                                  : system_.valuation_domain();
    if (!domain->contains(target.text)) {
      throw Error(Errc::domain_mismatch,
                  "'" + target.text + "' is not a value of domain '" + domain->name() +
                      "' at offset " + std::to_string(target.offset),
                  target.offset);
    }
    assertion.target = target.text;
    return assertion;
  }

  Token expect(TokKind kind, const std::string& what) {
    if (lexer_.peek().kind != kind) {
      lexer_.fail_here(lexer_.peek().kind == TokKind::End ? "expected " + what + ", got end of input"
                                                          : "expected " + what);
    }
    return lexer_.take();
  }

  Token expect_ident(const std::string& what) {
    if (lexer_.peek().kind != TokKind::Ident) {
      lexer_.fail_here(lexer_.peek().kind == TokKind::End ? "expected " + what + ", got end of input"
                                                          : "expected " + what);
    }
    return lexer_.take();
  }

  void expect_end() {
    if (lexer_.peek().kind != TokKind::End) {
      lexer_.fail_here("unexpected trailing input");
    }
  }

  Lexer lexer_;
  const LogicSystem& system_;
};

} // namespace

Formula parse_formula(const std::string& text, const LogicSystem& system) {
  if (text.empty()) {
    throw Error(Errc::syntax, "empty formula", 0);
  }
  return FormulaParser(text, system).parse_full_formula();
}

std::string print_formula(const Formula& formula) {
  if (formula.is_atom()) {
    return formula.atom_id();
  }
  const auto& args = formula.args();
  if (args.size() == 1) {
    return formula.connective() + " " + print_formula(args[0]);
  }
  if (args.size() == 2) {
    return "(" + print_formula(args[0]) + " " + formula.connective() + " " +
           print_formula(args[1]) + ")";
  }
  std::string out = formula.connective() + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += print_formula(args[i]);
  }
  return out + ")";
}

PremiseAssertion parse_premise(const std::string& text, const LogicSystem& system) {
  return FormulaParser(text, system).parse_full_premise();
}

std::string print_premise(const PremiseAssertion& assertion) {
  std::string subject = assertion.kind == PremiseAssertion::SubjectKind::InterpOf
                            ? "I(" + assertion.atom + ")"
                            : "V(" + print_formula(*assertion.formula) + ")";
  return "v(" + subject + ", " + assertion.target + ") = " + to_string(assertion.claimed);
}

PremiseExpr parse_premise_expr(const std::string& text, const LogicSystem& system) {
  return FormulaParser(text, system).parse_full_premise_expr();
}

std::string print_premise_expr(const PremiseExpr& expr) {
  switch (expr.kind()) {
  case PremiseExpr::Kind::Leaf:
    return print_premise(expr.assertion());
  case PremiseExpr::Kind::All:
  case PremiseExpr::Kind::Any: {
    std::string out = expr.kind() == PremiseExpr::Kind::All ? "all(" : "any(";
    const auto& children = expr.children();
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += print_premise_expr(children[i]);
    }
    return out + ")";
  }
  }
  return {};
}

} // namespace mvlogic
