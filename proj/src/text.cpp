#include "folproof/text.hpp"

#include <cctype>
#include <cstring>

namespace folproof {
namespace text {

namespace {

struct Spelling {
  const char* text;
  Tok kind;
};

// Longest spellings first so that prefixes do not win.
constexpr Spelling kSymbols[] = {
    {"<=>", Tok::Iff}, {"\xE2\x88\x83!", Tok::ExistsOne},
    {"/\\", Tok::And}, {"\\/", Tok::Or}, {"=>", Tok::Implies}, {"|-", Tok::Turnstile}, {"!=", Tok::Neq},
    {"->", Tok::Arrow},
    {"\xC2\xAC", Tok::Not},          // ¬
    {"\xE2\x88\xA7", Tok::And},      // ∧
    {"\xE2\x88\xA8", Tok::Or},       // ∨
    {"\xE2\x86\x92", Tok::Implies},  // →
    {"\xE2\x87\x92", Tok::Implies},  // ⇒
    {"\xE2\x86\x94", Tok::Iff},      // ↔
    {"\xE2\x87\x94", Tok::Iff},      // ⇔
    {"\xE2\x8A\xA2", Tok::Turnstile},// ⊢
    {"\xE2\x88\x80", Tok::Forall},   // ∀
    {"\xE2\x88\x83", Tok::Exists},   // ∃
    {"\xE2\x8A\xA4", Tok::Top},      // ⊤
    {"\xE2\x8A\xA5", Tok::Bot},      // ⊥
    {"\xE2\x89\xA0", Tok::Neq},      // ≠
    {"~", Tok::Not}, {"=", Tok::Eq}, {";", Tok::Semi}, {",", Tok::Comma}, {"(", Tok::LParen},
    {")", Tok::RParen}, {"[", Tok::LBracket}, {"]", Tok::RBracket}, {"{", Tok::LBrace}, {"}", Tok::RBrace},
    {".", Tok::Dot}, {":", Tok::Colon}, {"-", Tok::Minus},
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> lex(std::string_view in, const std::string& file, int line) {
  std::vector<Token> out;
  int col = 1;
  std::size_t i = 0;
  auto span = [&](int length) { return SourceSpan{file, line, col, length}; };
  while (i < in.size()) {
    char c = in[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < in.size() && in[i] != '\n') ++i;
      continue;
    }
    if (c == '\'' || identStart(c)) {
      std::size_t start = i;
      if (c == '\'') ++i;
      if (i >= in.size() || !identStart(in[i]))
        throw SyntaxError("expected a name after '''", span(1));
      while (i < in.size() && identChar(in[i])) ++i;
      std::string word(in.substr(start, i - start));
      Tok kind = Tok::Ident;
      if (c == '\'') {
        kind = Tok::Schematic;
        word.erase(0, 1);
      } else if (word == "forall") {
        kind = Tok::Forall;
      } else if (word == "exists") {
        kind = Tok::Exists;
      } else if (word == "existsone") {
        kind = Tok::ExistsOne;
      } else if (word == "top") {
        kind = Tok::Top;
      } else if (word == "bot") {
        kind = Tok::Bot;
      }
      int len = static_cast<int>(i - start);
      out.push_back({kind, std::move(word), span(len)});
      col += len;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i]))) ++i;
      int len = static_cast<int>(i - start);
      out.push_back({Tok::Int, std::string(in.substr(start, i - start)), span(len)});
      col += len;
      continue;
    }
    bool matched = false;
    for (const Spelling& s : kSymbols) {
      std::size_t n = std::strlen(s.text);
      if (in.substr(i, n) == s.text) {
        out.push_back({s.kind, s.text, span(1)});
        i += n;
        ++col;
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(std::string("unexpected character '") + c + "'", span(1));
  }
  out.push_back({Tok::End, "", span(0)});
  return out;
}

// ---------------------------------------------------------------------------

const Token& Parser::peek(std::size_t ahead) const {
  std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
  return toks_[i];
}

bool Parser::accept(Tok k) {
  if (!at(k)) return false;
  ++pos_;
  return true;
}

void Parser::fail(const std::string& message) const {
  const Token& t = peek();
  std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw SyntaxError(message + ", found " + found, t.span);
}

const Token& Parser::expect(Tok k, const char* what) {
  if (!at(k)) fail(std::string("expected ") + what);
  return toks_[pos_++];
}

long Parser::integer() {
  bool negative = accept(Tok::Minus);
  const Token& t = expect(Tok::Int, "an integer");
  long v = std::stol(t.text);
  return negative ? -v : v;
}

std::string Parser::identifier(const char* what) { return expect(Tok::Ident, what).text; }

Term Parser::termFrom(const Token& head) {
  std::vector<Term> args;
  bool parens = false;
  if (accept(Tok::LParen)) {
    parens = true;
    if (!accept(Tok::RParen)) {
      for (;;) {
        args.push_back(term());
        if (!at(Tok::Comma)) break;
        if (peek(1).kind == Tok::RParen) throw SyntaxError("dangling ',' in argument list", peek().span);
        ++pos_;
      }
      expect(Tok::RParen, "')' or ','");
    }
  }
  std::size_t n = args.size();
  if (head.kind == Tok::Schematic) return Term::apply(schematicFunction(head.text, n), std::move(args));
  if (parens || sig_.constants.contains(head.text)) return Term::apply(constantFunction(head.text, n), std::move(args));
  return Term::variable(head.text);
}

Term Parser::term() {
  if (!at(Tok::Ident) && !at(Tok::Schematic)) fail("expected a term");
  const Token& head = toks_[pos_++];
  return termFrom(head);
}

Formula Parser::formula() { return iff(); }

Formula Parser::iff() {
  Formula lhs = implies();
  if (accept(Tok::Iff)) return Formula::equivalence(lhs, iff());
  return lhs;
}

Formula Parser::implies() {
  Formula lhs = disj();
  if (accept(Tok::Implies)) return Formula::implication(lhs, implies());
  return lhs;
}

Formula Parser::disj() {
  Formula lhs = conj();
  if (accept(Tok::Or)) return Formula::disjunction(lhs, disj());
  return lhs;
}

Formula Parser::conj() {
  Formula lhs = unary();
  if (accept(Tok::And)) return Formula::conjunction(lhs, conj());
  return lhs;
}

Formula Parser::unary() {
  if (accept(Tok::Not)) return Formula::negation(unary());
  if (at(Tok::Forall) || at(Tok::Exists) || at(Tok::ExistsOne)) {
    Tok q = toks_[pos_++].kind;
    std::vector<std::string> vars;
    do vars.push_back(identifier("a bound variable"));
    while (accept(Tok::Comma) || at(Tok::Ident));
    expect(Tok::Dot, "'.' after bound variables");
    Formula body = formula();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      if (q == Tok::Forall) body = Formula::forall(*it, body);
      else if (q == Tok::Exists) body = Formula::exists(*it, body);
      else body = Formula::existsOne(*it, body);
    }
    return body;
  }
  return primary();
}

Formula Parser::primary() {
  if (accept(Tok::Top)) return Formula::top();
  if (accept(Tok::Bot)) return Formula::bottom();
  if (accept(Tok::LParen)) {
    Formula f = formula();
    expect(Tok::RParen, "')'");
    return f;
  }
  if (at(Tok::Schematic) && peek(1).kind == Tok::LBracket) {
    std::string name = toks_[pos_].text;
    pos_ += 2;
    std::vector<Formula> ops;
    if (!accept(Tok::RBracket)) {
      do ops.push_back(formula());
      while (accept(Tok::Comma));
      expect(Tok::RBracket, "']' or ','");
    }
    std::size_t n = ops.size();
    return Formula::schematic(schematicConnector(name, n), std::move(ops));
  }
  if (!at(Tok::Ident) && !at(Tok::Schematic)) fail("expected a formula");
  const Token head = toks_[pos_++];
  Term t = termFrom(head);
  if (accept(Tok::Eq)) return Formula::equality(t, term());
  if (accept(Tok::Neq)) return Formula::negation(Formula::equality(t, term()));
  std::vector<Term> args(t.args().begin(), t.args().end());
  FormulaSymbol sym = head.kind == Tok::Schematic ? schematicPredicate(head.text, args.size())
                                                  : constantPredicate(head.text, args.size());
  return Formula::predicate(std::move(sym), std::move(args));
}

namespace {

bool startsFormula(Tok k) {
  switch (k) {
    case Tok::Not: case Tok::Forall: case Tok::Exists: case Tok::ExistsOne: case Tok::Top:
    case Tok::Bot: case Tok::LParen: case Tok::Ident: case Tok::Schematic:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<Formula> Parser::formulaList() {
  std::vector<Formula> out;
  if (!startsFormula(peek().kind)) return out;
  do out.push_back(formula());
  while (accept(Tok::Semi));
  return out;
}

Sequent Parser::sequent() {
  std::vector<Formula> left = formulaList();
  expect(Tok::Turnstile, "'|-'");
  std::vector<Formula> right = formulaList();
  return Sequent(std::move(left), std::move(right));
}

}  // namespace text

namespace {

template <typename T, typename Fn>
T parseAll(std::string_view in, const Signature& sig, Fn&& fn) {
  text::Parser p(text::lex(in), sig);
  T value = fn(p);
  if (!p.atEnd()) p.fail("unexpected trailing input");
  return value;
}

}  // namespace

Term parseTerm(std::string_view in, const Signature& sig) {
  return parseAll<Term>(in, sig, [](text::Parser& p) { return p.term(); });
}
Formula parseFormula(std::string_view in, const Signature& sig) {
  return parseAll<Formula>(in, sig, [](text::Parser& p) { return p.formula(); });
}
Sequent parseSequent(std::string_view in, const Signature& sig) {
  return parseAll<Sequent>(in, sig, [](text::Parser& p) { return p.sequent(); });
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kBinder = 0, kIff = 1, kImplies = 2, kOr = 3, kAnd = 4, kNot = 5, kAtom = 6 };

class Printer {
 public:
  explicit Printer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  void term(const Term& t, std::string& out) {
    if (t.isBound()) {
      out += names_[names_.size() - 1 - t.boundIndex()];
      return;
    }
    const TermSymbol& s = t.symbol();
    if (s.kind == TermKind::SchematicFunction) out += '\'';
    out += s.name;
    // Nullary constants print bare; readers need them in their signature.
    if (t.args().empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      term(t.args()[i], out);
    }
    out += ')';
  }

  void formula(const Formula& f, int need, bool rightmost, std::string& out) {
    int own = precedence(f);
    bool wrap = f.isBinder() ? !rightmost : own < need;
    if (wrap) {
      out += '(';
      rightmost = true;
    }
    switch (f.tag()) {
      case Formula::Tag::Predicate: predicate(f, out); break;
      case Formula::Tag::Connector: connector(f, rightmost, out); break;
      case Formula::Tag::Binder: {
        std::string name = pick(f.boundName());
        out += f.quantifier() == Quantifier::Forall ? "forall " : "exists ";
        out += name;
        out += ". ";
        names_.push_back(name);
        formula(f.body(), kBinder, true, out);
        names_.pop_back();
        break;
      }
    }
    if (wrap) out += ')';
  }

 private:
  static int precedence(const Formula& f) {
    if (f.isBinder()) return kBinder;
    if (f.isPredicate()) return kAtom;
    switch (f.connective()) {
      case Connective::Not: return kNot;
      case Connective::And: return kAnd;
      case Connective::Or: return kOr;
      case Connective::Implies: return kImplies;
      case Connective::Iff: return kIff;
      case Connective::Schematic: return kAtom;
    }
    return kAtom;
  }

  void predicate(const Formula& f, std::string& out) {
    if (f.isTop()) {
      out += "top";
      return;
    }
    if (f.isBottom()) {
      out += "bot";
      return;
    }
    if (f.isEquality()) {
      term(f.terms()[0], out);
      out += " = ";
      term(f.terms()[1], out);
      return;
    }
    if (f.symbol().kind == FormulaKind::SchematicPredicate) out += '\'';
    out += f.symbol().name;
    if (f.terms().empty()) return;
    out += '(';
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      if (i) out += ", ";
      term(f.terms()[i], out);
    }
    out += ')';
  }

  void connector(const Formula& f, bool rightmost, std::string& out) {
    auto ops = f.operands();
    if (f.connective() == Connective::Schematic) {
      out += '\'';
      out += f.symbol().name;
      out += '[';
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ", ";
        formula(ops[i], kBinder, true, out);
      }
      out += ']';
      return;
    }
    if (f.connective() == Connective::Not) {
      out += '~';
      formula(ops[0], kNot, rightmost, out);
      return;
    }
    int p = precedence(f);
    const char* sym = p == kAnd ? " /\\ " : p == kOr ? " \\/ " : p == kImplies ? " => " : " <=> ";
    formula(ops[0], p + 1, false, out);
    out += sym;
    formula(ops[1], p, rightmost, out);
  }

  std::string pick(const std::string& hint) {
    std::set<std::string> avoid = taken_;
    avoid.insert(names_.begin(), names_.end());
    return freshName(hint, avoid);
  }

  std::set<std::string> taken_;
  std::vector<std::string> names_;
};

}  // namespace

std::string printTerm(const Term& t) {
  std::string out;
  Printer({}).term(t, out);
  return out;
}

std::string printFormula(const Formula& f) {
  std::set<std::string> taken;
  collectNames(f, taken);
  std::string out;
  Printer(std::move(taken)).formula(f, kBinder, true, out);
  return out;
}

std::string printSequent(const Sequent& s) {
  std::string out;
  auto side = [&](const std::vector<Formula>& fs) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += "; ";
      out += printFormula(fs[i]);
    }
  };
  side(s.left());
  out += s.left().empty() ? "|-" : " |-";
  if (!s.right().empty()) out += ' ';
  side(s.right());
  return out;
}

}  // namespace folproof
