#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folproof/sequent.hpp"
#include "folproof/syntax.hpp"

namespace folproof {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Names that denote arity-0 constant function symbols. Any other bare
// lowercase name in term position is a variable.
struct Signature {
  std::set<std::string> constants;
};

Term parseTerm(std::string_view text, const Signature& sig = {});
Formula parseFormula(std::string_view text, const Signature& sig = {});
Sequent parseSequent(std::string_view text, const Signature& sig = {});

std::string printTerm(const Term& t);
std::string printFormula(const Formula& f);
std::string printSequent(const Sequent& s);

// Token-level parser shared by the proof file and script readers.
namespace text {

enum class Tok {
  End, Ident, Schematic, Int,
  Not, And, Or, Implies, Iff, Eq, Neq, Turnstile,
  Forall, Exists, ExistsOne, Top, Bot,
  Semi, Comma, LParen, RParen, LBracket, RBracket, LBrace, RBrace, Dot, Colon, Arrow, Minus,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view text, const std::string& file = "<input>", int line = 1);

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Signature& sig) : toks_(std::move(tokens)), sig_(sig) {}

  const Token& peek(std::size_t ahead = 0) const;
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k);
  const Token& expect(Tok k, const char* what);
  [[noreturn]] void fail(const std::string& message) const;
  bool atEnd() const { return at(Tok::End); }
  std::size_t position() const { return pos_; }
  void reset(std::size_t pos) { pos_ = pos; }

  Term term();
  Formula formula();
  Sequent sequent();
  std::vector<Formula> formulaList();
  long integer();
  std::string identifier(const char* what);

 private:
  Formula iff();
  Formula implies();
  Formula disj();
  Formula conj();
  Formula unary();
  Formula primary();
  Term termFrom(const Token& head);

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace text

}  // namespace folproof
