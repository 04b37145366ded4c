#include "folproof/proof_io.hpp"

#include <sstream>

namespace folproof {

namespace {

using text::Tok;

struct Line {
  std::string text;
  int number;
};

std::vector<Line> splitLines(std::string_view in) {
  std::vector<Line> out;
  int n = 1;
  std::size_t start = 0;
  while (start <= in.size()) {
    std::size_t end = in.find('\n', start);
    if (end == std::string_view::npos) end = in.size();
    std::string_view raw = in.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    out.push_back({std::string(raw), n++});
    start = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string firstWord(const std::string& s) {
  std::size_t i = s.find_first_not_of(" \t");
  if (i == std::string::npos) return "";
  std::size_t j = i;
  while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
  return s.substr(i, j - i);
}

std::string holeName(text::Parser& p) {
  if (p.at(Tok::Schematic) || p.at(Tok::Ident)) {
    std::string name = p.peek().text;
    p.accept(p.peek().kind);
    return name;
  }
  p.fail("expected a hole name");
}

void parseMapEntries(text::Parser& p, StepParams& out, bool formulas) {
  p.expect(Tok::LBracket, "'['");
  if (p.accept(Tok::RBracket)) return;
  do {
    bool schematic = p.at(Tok::Schematic);
    if (!schematic && !p.at(Tok::Ident)) p.fail("expected a symbol to instantiate");
    std::string name = p.peek().text;
    p.accept(p.peek().kind);
    std::vector<std::string> params;
    bool connector = false;
    if (formulas && p.accept(Tok::LBracket)) {
      connector = true;
      if (!p.accept(Tok::RBracket)) {
        do params.push_back(p.expect(Tok::Schematic, "a formula placeholder 'p").text);
        while (p.accept(Tok::Comma));
        p.expect(Tok::RBracket, "']'");
      }
    } else if (p.accept(Tok::LParen)) {
      if (!p.accept(Tok::RParen)) {
        do params.push_back(p.identifier("a parameter variable"));
        while (p.accept(Tok::Comma));
        p.expect(Tok::RParen, "')'");
      }
    }
    p.expect(Tok::Arrow, "'->'");
    if (formulas) {
      if (!schematic) p.fail("only schematic predicates and connectors can be instantiated");
      FormulaSymbol sym = connector ? schematicConnector(name, params.size()) : schematicPredicate(name, params.size());
      out.formulaMap.insert_or_assign(sym, LambdaFormula{params, p.formula()});
    } else if (!schematic) {
      if (!params.empty()) p.fail("a variable takes no parameters");
      out.varMap.insert_or_assign(name, p.term());
    } else {
      out.termMap.insert_or_assign(schematicFunction(name, params.size()), LambdaTerm{params, p.term()});
    }
  } while (p.accept(Tok::Comma));
  p.expect(Tok::RBracket, "']' or ','");
}

}  // namespace

StepParams parseParams(text::Parser& p) {
  StepParams out;
  if (p.accept(Tok::RBrace)) return out;
  do {
    if (p.at(Tok::RBrace)) break;
    std::string key = p.identifier("a parameter name");
    p.expect(Tok::Eq, "'='");
    if (key == "phi") out.phi = p.formula();
    else if (key == "psi") out.psi = p.formula();
    else if (key == "ctx") out.context = p.formula();
    else if (key == "a") out.a = p.formula();
    else if (key == "b") out.b = p.formula();
    else if (key == "s") out.s = p.term();
    else if (key == "t") out.t = p.term();
    else if (key == "x") out.x = p.identifier("a variable");
    else if (key == "hole") out.hole = holeName(p);
    else if (key == "terms") parseMapEntries(p, out, false);
    else if (key == "formulas") parseMapEntries(p, out, true);
    else throw SyntaxError("unknown parameter '" + key + "'", p.peek().span);
  } while (p.accept(Tok::Semi));
  p.expect(Tok::RBrace, "';' or '}'");
  return out;
}

namespace {

class FileParser {
 public:
  FileParser(std::string_view in, std::string file, Signature sig)
      : lines_(splitLines(in)), file_(std::move(file)), sig_(std::move(sig)) {}

  Proof top() {
    skipBlank();
    if (pos_ < lines_.size() && firstWord(lines_[pos_].text) == "folproof") {
      text::Parser p = parser(lines_[pos_]);
      p.identifier("'folproof'");
      if (p.peek().text != "v1") p.fail("unsupported proof format version");
      p.accept(Tok::Ident);
      if (!p.atEnd()) p.fail("unexpected input after version");
      ++pos_;
    }
    Proof proof = block(false);
    skipBlank();
    if (pos_ < lines_.size()) error(lines_[pos_], "unexpected line after the proof");
    return proof;
  }

 private:
  std::vector<Line> lines_;
  std::string file_;
  Signature sig_;
  std::size_t pos_ = 0;

  text::Parser parser(const Line& l) { return text::Parser(text::lex(l.text, file_, l.number), sig_); }

  [[noreturn]] void error(const Line& l, const std::string& message) {
    throw SyntaxError(message, SourceSpan{file_, l.number, 1, static_cast<int>(l.text.size())});
  }

  void skipBlank() {
    while (pos_ < lines_.size() && blank(lines_[pos_].text)) ++pos_;
  }

  Proof block(bool nested) {
    Proof proof;
    for (;;) {
      skipBlank();
      if (pos_ >= lines_.size()) {
        if (nested) error(lines_.back(), "missing 'end' for subproof");
        break;
      }
      const Line& l = lines_[pos_];
      std::string word = firstWord(l.text);
      if (word == "end") {
        if (!nested) error(l, "'end' without 'begin'");
        ++pos_;
        break;
      }
      if (word == "const") {
        text::Parser p = parser(l);
        p.identifier("'const'");
        while (p.at(Tok::Ident)) sig_.constants.insert(p.identifier("a name"));
        if (!p.atEnd()) p.fail("expected constant names");
        ++pos_;
        continue;
      }
      if (word == "import") {
        text::Parser p = parser(l);
        p.identifier("'import'");
        long k = p.integer();
        if (!proof.steps.empty()) error(l, "imports must precede the steps");
        if (k != -1 - static_cast<long>(proof.imports.size()))
          throw IndexGap("expected import " + std::to_string(-1 - static_cast<long>(proof.imports.size())),
                         SourceSpan{file_, l.number, 1, static_cast<int>(l.text.size())});
        p.expect(Tok::Colon, "':'");
        proof.imports.push_back(p.sequent());
        if (!p.atEnd()) p.fail("unexpected input after sequent");
        ++pos_;
        continue;
      }
      proof.steps.push_back(step(l, static_cast<int>(proof.steps.size())));
      ++pos_;
      if (proof.steps.back().rule == Rule::Subproof) {
        skipBlank();
        if (pos_ >= lines_.size() || firstWord(lines_[pos_].text) != "begin")
          error(pos_ < lines_.size() ? lines_[pos_] : l, "expected 'begin' after a Subproof step");
        ++pos_;
        proof.steps.back().params.inner = std::make_shared<Proof>(block(true));
      }
    }
    return proof;
  }

  ProofStep step(const Line& l, int expected) {
    text::Parser p = parser(l);
    const text::Token number = p.peek();
    long n = p.integer();
    if (n != expected)
      throw IndexGap("expected step " + std::to_string(expected) + ", found " + std::to_string(n), number.span);
    p.expect(Tok::Dot, "'.' after the step number");
    const text::Token name = p.peek();
    std::string ruleText = p.identifier("a rule name");
    auto rule = ruleFromName(ruleText);
    if (!rule) throw SyntaxError("unknown rule '" + ruleText + "'", name.span);
    ProofStep s;
    s.rule = *rule;
    s.line = l.number;
    p.expect(Tok::LParen, "'('");
    if (!p.accept(Tok::RParen)) {
      do s.premises.push_back(static_cast<int>(p.integer()));
      while (p.accept(Tok::Comma));
      p.expect(Tok::RParen, "')'");
    }
    if (p.accept(Tok::LBrace)) s.params = parseParams(p);
    p.expect(Tok::Colon, "':' before the conclusion");
    s.conclusion = p.sequent();
    if (!p.atEnd()) p.fail("unexpected input after sequent");
    return s;
  }
};

void nullaryConstants(const Term& t, std::set<std::string>& out) {
  if (t.isBound()) return;
  if (t.symbol().kind == TermKind::ConstantFunction && t.args().empty()) out.insert(t.symbol().name);
  for (const Term& a : t.args()) nullaryConstants(a, out);
}

void nullaryConstants(const Formula& f, std::set<std::string>& out) {
  std::set<TermSymbol> terms;
  std::set<FormulaSymbol> formulas;
  collectSymbols(f, terms, formulas);
  for (const TermSymbol& s : terms)
    if (s.kind == TermKind::ConstantFunction && s.arity == 0) out.insert(s.name);
}

void nullaryConstants(const Proof& proof, std::set<std::string>& out) {
  auto seq = [&](const Sequent& s) {
    for (const auto* side : {&s.left(), &s.right()})
      for (const Formula& f : *side) nullaryConstants(f, out);
  };
  for (const Sequent& s : proof.imports) seq(s);
  for (const ProofStep& st : proof.steps) {
    seq(st.conclusion);
    const StepParams& q = st.params;
    for (const auto* f : {&q.phi, &q.psi, &q.context, &q.a, &q.b})
      if (*f) nullaryConstants(**f, out);
    for (const auto* t : {&q.s, &q.t})
      if (*t) nullaryConstants(**t, out);
    for (const auto& [sym, lam] : q.termMap) nullaryConstants(lam.body, out);
    for (const auto& [sym, lam] : q.formulaMap) nullaryConstants(lam.body, out);
    for (const auto& [name, t] : q.varMap) nullaryConstants(t, out);
    if (q.inner) nullaryConstants(*q.inner, out);
  }
}

std::string joinParams(const std::vector<std::string>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + ps[i];
  return out;
}

void printBlock(const Proof& proof, const std::string& indent, std::string& out) {
  for (std::size_t k = 0; k < proof.imports.size(); ++k)
    out += indent + "import " + std::to_string(-1 - static_cast<int>(k)) + " : " + printSequent(proof.imports[k]) + "\n";
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    out += indent + printStep(static_cast<int>(i), proof.steps[i]) + "\n";
    if (proof.steps[i].rule == Rule::Subproof && proof.steps[i].params.inner) {
      out += indent + "begin\n";
      printBlock(*proof.steps[i].params.inner, indent + "  ", out);
      out += indent + "end\n";
    }
  }
}

}  // namespace

Proof parseProofFile(std::string_view in, const std::string& file, Signature sig) {
  return FileParser(in, file, std::move(sig)).top();
}

std::string printParams(const StepParams& q) {
  std::vector<std::string> parts;
  if (q.phi) parts.push_back("phi=" + printFormula(*q.phi));
  if (q.psi) parts.push_back("psi=" + printFormula(*q.psi));
  if (q.x) parts.push_back("x=" + *q.x);
  if (q.hole) parts.push_back("hole='" + *q.hole);
  if (q.context) parts.push_back("ctx=" + printFormula(*q.context));
  if (q.s) parts.push_back("s=" + printTerm(*q.s));
  if (q.t) parts.push_back("t=" + printTerm(*q.t));
  if (q.a) parts.push_back("a=" + printFormula(*q.a));
  if (q.b) parts.push_back("b=" + printFormula(*q.b));
  if (!q.varMap.empty() || !q.termMap.empty()) {
    std::vector<std::string> entries;
    for (const auto& [name, t] : q.varMap) entries.push_back(name + " -> " + printTerm(t));
    for (const auto& [sym, lam] : q.termMap) {
      std::string lhs = "'" + sym.name;
      if (!lam.params.empty()) lhs += "(" + joinParams(lam.params) + ")";
      entries.push_back(lhs + " -> " + printTerm(lam.body));
    }
    parts.push_back("terms=[" + joinParams(entries) + "]");
  }
  if (!q.formulaMap.empty()) {
    std::vector<std::string> entries;
    for (const auto& [sym, lam] : q.formulaMap) {
      std::string lhs = "'" + sym.name;
      if (sym.kind == FormulaKind::SchematicConnector) {
        std::vector<std::string> ps;
        for (const std::string& p : lam.params) ps.push_back("'" + p);
        lhs += "[" + joinParams(ps) + "]";
      } else if (!lam.params.empty()) {
        lhs += "(" + joinParams(lam.params) + ")";
      }
      entries.push_back(lhs + " -> " + printFormula(lam.body));
    }
    parts.push_back("formulas=[" + joinParams(entries) + "]");
  }
  if (parts.empty()) return "";
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out + "}";
}

std::string printStep(int index, const ProofStep& s) {
  std::string out = std::to_string(index) + ". " + std::string(ruleName(s.rule)) + "(";
  for (std::size_t i = 0; i < s.premises.size(); ++i) out += (i ? ", " : "") + std::to_string(s.premises[i]);
  out += ")";
  std::string params = printParams(s.params);
  if (!params.empty()) out += " " + params;
  return out + " : " + printSequent(s.conclusion);
}

std::string printProof(const Proof& proof) {
  std::string out = "folproof v1\n";
  std::set<std::string> constants;
  nullaryConstants(proof, constants);
  if (!constants.empty()) {
    out += "const";
    for (const std::string& c : constants) out += " " + c;
    out += "\n";
  }
  printBlock(proof, "", out);
  return out;
}

}  // namespace folproof
