#include "pkaeq/problem.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "pkaeq/errors.hpp"

namespace pkaeq {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_' || text[i] == '\'')) {
        ++i;
      }
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Number, std::string(text.substr(start, i - start)), start + 1});
    } else if (std::string_view("=+-^{}()./").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      ++i;
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), start + 1});
    } else {
      throw ParseError(line_no, start + 1, std::string("unexpected character '") +
                                               static_cast<char>(c) + "'");
    }
  }
  out.push_back({Tok::End, "", text.size() + 1});
  return out;
}

class Cursor {
 public:
  explicit Cursor(const Line& line) : line_(line) {}

  const Token& peek() const { return line_.tokens[pos_]; }
  const Token& next() { return line_.tokens[pos_ < line_.tokens.size() - 1 ? pos_++ : pos_]; }
  bool at_symbol(char s) const { return peek().kind == Tok::Symbol && peek().text[0] == s; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const {
    throw ParseError(line_.number, t.column, message);
  }

  void expect_symbol(char s) {
    if (!at_symbol(s)) fail(std::string("expected '") + s + "'");
    next();
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return next();
  }
  void expect_end() {
    if (!at_end()) fail("unexpected '" + peek().text + "'");
  }

  Rational rational() {
    std::string text;
    if (at_symbol('-')) {
      next();
      text = "-";
    }
    if (peek().kind != Tok::Number) fail("expected a number");
    text += next().text;
    if (at_symbol('/')) {
      next();
      if (peek().kind != Tok::Number) fail("expected a denominator");
      const Token& den = next();
      if (den.text.find_first_not_of('0') == std::string::npos) fail_at(den, "zero denominator");
      text += "/" + den.text;
    }
    return parse_rational(text);
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
};

struct Declarations {
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  std::map<std::string, Letter> letter_ids;
  std::map<std::string, StateId> state_ids;
};

StateId lookup_state(Cursor& cur, const Declarations& decl, const Token& t) {
  auto it = decl.state_ids.find(t.text);
  if (it == decl.state_ids.end()) cur.fail_at(t, "undeclared state '" + t.text + "'");
  return it->second;
}

// letter "." ident
Indeterminate pending_state(Cursor& cur, const Declarations& decl) {
  const Token& letter = cur.expect_ident("a letter");
  auto it = decl.letter_ids.find(letter.text);
  if (it == decl.letter_ids.end()) cur.fail_at(letter, "undeclared letter '" + letter.text + "'");
  cur.expect_symbol('.');
  const Token& state = cur.expect_ident("a state");
  return Indeterminate::state_at(Word{it->second}, lookup_state(cur, decl, state));
}

bool at_factor(const Cursor& cur) { return cur.peek().kind == Tok::Ident || cur.at_symbol('('); }

FreeMonomial::Factor factor(Cursor& cur, const Declarations& decl) {
  Indeterminate v;
  if (cur.at_symbol('(')) {
    cur.next();
    v = pending_state(cur, decl);
    cur.expect_symbol(')');
  } else if (cur.peek().text == "eps") {
    cur.next();
    v = Indeterminate::eps_at({});
  } else {
    v = pending_state(cur, decl);
  }
  std::uint32_t exponent = 1;
  if (cur.at_symbol('^')) {
    cur.next();
    if (cur.peek().kind != Tok::Number) cur.fail("expected an exponent");
    const Token& e = cur.next();
    if (e.text.size() > 9) cur.fail_at(e, "exponent too large");
    exponent = static_cast<std::uint32_t>(std::stoul(e.text));
  }
  return {std::move(v), exponent};
}

FreePolynomial polynomial(Cursor& cur, const Declarations& decl) {
  FreePolynomial p;
  bool negate = false;
  while (true) {
    Rational coefficient = 1;
    std::vector<FreeMonomial::Factor> factors;
    if (cur.at_symbol('-')) {
      cur.next();
      negate = !negate;
    }
    if (cur.peek().kind == Tok::Number || cur.at_symbol('-')) {
      coefficient = cur.rational();
    } else if (!at_factor(cur)) {
      cur.fail("expected a term");
    }
    while (at_factor(cur)) factors.push_back(factor(cur, decl));
    p.add_term(FreeMonomial(std::move(factors)), negate ? Rational(-coefficient) : coefficient);
    if (cur.at_symbol('+') || cur.at_symbol('-')) {
      negate = cur.next().text == "-";
      continue;
    }
    return p;
  }
}

MeasureTerm measure_term(Cursor& cur, const Declarations& decl) {
  MeasureTerm term;
  term.weight = cur.rational();
  cur.expect_symbol('{');
  while (cur.peek().kind == Tok::Ident) term.states.push_back(lookup_state(cur, decl, cur.next()));
  cur.expect_symbol('}');
  return term;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, tokenize(raw, number)};
    if (line.tokens.front().kind != Tok::End) lines.push_back(std::move(line));
  }

  // Declarations first, so transitions may refer to states declared later.
  Declarations decl;
  for (const Line& line : lines) {
    Cursor cur(line);
    const Token& head = cur.peek();
    if (head.kind != Tok::Ident) cur.fail("expected a keyword");
    if (head.text == "alphabet") {
      cur.next();
      if (cur.at_end()) cur.fail("expected at least one letter");
      while (!cur.at_end()) {
        const Token& t = cur.expect_ident("a letter");
        if (t.text.size() != 1) cur.fail_at(t, "letters must be single characters");
        if (decl.letter_ids.count(t.text)) cur.fail_at(t, "duplicate letter '" + t.text + "'");
        decl.letter_ids.emplace(t.text, static_cast<Letter>(decl.alphabet.size()));
        decl.alphabet.push_back(t.text);
      }
    } else if (head.text == "state") {
      cur.next();
      const Token& t = cur.expect_ident("a state name");
      if (t.text == "eps") cur.fail_at(t, "'eps' is reserved");
      if (decl.state_ids.count(t.text)) cur.fail_at(t, "duplicate state '" + t.text + "'");
      decl.state_ids.emplace(t.text, static_cast<StateId>(decl.states.size()));
      decl.states.push_back(t.text);
      cur.expect_end();
    } else if (head.text != "trans" && head.text != "left" && head.text != "right") {
      cur.fail("unknown keyword '" + head.text + "'");
    }
  }
  if (decl.alphabet.size() > 256) throw ParseError(1, 1, "too many letters");

  std::vector<FreePolynomial> theta(decl.states.size());
  std::vector<bool> defined(decl.states.size(), false);
  Problem problem;
  for (const Line& line : lines) {
    Cursor cur(line);
    const std::string keyword = cur.next().text;
    if (keyword == "trans") {
      const Token& name = cur.expect_ident("a state");
      const StateId s = lookup_state(cur, decl, name);
      if (defined[s]) cur.fail_at(name, "duplicate transition for '" + name.text + "'");
      defined[s] = true;
      cur.expect_symbol('=');
      theta[s] = polynomial(cur, decl);
      cur.expect_end();
    } else if (keyword == "left" || keyword == "right") {
      (keyword == "left" ? problem.left : problem.right).terms.push_back(measure_term(cur, decl));
      cur.expect_end();
    }
  }
  problem.automaton = Automaton(decl.alphabet, decl.states, std::move(theta));
  return problem;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

std::string format_theta(const Automaton& aut, const FreePolynomial& theta) {
  if (theta.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : theta.terms()) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const auto& [v, e] : m.factors()) {
      if (!body.empty()) body += " ";
      if (v.is_eps()) {
        body += "eps";
      } else {
        body += word_to_string(v.word, aut.alphabet()) + "." + aut.states().at(v.state);
      }
      if (e > 1) body += "^" + std::to_string(e);
    }
    if (body.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += to_string(mag) + " " + body;
    }
  }
  return out;
}

std::string print_problem(const Problem& problem) {
  const Automaton& aut = problem.automaton;
  std::string out = "alphabet";
  for (const auto& a : aut.alphabet()) out += " " + a;
  out += "\n";
  for (const auto& s : aut.states()) out += "state " + s + "\n";
  for (StateId s = 0; s < aut.num_states(); ++s) {
    out += "trans " + aut.states()[s] + " = " + format_theta(aut, aut.theta(s)) + "\n";
  }
  auto seed_lines = [&](const char* side, const MeasureSeed& seed) {
    for (const auto& term : seed.terms) {
      out += std::string(side) + " " + to_string(term.weight) + " {";
      for (StateId s : term.states) out += " " + aut.states().at(s);
      out += " }\n";
    }
  };
  seed_lines("left", problem.left);
  seed_lines("right", problem.right);
  return out;
}

}  // namespace pkaeq
