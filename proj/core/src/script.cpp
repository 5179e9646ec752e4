#include "catenary/script.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace catenary {

const char* to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::lexical: return "lexical";
    case ParseErrorCode::syntax: return "syntax";
    case ParseErrorCode::no_ring: return "no-ring";
    case ParseErrorCode::undeclared_identifier: return "undeclared-identifier";
    case ParseErrorCode::unknown_variable: return "unknown-variable";
    case ParseErrorCode::ring_mismatch: return "ring-mismatch";
    case ParseErrorCode::invalid_field: return "invalid-field";
    case ParseErrorCode::invalid_family: return "invalid-family";
  }
  return "?";
}

const char* to_string(CommandKind kind) {
  switch (kind) {
    case CommandKind::analyze: return "analyze";
    case CommandKind::profile: return "profile";
    case CommandKind::poset: return "poset";
    case CommandKind::chain: return "chain";
    case CommandKind::family: return "family";
  }
  return "?";
}

namespace {

std::string format_message(ParseErrorCode code, SourcePos pos, const std::string& message,
                           const std::vector<std::string>& expected) {
  std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
                  to_string(code) + " error: " + message;
  if (!expected.empty()) {
    s += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += i + 1 == expected.size() ? " or " : ", ";
      s += expected[i];
    }
    s += ")";
  }
  return s;
}

}  // namespace

ParseError::ParseError(ParseErrorCode code, SourcePos pos, std::string message,
                       std::vector<std::string> expected)
    : Error(ErrorKind::parse, format_message(code, pos, message, expected)),
      code_(code),
      pos_(pos),
      expected_(std::move(expected)) {}

std::vector<const Command*> Script::commands() const {
  std::vector<const Command*> out;
  for (const auto& s : statements) {
    if (const auto* c = std::get_if<Command>(&s)) out.push_back(c);
  }
  return out;
}

namespace {

enum class Tok { ident, integer, symbol, end };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::ident: return "identifier '" + t.text + "'";
    case Tok::integer: return "integer " + t.text;
    case Tok::symbol: return "'" + t.text + "'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        s += text[i];
        advance();
      }
      out.push_back({Tok::ident, std::move(s), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        s += text[i];
        advance();
      }
      out.push_back({Tok::integer, std::move(s), start});
      continue;
    }
    static constexpr std::string_view symbols = "()[],=+-*/^;";
    if (symbols.find(c) != std::string_view::npos) {
      out.push_back({Tok::symbol, std::string(1, c), start});
      advance();
      continue;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "byte 0x" + [&] {
                                static const char* hex = "0123456789abcdef";
                                auto u = static_cast<unsigned char>(c);
                                return std::string{hex[u >> 4], hex[u & 15]};
                              }();
    throw ParseError(ParseErrorCode::lexical, start, "unexpected character " + shown);
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

const std::vector<std::string> statement_starts{"ring",  "ideal", "analyze", "profile",
                                                "poset", "chain", "family"};

class Parser {
 public:
  Parser(std::string_view text, MonomialOrder order) : tokens_(lex(text)), order_(order) {}

  Script run() {
    Script script;
    while (true) {
      while (is_symbol(";")) ++i_;
      if (peek().kind == Tok::end) break;
      script.statements.push_back(statement());
    }
    return script;
  }

 private:
  using PresentationPtr = std::shared_ptr<const RingPresentation>;

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(i_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::end) ++i_;
    return t;
  }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::symbol && peek(ahead).text == s;
  }
  bool is_word(std::string_view s) const {
    return peek().kind == Tok::ident && peek().text == s;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(ParseErrorCode::syntax, peek().pos, "unexpected " + describe(peek()),
                     std::move(expected));
  }
  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail({"'" + std::string(s) + "'"});
    ++i_;
  }
  void expect_word(std::string_view s) {
    if (!is_word(s)) fail({"'" + std::string(s) + "'"});
    ++i_;
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Tok::ident) fail({what});
    return next();
  }
  const Token& expect_integer(const char* what) {
    if (peek().kind != Tok::integer) fail({what});
    return next();
  }

  template <class T>
  T small_integer(const Token& t, T max) {
    T value{};
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || value > max) {
      throw ParseError(ParseErrorCode::syntax, t.pos, "integer " + t.text + " out of range");
    }
    return value;
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      if (t.text == "ring") return ring_decl();
      if (t.text == "ideal") return ideal_decl();
      if (t.text == "analyze") return simple_command(CommandKind::analyze);
      if (t.text == "profile") return simple_command(CommandKind::profile);
      if (t.text == "poset") return simple_command(CommandKind::poset);
      if (t.text == "chain") return chain_command();
      if (t.text == "family") return family_command();
    }
    fail(statement_starts);
  }

  RingDecl ring_decl() {
    expect_word("ring");
    Field field = Field::rationals();
    const Token& f = peek();
    if (f.kind == Tok::ident && f.text == "Q") {
      ++i_;
    } else if (f.kind == Tok::ident && f.text == "F") {
      ++i_;
      field = prime_field(expect_integer("prime"));
    } else if (f.kind == Tok::ident && f.text.size() > 1 && f.text[0] == 'F' &&
               std::all_of(f.text.begin() + 1, f.text.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      ++i_;
      field = prime_field(Token{Tok::integer, f.text.substr(1), f.pos});
    } else {
      fail({"'Q'", "'F'"});
    }
    expect_symbol("[");
    std::vector<std::string> names;
    SourcePos list_pos = peek().pos;
    names.push_back(expect_ident("variable name").text);
    while (is_symbol(",")) {
      ++i_;
      names.push_back(expect_ident("variable name").text);
    }
    if (!is_symbol("]")) fail({"','", "']'"});
    ++i_;
    try {
      current_ = PolyRing::make(field, names, order_);
    } catch (const Error& e) {
      throw ParseError(ParseErrorCode::syntax, list_pos, e.what());
    }
    return RingDecl{current_};
  }

  Field prime_field(const Token& t) {
    const auto p = small_integer<std::uint64_t>(t, std::uint64_t{1} << 31);
    if (!is_prime(p)) {
      throw ParseError(ParseErrorCode::invalid_field, t.pos, t.text + " is not a prime");
    }
    return Field::prime(static_cast<std::uint32_t>(p));
  }

  IdealDecl ideal_decl() {
    const SourcePos pos = peek().pos;
    expect_word("ideal");
    std::string name = expect_ident("ideal name").text;
    expect_symbol("=");
    if (!current_) throw ParseError(ParseErrorCode::no_ring, pos, "no ring declared");
    IdealExpr expr = ideal_expr();
    Evaluated value = evaluate(expr);
    auto presentation = std::make_shared<RingPresentation>();
    presentation->ring = current_;
    presentation->generators = std::move(value.generators);
    const bool decomposed = expr.kind == IdealExpr::Kind::intersect ||
                            (expr.kind == IdealExpr::Kind::reference &&
                             !ideals_.at(expr.name)->components.empty());
    if (decomposed) presentation->components = std::move(value.components);
    presentation->name = name;
    ideals_[name] = presentation;
    return IdealDecl{std::move(name), std::move(expr), std::move(presentation)};
  }

  IdealExpr ideal_expr() {
    IdealExpr e;
    if (is_symbol("(")) {
      ++i_;
      e.kind = IdealExpr::Kind::generators;
      e.generators.push_back(polynomial());
      while (is_symbol(",")) {
        ++i_;
        e.generators.push_back(polynomial());
      }
      if (!is_symbol(")")) fail({"','", "')'", "'+'", "'-'"});
      ++i_;
      return e;
    }
    if (is_word("intersect")) {
      ++i_;
      e.kind = IdealExpr::Kind::intersect;
      expect_symbol("(");
      e.operands.push_back(ideal_expr());
      expect_symbol(",");
      e.operands.push_back(ideal_expr());
      expect_symbol(")");
      return e;
    }
    if (peek().kind == Tok::ident) {
      const Token& t = next();
      auto p = lookup(t);
      if (!p->ring->same_context(*current_)) {
        throw ParseError(ParseErrorCode::ring_mismatch, t.pos,
                         "ideal " + t.text + " belongs to " + p->ring->describe() +
                             ", not the current ring " + current_->describe());
      }
      e.kind = IdealExpr::Kind::reference;
      e.name = t.text;
      return e;
    }
    fail({"'('", "'intersect'", "ideal name"});
  }

  PresentationPtr lookup(const Token& t) const {
    auto it = ideals_.find(t.text);
    if (it == ideals_.end()) {
      throw ParseError(ParseErrorCode::undeclared_identifier, t.pos,
                       "undeclared identifier '" + t.text + "'");
    }
    return it->second;
  }

  struct Evaluated {
    std::vector<Polynomial> generators;
    std::vector<std::vector<Polynomial>> components;
  };

  Evaluated evaluate(const IdealExpr& e) {
    switch (e.kind) {
      case IdealExpr::Kind::generators:
        return {e.generators, {e.generators}};
      case IdealExpr::Kind::reference: {
        const auto& p = ideals_.at(e.name);
        std::vector<Polynomial> gens;
        for (const auto& g : p->generators) gens.push_back(g.in_ring(current_));
        std::vector<std::vector<Polynomial>> comps;
        for (const auto& c : p->components) {
          std::vector<Polynomial> cc;
          for (const auto& g : c) cc.push_back(g.in_ring(current_));
          comps.push_back(std::move(cc));
        }
        if (comps.empty()) comps.push_back(gens);
        return {std::move(gens), std::move(comps)};
      }
      case IdealExpr::Kind::intersect: {
        Evaluated a = evaluate(e.operands[0]);
        Evaluated b = evaluate(e.operands[1]);
        Ideal meet = ideal_intersection(Ideal(current_, a.generators), Ideal(current_, b.generators));
        Evaluated out{meet.generators(), std::move(a.components)};
        for (auto& c : b.components) out.components.push_back(std::move(c));
        return out;
      }
    }
    return {};
  }

  Polynomial polynomial() {
    Polynomial acc(current_);
    bool first = true;
    while (true) {
      Scalar sign = 1;
      if (is_symbol("+") || is_symbol("-")) {
        if (is_symbol("-")) sign = -1;
        ++i_;
      } else if (!first) {
        break;
      }
      acc = acc + term(sign);
      first = false;
    }
    return acc;
  }

  Polynomial term(const Scalar& sign) {
    const SourcePos pos = peek().pos;
    const std::size_t n = current_->nvars();
    mpq_class coefficient = sign;
    bool seen = false;
    if (peek().kind == Tok::integer) {
      mpz_class num(next().text);
      mpz_class den = 1;
      if (is_symbol("/")) {
        ++i_;
        const Token& d = expect_integer("denominator");
        den = mpz_class(d.text);
        if (den == 0) throw ParseError(ParseErrorCode::syntax, d.pos, "zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      coefficient *= q;
      seen = true;
    }
    std::vector<std::uint32_t> exponents(n, 0);
    while (true) {
      if (is_symbol("*")) {
        ++i_;
        if (peek().kind != Tok::ident) fail({"variable"});
      } else if (peek().kind != Tok::ident) {
        break;
      }
      const Token& v = next();
      auto index = current_->variables().index_of(v.text);
      if (!index) {
        throw ParseError(ParseErrorCode::unknown_variable, v.pos,
                         "unknown variable '" + v.text + "' in " + current_->describe());
      }
      std::uint32_t power = 1;
      if (is_symbol("^")) {
        ++i_;
        power = small_integer<std::uint32_t>(expect_integer("exponent"), 1U << 20);
      }
      exponents[*index] += power;
      seen = true;
    }
    if (!seen) fail({"coefficient", "variable"});
    try {
      return Polynomial::monomial(current_, Monomial(std::move(exponents)),
                                  current_->field().normalize(coefficient));
    } catch (const Error& e) {
      throw ParseError(ParseErrorCode::invalid_field, pos, e.what());
    }
  }

  Command simple_command(CommandKind kind) {
    ++i_;
    Command c;
    c.kind = kind;
    const Token& t = expect_ident("ideal name");
    c.presentation = lookup(t);
    c.target = t.text;
    return c;
  }

  Command chain_command() {
    ++i_;
    Command c;
    c.kind = CommandKind::chain;
    const Token& t = expect_ident("ideal name");
    c.presentation = lookup(t);
    c.target = t.text;
    expect_word("from");
    expect_symbol("(");
    do {
      if (!c.from.empty()) ++i_;
      const Token& v = expect_ident("variable");
      if (!c.presentation->ring->variables().index_of(v.text)) {
        throw ParseError(ParseErrorCode::unknown_variable, v.pos,
                         "unknown variable '" + v.text + "' in " + c.presentation->ring->describe());
      }
      c.from.push_back(v.text);
    } while (is_symbol(","));
    if (!is_symbol(")")) fail({"','", "')'"});
    ++i_;
    return c;
  }

  Command family_command() {
    ++i_;
    Command c;
    c.kind = CommandKind::family;
    const Token& name = expect_ident("family name");
    auto kind = family_kind(name.text);
    if (!kind) {
      throw ParseError(ParseErrorCode::invalid_family, name.pos,
                       "unknown family '" + name.text + "'", family_names());
    }
    c.family.kind = *kind;
    if (is_symbol("(")) {
      ++i_;
      do {
        if (!c.family.params.empty()) ++i_;
        c.family.params.push_back(
            small_integer<std::int64_t>(expect_integer("integer"), std::int64_t{1} << 40));
      } while (is_symbol(","));
      if (!is_symbol(")")) fail({"','", "')'"});
      ++i_;
    }
    try {
      auto instance = std::make_shared<FamilyInstance>(instantiate(c.family));
      RingPresentation& p = instance->presentation;
      p.name = name.text;
      p.ring = p.ring->with_order(order_);
      for (auto& g : p.generators) g = g.in_ring(p.ring);
      c.presentation = std::make_shared<RingPresentation>(instance->presentation);
      c.instance = std::move(instance);
    } catch (const ParameterError& e) {
      throw ParseError(ParseErrorCode::invalid_family, name.pos, e.what());
    }
    c.target = name.text;
    ideals_[c.target] = c.presentation;
    current_ = c.presentation->ring;
    return c;
  }

  std::vector<Token> tokens_;
  std::size_t i_ = 0;
  MonomialOrder order_;
  RingPtr current_;
  std::map<std::string, PresentationPtr> ideals_;
};

std::string render_expr(const IdealExpr& e) {
  switch (e.kind) {
    case IdealExpr::Kind::generators: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        if (i) s += ", ";
        s += e.generators[i].to_string();
      }
      return s + ")";
    }
    case IdealExpr::Kind::intersect:
      return "intersect(" + render_expr(e.operands[0]) + ", " + render_expr(e.operands[1]) + ")";
    case IdealExpr::Kind::reference:
      return e.name;
  }
  return "";
}

}  // namespace

Script parse(std::string_view text, const MonomialOrder& order) {
  return Parser(text, order).run();
}

std::string render(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) {
    if (const auto* r = std::get_if<RingDecl>(&s)) {
      const Field& f = r->ring->field();
      out += "ring ";
      out += f.is_rationals() ? std::string("Q") : "F " + std::to_string(f.characteristic());
      out += "[";
      const auto& names = r->ring->variables().names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
      }
      out += "]\n";
    } else if (const auto* d = std::get_if<IdealDecl>(&s)) {
      out += "ideal " + d->name + " = " + render_expr(d->expr) + "\n";
    } else {
      const auto& c = std::get<Command>(s);
      out += to_string(c.kind);
      out += " ";
      if (c.kind == CommandKind::family) {
        out += c.family.to_string();
      } else {
        out += c.target;
      }
      if (c.kind == CommandKind::chain) {
        out += " from (";
        for (std::size_t i = 0; i < c.from.size(); ++i) {
          if (i) out += ", ";
          out += c.from[i];
        }
        out += ")";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace catenary
