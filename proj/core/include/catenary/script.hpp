#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catenary/analyzer.hpp"
#include "catenary/error.hpp"
#include "catenary/families.hpp"

namespace catenary {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class ParseErrorCode {
  lexical,
  syntax,
  no_ring,
  undeclared_identifier,
  unknown_variable,
  ring_mismatch,
  invalid_field,
  invalid_family,
};

const char* to_string(ParseErrorCode code);

class ParseError : public Error {
 public:
  ParseError(ParseErrorCode code, SourcePos pos, std::string message,
             std::vector<std::string> expected = {});

  ParseErrorCode code() const noexcept { return code_; }
  SourcePos position() const noexcept { return pos_; }
  /// Tokens that would have been accepted at the error position (syntax errors).
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  bool semantic() const noexcept {
    return code_ != ParseErrorCode::lexical && code_ != ParseErrorCode::syntax;
  }

 private:
  ParseErrorCode code_;
  SourcePos pos_;
  std::vector<std::string> expected_;
};

struct RingDecl {
  RingPtr ring;

  friend bool operator==(const RingDecl& a, const RingDecl& b) {
    return a.ring->same_context(*b.ring);
  }
};

struct IdealExpr {
  enum class Kind { generators, intersect, reference };
  Kind kind = Kind::generators;
  std::vector<Polynomial> generators;
  /// Two operands for intersect.
  std::vector<IdealExpr> operands;
  /// Referenced ideal name.
  std::string name;

  friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct IdealDecl {
  std::string name;
  IdealExpr expr;
  /// The ideal with its ring and the leaves of any intersection.
  std::shared_ptr<const RingPresentation> presentation;

  friend bool operator==(const IdealDecl& a, const IdealDecl& b) {
    return a.name == b.name && a.expr == b.expr;
  }
};

enum class CommandKind { analyze, profile, poset, chain, family };
const char* to_string(CommandKind kind);

struct Command {
  CommandKind kind = CommandKind::analyze;
  /// Ideal name; for `family` the name the instance is bound to.
  std::string target;
  /// Variables of the starting prime for `chain`.
  std::vector<std::string> from;
  FamilySpec family;
  /// Resolved at parse time.
  std::shared_ptr<const RingPresentation> presentation;
  std::shared_ptr<const FamilyInstance> instance;

  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.target == b.target && a.from == b.from &&
           (a.kind != CommandKind::family ||
            (a.family.kind == b.family.kind && a.family.params == b.family.params));
  }
};

using Statement = std::variant<RingDecl, IdealDecl, Command>;

struct Script {
  std::vector<Statement> statements;

  /// Commands in order of appearance.
  std::vector<const Command*> commands() const;

  friend bool operator==(const Script&, const Script&) = default;
};

/// Parses and resolves a script. `order` is the term order of declared rings.
///
///   ring  := "ring" ("Q" | "F" INT) "[" IDENT ("," IDENT)* "]"
///   ideal := "ideal" IDENT "=" expr
///   expr  := "(" poly ("," poly)* ")" | "intersect" "(" expr "," expr ")" | IDENT
///   cmd   := ("analyze" | "profile" | "poset") IDENT
///          | "chain" IDENT "from" "(" IDENT ("," IDENT)* ")"
///          | "family" IDENT ("(" INT ("," INT)* ")")?
///
/// Polynomials are signed sums of terms `coeff? ("*"? IDENT ("^" INT)?)*`
/// with coefficients `INT` or `INT/INT`. `#` starts a comment; `;` is an
/// optional separator. Ideals use the most recent ring; `family NAME(..)`
/// binds its ideal to NAME and makes its ring current. Throws ParseError.
Script parse(std::string_view text, const MonomialOrder& order = MonomialOrder::grevlex());

/// Canonical text of a script; parse(render(s)) == s.
std::string render(const Script& script);

}  // namespace catenary
