#pragma once

// Tokenizer shared by the program, anti-chain and answer-set readers.

#include <string>
#include <string_view>

#include "aspnf/error.hpp"
#include "aspnf/program.hpp"

namespace aspnf::detail {

enum class TokenKind { identifier, integer, implies, dot, comma, lparen, rparen, hash, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string_view text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text, std::size_t first_line = 1);

  const Token& peek() const noexcept { return current_; }
  Token next();
  /// Consumes a token of `kind` or throws SyntaxError naming `what`.
  Token expect(TokenKind kind, std::string_view what);
  bool accept(TokenKind kind);

  [[noreturn]] void fail(const SourceSpan& at, const std::string& message) const;

 private:
  Token scan();
  void skip_blank();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
  Token current_;
};

/// ATOM := IDENT [ '(' ARG { ',' ARG } ')' ], flattened to `name(a,b)`.
/// Identifiers must start with a lowercase letter, or with the reserved
/// `__` prefix when `allow_reserved` holds (otherwise ReservedAtomError).
Atom parse_atom(Lexer& lex, bool allow_reserved);
/// As parse_atom, with the leading identifier already consumed.
Atom parse_atom_tail(Lexer& lex, const Token& name, bool allow_reserved);

std::string describe(const Token& t);

}  // namespace aspnf::detail
