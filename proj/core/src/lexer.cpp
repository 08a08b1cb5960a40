#include "lexer.hpp"

namespace aspnf::detail {

namespace {

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Lexer::Lexer(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {
  current_ = scan();
}

void Lexer::skip_blank() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '%') {
      while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_, ++column_;
    } else if (c == '\n') {
      ++pos_, ++line_, column_ = 1;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++pos_, ++column_;
    } else {
      return;
    }
  }
}

Token Lexer::scan() {
  skip_blank();
  Token t;
  t.span = {line_, column_};
  if (pos_ >= text_.size()) {
    t.kind = TokenKind::end;
    return t;
  }
  const std::size_t start = pos_;
  const char c = text_[pos_];
  auto single = [&](TokenKind k) {
    ++pos_, ++column_;
    t.kind = k;
  };
  if (ident_start(c)) {
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_, ++column_;
    t.kind = TokenKind::identifier;
  } else if (digit(c)) {
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_, ++column_;
    t.kind = TokenKind::integer;
  } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
    pos_ += 2, column_ += 2;
    t.kind = TokenKind::implies;
  } else if (c == '.') {
    single(TokenKind::dot);
  } else if (c == ',') {
    single(TokenKind::comma);
  } else if (c == '(') {
    single(TokenKind::lparen);
  } else if (c == ')') {
    single(TokenKind::rparen);
  } else if (c == '#') {
    single(TokenKind::hash);
  } else {
    const unsigned code = static_cast<unsigned char>(c);
    std::string shown = (code >= 0x20 && code < 0x7f) ? std::string(1, c)
                                                        : "\\x" + std::to_string(code);
    fail(t.span, "unexpected character '" + shown + "'");
  }
  t.text = text_.substr(start, pos_ - start);
  return t;
}

Token Lexer::next() {
  Token t = current_;
  current_ = scan();
  return t;
}

Token Lexer::expect(TokenKind kind, std::string_view what) {
  if (current_.kind != kind) {
    fail(current_.span, "expected " + std::string(what) + ", found " + describe(current_));
  }
  return next();
}

bool Lexer::accept(TokenKind kind) {
  if (current_.kind != kind) return false;
  next();
  return true;
}

void Lexer::fail(const SourceSpan& at, const std::string& message) const {
  throw SyntaxError(at, message);
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::end: return "end of input";
    case TokenKind::identifier: return "identifier '" + std::string(t.text) + "'";
    case TokenKind::integer: return "integer '" + std::string(t.text) + "'";
    default: return "'" + std::string(t.text) + "'";
  }
}

Atom parse_atom(Lexer& lex, bool allow_reserved) {
  const Token name = lex.expect(TokenKind::identifier, "atom");
  return parse_atom_tail(lex, name, allow_reserved);
}

Atom parse_atom_tail(Lexer& lex, const Token& name, bool allow_reserved) {
  const bool reserved = name.text.starts_with(kReservedPrefix);
  if (reserved && !allow_reserved) {
    throw ReservedAtomError(std::to_string(name.span.line) + ":" +
                            std::to_string(name.span.column) + ": reserved atom '" +
                            std::string(name.text) + "' in user input");
  }
  if (!reserved && !(name.text[0] >= 'a' && name.text[0] <= 'z')) {
    lex.fail(name.span, "atom names must start with a lowercase letter");
  }
  std::string flat(name.text);
  if (lex.peek().kind == TokenKind::lparen) {
    lex.next();
    flat += '(';
    for (bool first = true;; first = false) {
      if (!first) flat += ',';
      const Token arg = lex.peek();
      if (arg.kind == TokenKind::integer) {
        flat += arg.text;
      } else if (arg.kind == TokenKind::identifier && arg.text[0] >= 'a' && arg.text[0] <= 'z') {
        flat += arg.text;
      } else {
        lex.fail(arg.span, "expected argument, found " + describe(arg));
      }
      lex.next();
      if (lex.accept(TokenKind::comma)) continue;
      lex.expect(TokenKind::rparen, "',' or ')'");
      break;
    }
    flat += ')';
  }
  return Atom(std::move(flat));
}

}  // namespace aspnf::detail
