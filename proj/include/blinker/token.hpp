#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace blinker {

enum class Side { kSource, kTarget };

std::string_view to_string(Side side);
Side side_from_string(std::string_view s);

enum class TokenKind {
  kWord,
  kPunctuation,
  // Produced by expanding a contraction ("du" -> "de" "le"). All tokens of
  // one expansion share the span of the original contraction.
  kExpanded,
};

std::string_view to_string(TokenKind kind);

// Byte range [begin, end) into the raw UTF-8 verse.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::size_t index = 0;
  std::string surface;
  Side side = Side::kSource;
  Span span;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const Token&, const Token&) = default;
};

// (side, index) reference to a token of a verse pair.
struct TokenRef {
  Side side = Side::kSource;
  std::size_t index = 0;

  friend auto operator<=>(const TokenRef&, const TokenRef&) = default;
};

}  // namespace blinker
