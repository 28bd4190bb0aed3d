#pragma once

// Minimal UTF-8 helpers. Invalid bytes decode as single-byte code points so
// that every input string can be walked.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace blinker::utf8 {

struct CodePoint {
  char32_t value;
  std::size_t offset;  // byte offset in the decoded string
  std::size_t length;  // bytes
};

std::vector<CodePoint> decode(std::string_view text);
std::string encode(char32_t cp);

bool is_space(char32_t cp);
bool is_apostrophe(char32_t cp);

// Lowercases ASCII, Latin-1 and the Latin Extended-A case pairs, and maps
// U+2019 to '\''.
std::string fold(std::string_view text);

bool starts_upper(std::string_view text);
std::string capitalize_first(std::string_view text);

}  // namespace blinker::utf8
