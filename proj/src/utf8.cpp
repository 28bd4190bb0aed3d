#include "utf8.hpp"

#include <algorithm>

namespace blinker::utf8 {

std::vector<CodePoint> decode(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    char32_t cp = lead;
    if (lead >= 0xC0 && lead < 0xE0) {
      len = 2;
      cp = lead & 0x1F;
    } else if (lead >= 0xE0 && lead < 0xF0) {
      len = 3;
      cp = lead & 0x0F;
    } else if (lead >= 0xF0 && lead < 0xF8) {
      len = 4;
      cp = lead & 0x07;
    }
    bool ok = len == 1 || i + len <= text.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (cont & 0x3F);
      }
    }
    if (!ok) {
      len = 1;
      cp = lead;
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:  // no-break space
    case 0x2009:  // thin space
    case 0x202F:  // narrow no-break space, common before French ; : ! ?
      return true;
    default:
      return false;
  }
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

namespace {

char32_t lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x17F && cp % 2 == 0 && cp != 0x130 &&
      cp != 0x138) {
    return cp + 1;
  }
  if (cp == 0x2019) return U'\'';
  return cp;
}

char32_t upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 32;
  if (cp >= 0x101 && cp <= 0x17F && cp % 2 == 1 && cp != 0x131 &&
      cp != 0x17F) {
    return cp - 1;
  }
  return cp;
}

}  // namespace

std::string fold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const auto& cp : decode(text)) {
    if (cp.value < 0x80) {
      out += static_cast<char>(lower(cp.value));
    } else {
      out += encode(lower(cp.value));
    }
  }
  return out;
}

bool starts_upper(std::string_view text) {
  if (text.empty()) return false;
  const auto cps = decode(text.substr(0, std::min<std::size_t>(4, text.size())));
  return lower(cps.front().value) != cps.front().value &&
         cps.front().value != 0x2019;
}

std::string capitalize_first(std::string_view text) {
  if (text.empty()) return {};
  const auto cps = decode(text);
  const auto& first = cps.front();
  return encode(upper(first.value)) + std::string(text.substr(first.length));
}

}  // namespace blinker::utf8
