#include "susie/text.hpp"

#include <cctype>

namespace susie {

bool is_space_codepoint(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
    case 0x20: case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

namespace {

bool is_control_codepoint(char32_t cp) {
  return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

// Decodes one UTF-8 codepoint at `i`, advancing `i`. Invalid bytes are
// passed through one at a time so malformed input cannot get us stuck.
char32_t decode_utf8(std::string_view s, std::size_t& i, std::size_t& len) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t need = 0;
  char32_t cp = 0;
  if (b0 < 0x80) {
    cp = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    len = 1;
    ++i;
    return 0xFFFD;
  }
  if (i + need >= s.size()) {
    // truncated sequence
    len = 1;
    ++i;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k <= need; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      len = 1;
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  len = need + 1;
  i += len;
  return cp;
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    std::size_t len = 0;
    const char32_t cp = decode_utf8(text, i, len);
    if (is_space_codepoint(cp)) {
      pending_space = true;
      continue;
    }
    if (is_control_codepoint(cp)) continue;
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(start, len));
  }
  return out;
}

TokenList tokenize(std::string_view text) {
  TokenList tokens;
  std::size_t i = 0;
  std::size_t tok_begin = 0;
  bool in_token = false;
  while (i < text.size()) {
    const std::size_t start = i;
    std::size_t len = 0;
    const char32_t cp = decode_utf8(text, i, len);
    if (is_space_codepoint(cp)) {
      if (in_token) {
        tokens.emplace_back(text.substr(tok_begin, start - tok_begin));
        in_token = false;
      }
    } else if (!in_token) {
      tok_begin = start;
      in_token = true;
    }
  }
  if (in_token) tokens.emplace_back(text.substr(tok_begin));
  return tokens;
}

std::string join_tokens(const TokenList& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view strip_outer_punct(std::string_view token) {
  std::size_t b = 0;
  std::size_t e = token.size();
  while (b < e && std::ispunct(static_cast<unsigned char>(token[b]))) ++b;
  while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1]))) --e;
  return token.substr(b, e - b);
}

TokenList normalize_tokens(const TokenList& tokens) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto core = strip_outer_punct(tok);
    if (core.empty()) continue;
    out.push_back(to_lower_ascii(core));
  }
  return out;
}

TokenList truncate_tokens(TokenList tokens, std::size_t max_tokens) {
  if (tokens.size() > max_tokens) tokens.resize(max_tokens);
  return tokens;
}

}  // namespace susie
