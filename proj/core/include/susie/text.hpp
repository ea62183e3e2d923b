#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace susie {

// A word token is a maximal run of non-whitespace characters.
using Token = std::string;
using TokenList = std::vector<Token>;

bool is_space_codepoint(char32_t cp);

// Collapses all Unicode whitespace runs to single ASCII spaces, strips
// control characters, and trims the ends. Input and output are UTF-8.
std::string normalize_whitespace(std::string_view text);

// Splits on Unicode whitespace. Tokens keep their original case and any
// attached punctuation. Empty input gives an empty list.
TokenList tokenize(std::string_view text);

std::string join_tokens(const TokenList& tokens);

std::string to_lower_ascii(std::string_view s);

// Removes leading/trailing ASCII punctuation ("methods:" -> "methods").
std::string_view strip_outer_punct(std::string_view token);

// Lowercase + strip_outer_punct, dropping tokens that end up empty.
// Shared by scoring and header matching.
TokenList normalize_tokens(const TokenList& tokens);

TokenList truncate_tokens(TokenList tokens, std::size_t max_tokens);

}  // namespace susie
