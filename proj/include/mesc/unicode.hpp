#pragma once

#include <string>
#include <string_view>

namespace mesc {

/// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD.
std::u32string utf8_decode(std::string_view s);

/// Encodes code points back to UTF-8.
std::string utf8_encode(std::u32string_view s);

/// Canonical composition (Unicode NFC), so combining sequences compare stably.
std::string nfc(std::string_view s);

/// Per-code-point simple lowercase mapping (locale independent).
std::string fold_case(std::string_view s);
char32_t fold_case(char32_t c);

bool is_punctuation(char32_t c);
bool is_whitespace(char32_t c);

}  // namespace mesc
