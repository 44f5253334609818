#pragma once

#include <string>
#include <string_view>

namespace pinfix {

// Lenient UTF-8 decode; invalid byte sequences become U+FFFD.
std::u32string utf8_decode(std::string_view s);

std::string utf8_encode(std::u32string_view s);
std::string utf8_encode(char32_t c);

}  // namespace pinfix
