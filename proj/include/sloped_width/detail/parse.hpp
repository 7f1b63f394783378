#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace sloped_width::detail {

// Whole-string integer parse; no whitespace, no '+' sign.
inline long long parse_integer(std::string_view text, const char* what) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(text) + "'");
    return value;
}

}  // namespace sloped_width::detail
