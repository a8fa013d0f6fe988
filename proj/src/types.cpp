#include "mularith/types.hpp"

#include <cctype>

namespace mularith {

namespace {

bool is_decimal(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_decimal(num, true) || !is_decimal(den, false)) {
        throw std::invalid_argument("not an exact rational: '" + text + "'");
    }
    return make_rational(Int(num, 10), Int(den, 10));
}

}  // namespace mularith
