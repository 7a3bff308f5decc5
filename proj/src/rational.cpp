#include "qrh/rational.hpp"

#include <charconv>

#include "qrh/errors.hpp"

namespace qrh {

namespace {
std::int64_t parse_int(std::string_view s, const std::string& whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError("not a rational number: '" + whole + "'");
    return v;
}
}  // namespace

Rational parse_rational(const std::string& text) {
    const std::string_view s = text;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::int64_t den = parse_int(s.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        return Rational(parse_int(s.substr(0, slash), text), den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        if (frac.size() > 15) throw InputError("too many decimals in '" + text + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool negative = !s.empty() && s.front() == '-';
        std::string_view ipart = s.substr(0, dot);
        if (negative) ipart.remove_prefix(1);
        const std::int64_t whole = ipart.empty() ? 0 : parse_int(ipart, text);
        const std::int64_t f = frac.empty() ? 0 : parse_int(frac, text);
        Rational r(whole * scale + f, scale);
        return negative ? -r : r;
    }
    return Rational(parse_int(s, text));
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace qrh
