#include "alc/scalar.hpp"

#include <cctype>

namespace alc {

Scalar Scalar::ratio(long num, long den) {
    return Scalar(Rational(num, den));
}

std::string rational_str(const Rational& r) {
    return r.str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag_part = rational_str(im_) + "i";
    if (re_ == 0) return imag_part;
    if (im_ > 0) return rational_str(re_) + "+" + imag_part;
    return rational_str(re_) + imag_part;  // sign carried by im_
}

namespace {

// Parses `[-]digits[/digits]` starting at pos; advances pos past it.
std::optional<Rational> parse_rational_at(std::string_view s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) pos++;
    size_t digits_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == digits_begin) {
        pos = start;
        return std::nullopt;
    }
    std::string num(s.substr(start, pos - start));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);  // cpp_int rejects '+'
    if (pos < s.size() && s[pos] == '/') {
        size_t den_begin = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
        if (pos == den_begin) {
            pos = start;
            return std::nullopt;
        }
        std::string den(s.substr(den_begin, pos - den_begin));
        boost::multiprecision::cpp_int d(den);
        if (d == 0) {
            pos = start;
            return std::nullopt;
        }
        return Rational(boost::multiprecision::cpp_int(num), d);
    }
    return Rational(boost::multiprecision::cpp_int(num));
}

}  // namespace

std::optional<Scalar> Scalar::parse(std::string_view text, RingMode mode) {
    size_t pos = 0;
    auto first = parse_rational_at(text, pos);
    if (!first) return std::nullopt;
    if (pos == text.size()) return Scalar(*first);
    if (text[pos] == 'i' && pos + 1 == text.size()) {
        if (mode == RingMode::Rational) return std::nullopt;
        return Scalar(Rational(0), *first);
    }
    // a+bi / a-bi; the sign is consumed as part of the second rational.
    if (text[pos] != '+' && text[pos] != '-') return std::nullopt;
    auto second = parse_rational_at(text, pos);
    if (!second) return std::nullopt;
    if (pos + 1 != text.size() || text[pos] != 'i') return std::nullopt;
    if (mode == RingMode::Rational) return std::nullopt;
    return Scalar(*first, *second);
}

}  // namespace alc
