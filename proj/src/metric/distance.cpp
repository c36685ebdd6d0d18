#include "obstruct/metric/distance.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "obstruct/core/error.hpp"

namespace obstruct {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// cpp_int reads a leading zero as an octal prefix, so strip them first.
BigInt decimal_digits(std::string_view s) {
    auto nz = s.find_first_not_of('0');
    if (nz == std::string_view::npos)
        return 0;
    return BigInt(std::string(s.substr(nz)));
}

BigInt pow10(unsigned n) {
    BigInt p = 1;
    for (unsigned i = 0; i < n; ++i)
        p *= 10;
    return p;
}

// Exact value of a decimal literal such as "12", "0.25", "3.5e-2".
Rational parse_decimal(std::string_view s, std::string_view original) {
    auto fail = [&] { return InvalidInput("malformed distance '" + std::string(original) + "'"); };
    long long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view e = s.substr(epos + 1);
        bool neg = false;
        if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
            neg = e[0] == '-';
            e.remove_prefix(1);
        }
        if (!all_digits(e) || e.size() > 6)
            throw fail();
        exponent = std::stoll(std::string(e));
        if (neg)
            exponent = -exponent;
        s = s.substr(0, epos);
    }
    std::string digits;
    long long frac_len = 0;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw fail();
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long long>(fp.size());
    } else {
        if (!all_digits(s))
            throw fail();
        digits = std::string(s);
    }
    Rational v{decimal_digits(digits)};
    long long shift = exponent - frac_len;
    if (shift > 0)
        v *= Rational(pow10(static_cast<unsigned>(shift)));
    else if (shift < 0)
        v /= Rational(pow10(static_cast<unsigned>(-shift)));
    return v;
}

}  // namespace

Distance::Distance(long long v) : value_(v) {
    if (v < 0)
        throw InvalidInput("distances must be nonnegative");
}

Distance::Distance(Rational v) : value_(std::move(v)) {
    if (value_ < 0)
        throw InvalidInput("distances must be nonnegative");
}

Distance Distance::infinity() {
    Distance d;
    d.infinite_ = true;
    return d;
}

Distance Distance::parse(std::string_view text) {
    std::string s = trim(text);
    std::string lower = s;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "inf" || lower == "+inf" || lower == "infinity" || s == "∞")
        return infinity();
    if (s.empty())
        throw InvalidInput("empty distance value");
    if (s[0] == '-')
        throw InvalidInput("negative distance '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = trim(s.substr(0, slash));
        std::string den = trim(s.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den))
            throw InvalidInput("malformed rational '" + s + "'");
        BigInt d = decimal_digits(den);
        if (d == 0)
            throw InvalidInput("zero denominator in '" + s + "'");
        return Distance(Rational(decimal_digits(num), d));
    }
    return Distance(parse_decimal(s, text));
}

const Rational& Distance::value() const {
    if (infinite_)
        throw InvalidInput("infinite distance has no finite value");
    return value_;
}

double Distance::to_double() const {
    if (infinite_)
        return std::numeric_limits<double>::infinity();
    return value_.convert_to<double>();
}

std::string Distance::to_string() const {
    if (infinite_)
        return "inf";
    return value_.str();
}

Distance operator+(const Distance& a, const Distance& b) {
    if (a.infinite_ || b.infinite_)
        return Distance::infinity();
    return Distance(a.value_ + b.value_);
}

Distance operator*(long long k, const Distance& d) {
    if (k < 0)
        throw InvalidInput("negative scale");
    if (d.infinite_)
        return k == 0 ? Distance() : Distance::infinity();
    return Distance(d.value_ * k);
}

bool operator==(const Distance& a, const Distance& b) {
    if (a.infinite_ || b.infinite_)
        return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ == b.infinite_)
            return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (a.value_ < b.value_)
        return std::strong_ordering::less;
    if (a.value_ > b.value_)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace obstruct
