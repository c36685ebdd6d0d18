#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace obstruct {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact nonnegative rational, or +infinity.
class Distance {
public:
    Distance() = default;
    Distance(long long v);  // NOLINT: integers convert naturally
    explicit Distance(Rational v);

    static Distance infinity();
    /// Accepts integers, "p/q", decimals with optional exponent, and
    /// "inf" / "infinity" / "∞". Negative values are rejected.
    static Distance parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    /// Throws InvalidInput when infinite.
    const Rational& value() const;
    double to_double() const;
    /// Canonical text: "3", "1/2", "inf".
    std::string to_string() const;

    friend Distance operator+(const Distance& a, const Distance& b);
    friend Distance operator*(long long k, const Distance& d);
    friend bool operator==(const Distance& a, const Distance& b);
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);

private:
    Rational value_{0};
    bool infinite_ = false;
};

}  // namespace obstruct
