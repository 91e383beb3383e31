#include "coded_caching/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coded_caching {

namespace {

using wide = __int128;

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

bool fits(wide v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    wide g = wide_gcd(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits(numerator) || !fits(denominator))
        throw std::overflow_error("rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

std::int64_t Rational::floor() const noexcept {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

double Rational::to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw std::invalid_argument("bad decimal: '" + std::string(text) + "'");
        bool negative = !whole.empty() && whole.front() == '-';
        if (negative) whole.remove_prefix(1);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational r = Rational{whole.empty() ? 0 : parse_int(whole)} +
                     Rational{parse_int(frac), scale};
        return negative ? -r : r;
    }
    return Rational{parse_int(text)};
}

Rational& Rational::operator+=(const Rational& rhs) {
    return *this = from_wide(wide{num_} * rhs.den_ + wide{rhs.num_} * den_, wide{den_} * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this = from_wide(wide{num_} * rhs.den_ - wide{rhs.num_} * den_, wide{den_} * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
    return *this = from_wide(wide{num_} * rhs.num_, wide{den_} * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = from_wide(wide{num_} * rhs.den_, wide{den_} * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    wide l = wide{lhs.num_} * rhs.den_;
    wide r = wide{rhs.num_} * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace coded_caching
