#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace coded_caching {

/// Exact rational number over 64-bit integers.
///
/// Always kept in lowest terms with a positive denominator. Intermediate
/// products are formed in 128 bits; a result that does not fit back into
/// 64 bits raises std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator = 1);

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] std::int64_t floor() const noexcept;
    [[nodiscard]] double to_double() const noexcept;

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    /// Accepts "p", "p/q" and finite decimals such as "0.25".
    static Rational parse(std::string_view text);

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational{-num_, den_}; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

[[nodiscard]] inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace coded_caching
