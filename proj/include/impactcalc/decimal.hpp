#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace impactcalc {

enum class Rounding {
    HalfTowardZero,
    HalfAwayFromZero,
    HalfEven,
    TowardZero,
};

/// Exact base-10 number: an arbitrary-precision integer mantissa and a count
/// of fractional digits. Addition, subtraction and multiplication never
/// round. Division and explicit quantization take a scale and a Rounding.
///
/// The representation is canonical (no trailing fractional zeros), so two
/// Decimals compare equal exactly when their members are equal.
class Decimal {
public:
    using Int = boost::multiprecision::cpp_int;

    Decimal() = default;

    template <std::integral T>
    Decimal(T value) : mantissa_(value) {}  // NOLINT(google-explicit-constructor)

    /// Accepts `-?[0-9]+(\.[0-9]+)?`. Throws CalcError(ParseError).
    static Decimal parse(std::string_view text);
    static std::optional<Decimal> try_parse(std::string_view text);
    static Decimal from_scaled(Int mantissa, unsigned scale);

    /// Fixed-point text, never scientific. Pads to at least `min_fraction`
    /// fractional digits; never drops digits.
    std::string to_string(unsigned min_fraction = 0) const;

    Decimal rounded(unsigned scale, Rounding mode) const;
    Decimal divided_by(const Decimal& divisor, unsigned scale, Rounding mode) const;

    unsigned scale() const noexcept { return scale_; }
    const Int& mantissa() const noexcept { return mantissa_; }
    int sign() const noexcept { return mantissa_.sign(); }
    bool is_zero() const noexcept { return mantissa_.is_zero(); }
    bool is_integer() const noexcept { return scale_ == 0; }
    Decimal abs() const;
    double to_double() const;
    /// Throws OutOfRange unless the value is an integer that fits.
    std::int64_t to_int64() const;

    Decimal operator-() const;
    Decimal& operator+=(const Decimal& rhs);
    Decimal& operator-=(const Decimal& rhs);
    Decimal& operator*=(const Decimal& rhs);

    friend Decimal operator+(Decimal lhs, const Decimal& rhs) { return lhs += rhs; }
    friend Decimal operator-(Decimal lhs, const Decimal& rhs) { return lhs -= rhs; }
    friend Decimal operator*(Decimal lhs, const Decimal& rhs) { return lhs *= rhs; }

    friend bool operator==(const Decimal& a, const Decimal& b) {
        return a.scale_ == b.scale_ && a.mantissa_ == b.mantissa_;
    }
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b);

private:
    void normalize();

    Int mantissa_{0};
    unsigned scale_ = 0;
};

inline Decimal operator""_dec(const char* text, std::size_t size) {
    return Decimal::parse(std::string_view(text, size));
}

/// Raw form: `0.001_dec` is parsed from its source spelling, never via double.
inline Decimal operator""_dec(const char* text) { return Decimal::parse(text); }

}  // namespace impactcalc
