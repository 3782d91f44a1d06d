#include "impactcalc/decimal.hpp"

#include "impactcalc/error.hpp"

#include <limits>
#include <vector>

namespace impactcalc {

namespace {

using Int = Decimal::Int;

const Int& pow10(unsigned n) {
    static thread_local std::vector<Int> table{Int(1)};
    while (table.size() <= n) table.push_back(table.back() * 10);
    return table[n];
}

// Divides numerator by a positive denominator and rounds the quotient.
Int round_quotient(const Int& numerator, const Int& denominator, Rounding mode) {
    Int quotient = numerator / denominator;  // truncates toward zero
    Int remainder = numerator % denominator;
    if (remainder.is_zero() || mode == Rounding::TowardZero) return quotient;

    Int twice = Int(boost::multiprecision::abs(remainder)) * 2;
    int cmp = twice.compare(denominator);
    bool away = false;
    switch (mode) {
        case Rounding::HalfTowardZero: away = cmp > 0; break;
        case Rounding::HalfAwayFromZero: away = cmp >= 0; break;
        case Rounding::HalfEven: away = cmp > 0 || (cmp == 0 && !Int(quotient % 2).is_zero()); break;
        case Rounding::TowardZero: break;
    }
    if (away) quotient += numerator.sign() < 0 ? -1 : 1;
    return quotient;
}

}  // namespace

std::optional<Decimal> Decimal::try_parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    unsigned scale = 0;
    std::size_t int_start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
    if (pos == int_start) return std::nullopt;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t frac_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
        if (pos == frac_start) return std::nullopt;
        scale = static_cast<unsigned>(pos - frac_start);
    }
    if (pos != text.size()) return std::nullopt;

    // cpp_int reads a leading 0 as an octal prefix
    auto first = digits.find_first_not_of('0');
    Int mantissa(first == std::string::npos ? std::string("0") : digits.substr(first));
    if (negative) mantissa = -mantissa;
    return from_scaled(std::move(mantissa), scale);
}

Decimal Decimal::parse(std::string_view text) {
    if (auto value = try_parse(text)) return *value;
    throw CalcError(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'");
}

Decimal Decimal::from_scaled(Int mantissa, unsigned scale) {
    Decimal d;
    d.mantissa_ = std::move(mantissa);
    d.scale_ = scale;
    d.normalize();
    return d;
}

void Decimal::normalize() {
    if (mantissa_.is_zero()) {
        scale_ = 0;
        return;
    }
    while (scale_ > 0 && Int(mantissa_ % 10).is_zero()) {
        mantissa_ /= 10;
        --scale_;
    }
}

std::string Decimal::to_string(unsigned min_fraction) const {
    unsigned scale = std::max(scale_, min_fraction);
    Int m = Int(boost::multiprecision::abs(mantissa_)) * pow10(scale - scale_);
    std::string digits = m.str();
    if (digits.size() <= scale) digits.insert(0, scale - digits.size() + 1, '0');

    std::string out;
    if (mantissa_.sign() < 0) out += '-';
    out.append(digits, 0, digits.size() - scale);
    if (scale > 0) {
        out += '.';
        out.append(digits, digits.size() - scale, scale);
    }
    return out;
}

Decimal Decimal::rounded(unsigned scale, Rounding mode) const {
    if (scale >= scale_) return *this;
    return from_scaled(round_quotient(mantissa_, pow10(scale_ - scale), mode), scale);
}

Decimal Decimal::divided_by(const Decimal& divisor, unsigned scale, Rounding mode) const {
    if (divisor.is_zero()) throw CalcError(ErrorKind::DivisionByZero, "division by zero");
    // (a / 10^sa) / (b / 10^sb) scaled by 10^scale
    // = a * 10^(scale + sb) / (b * 10^sa)
    Int numerator = mantissa_ * pow10(scale + divisor.scale_);
    Int denominator = divisor.mantissa_ * pow10(scale_);
    if (denominator.sign() < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return from_scaled(round_quotient(numerator, denominator, mode), scale);
}

Decimal Decimal::abs() const {
    Decimal d = *this;
    d.mantissa_ = boost::multiprecision::abs(d.mantissa_);
    return d;
}

double Decimal::to_double() const {
    // Parsing the exact text keeps the conversion correctly rounded.
    return std::stod(to_string());
}

std::int64_t Decimal::to_int64() const {
    if (scale_ != 0 || mantissa_ > std::numeric_limits<std::int64_t>::max() ||
        mantissa_ < std::numeric_limits<std::int64_t>::min()) {
        throw CalcError(ErrorKind::OutOfRange, "not a 64-bit integer: " + to_string());
    }
    return mantissa_.convert_to<std::int64_t>();
}

Decimal Decimal::operator-() const {
    Decimal d = *this;
    d.mantissa_ = -d.mantissa_;
    return d;
}

Decimal& Decimal::operator+=(const Decimal& rhs) {
    if (scale_ >= rhs.scale_) {
        mantissa_ += rhs.mantissa_ * pow10(scale_ - rhs.scale_);
    } else {
        mantissa_ = mantissa_ * pow10(rhs.scale_ - scale_) + rhs.mantissa_;
        scale_ = rhs.scale_;
    }
    normalize();
    return *this;
}

Decimal& Decimal::operator-=(const Decimal& rhs) { return *this += -rhs; }

Decimal& Decimal::operator*=(const Decimal& rhs) {
    mantissa_ *= rhs.mantissa_;
    scale_ += rhs.scale_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    int cmp;
    if (a.scale_ == b.scale_) {
        cmp = a.mantissa_.compare(b.mantissa_);
    } else if (a.scale_ > b.scale_) {
        cmp = a.mantissa_.compare(Int(b.mantissa_ * pow10(a.scale_ - b.scale_)));
    } else {
        cmp = Int(a.mantissa_ * pow10(b.scale_ - a.scale_)).compare(b.mantissa_);
    }
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace impactcalc
